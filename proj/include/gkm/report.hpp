#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkm/lefschetz.hpp"

namespace gkm {

/// Deterministic covector candidates: (1,2), (1,3), (2,1), then primitive integer
/// pairs by increasing max-norm up to 24. Other ranks use (1, t, t^2, ...) for t = 2..64.
std::vector<WeightVector> xi_candidates(std::size_t rank);

/// First candidate that is generic and index-increasing, if any.
std::optional<WeightVector> default_xi(const std::shared_ptr<const GkmGraph>& g);

/// The whole report as JSON text. Fields that depend on the size of xi (heights)
/// are left out, so positive rescaling changes nothing except "xi".
std::string report_json(const OrientedGkmGraph& og, const LefschetzReport& r);
std::string report_text(const OrientedGkmGraph& og, const LefschetzReport& r);

}  // namespace gkm
