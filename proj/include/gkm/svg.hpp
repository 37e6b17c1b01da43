#pragma once

#include <string>

#include "gkm/gkm_graph.hpp"

namespace gkm {

/// SVG 1.1 drawing of the moment image: shaded hull, edges with arrowheads
/// pointing up in the xi order, vertices labelled "id (d)", and an xi arrow in
/// the corner. Byte-identical for identical input. Throws Error(ScopeError)
/// unless rank 2.
std::string render_svg(const OrientedGkmGraph& og);

}  // namespace gkm
