#pragma once

#include <cstddef>
#include <vector>

#include "gkm/graph_cohomology.hpp"

namespace gkm {

enum class EulerVariant { Full, Plus, Minus };

/// Product of outward weight forms at v: all edges (Full), descending edges
/// (Plus) or ascending edges (Minus).
Polynomial euler_class(const OrientedGkmGraph& og, std::size_t v, EulerVariant variant);

/// Exact localization integral sum_v f(v) / nu_v of a homogeneous class of
/// polynomial degree n. The sum is brought over the common denominator
/// prod_v nu_v and the numerator must be a constant multiple of it.
///
/// Throws Error(DegreeError) if f is not homogeneous of degree n and
/// Error(NonConstant) if the quotient is not a constant.
Rational integrate(const OrientedGkmGraph& og, const CohomologyElement& f);

/// For homogeneous f with degree below n: checks that the localization
/// numerator vanishes identically. Throws Error(NonZero) otherwise,
/// Error(DegreeError) for degree >= n.
bool integrate_low_degree_zero(const OrientedGkmGraph& og, const CohomologyElement& f);

/// sum_v f(v)(point) / nu_v(point). Requires no nu_v to vanish at `point`.
Rational localization_sum_at(const OrientedGkmGraph& og, const CohomologyElement& f, const WeightVector& point);

/// Deterministic points (1, t) for t = 2, 3, 5, 7, ... (rank 2; higher ranks
/// continue with further primes) at which no Euler class vanishes.
std::vector<WeightVector> generic_points(const OrientedGkmGraph& og, std::size_t count);

}  // namespace gkm
