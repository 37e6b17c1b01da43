#include "gkm/localization.hpp"

#include "gkm/error.hpp"

namespace gkm {

Polynomial euler_class(const OrientedGkmGraph& og, std::size_t v, EulerVariant variant) {
  Polynomial out = Polynomial::constant(og.rank(), Rational(1));
  const auto& incidences = variant == EulerVariant::Full    ? og.graph().incident(v)
                           : variant == EulerVariant::Plus ? og.descending(v)
                                                           : og.ascending(v);
  for (const auto& inc : incidences) out = out * lin_form(inc.outward);
  return out;
}

namespace {

// N = sum_v f(v) prod_{w != v} nu_w and D = prod_v nu_v.
std::pair<Polynomial, Polynomial> localization_fraction(const OrientedGkmGraph& og, const CohomologyElement& f) {
  const std::size_t count = og.vertex_count();
  std::vector<Polynomial> nu;
  for (std::size_t v = 0; v < count; ++v) nu.push_back(euler_class(og, v, EulerVariant::Full));

  const Polynomial one = Polynomial::constant(og.rank(), Rational(1));
  std::vector<Polynomial> prefix(count + 1, one), suffix(count + 1, one);
  for (std::size_t v = 0; v < count; ++v) prefix[v + 1] = prefix[v] * nu[v];
  for (std::size_t v = count; v-- > 0;) suffix[v] = suffix[v + 1] * nu[v];

  Polynomial numerator(og.rank());
  for (std::size_t v = 0; v < count; ++v) {
    if (f.at(v).is_zero()) continue;
    numerator += f.at(v) * (prefix[v] * suffix[v + 1]);
  }
  return {std::move(numerator), std::move(prefix[count])};
}

int checked_degree(const CohomologyElement& f) {
  const auto degree = f.homogeneous_degree();
  if (!degree) throw Error(ErrorKind::DegreeError, "class is not homogeneous");
  return *degree;
}

}  // namespace

Rational integrate(const OrientedGkmGraph& og, const CohomologyElement& f) {
  const int degree = checked_degree(f);
  if (!f.is_zero() && degree != static_cast<int>(og.valence())) {
    throw Error(ErrorKind::DegreeError, "integrand has degree " + std::to_string(degree) + ", expected " +
                                            std::to_string(og.valence()));
  }
  const auto [numerator, denominator] = localization_fraction(og, f);
  if (numerator.is_zero()) return Rational();
  const auto& [lead_monomial, lead_coeff] = *denominator.terms().begin();
  const Rational c = numerator.coefficient(lead_monomial) / lead_coeff;
  if (numerator != denominator * c) {
    throw Error(ErrorKind::NonConstant, "localization sum is not a constant");
  }
  return c;
}

bool integrate_low_degree_zero(const OrientedGkmGraph& og, const CohomologyElement& f) {
  const int degree = checked_degree(f);
  if (!f.is_zero() && degree >= static_cast<int>(og.valence())) {
    throw Error(ErrorKind::DegreeError, "integrand degree is not below the valence");
  }
  if (!localization_fraction(og, f).first.is_zero()) {
    throw Error(ErrorKind::NonZero, "localization numerator of a low-degree class does not vanish");
  }
  return true;
}

Rational localization_sum_at(const OrientedGkmGraph& og, const CohomologyElement& f, const WeightVector& point) {
  Rational sum;
  for (std::size_t v = 0; v < og.vertex_count(); ++v) {
    const Rational nu = evaluate(euler_class(og, v, EulerVariant::Full), point);
    if (nu.is_zero()) throw Error(ErrorKind::InvalidArgument, "evaluation point kills an Euler class");
    sum += evaluate(f.at(v), point) / nu;
  }
  return sum;
}

std::vector<WeightVector> generic_points(const OrientedGkmGraph& og, std::size_t count) {
  static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  std::vector<WeightVector> out;
  const std::size_t n_primes = std::size(primes);
  for (std::size_t start = 0; out.size() < count && start + og.rank() <= n_primes + 1; ++start) {
    WeightVector point(og.rank());
    point[0] = Rational(1);
    for (std::size_t i = 1; i < og.rank(); ++i) point[i] = Rational(primes[start + i - 1]);
    bool ok = true;
    for (std::size_t v = 0; v < og.vertex_count() && ok; ++v) {
      for (const auto& inc : og.graph().incident(v)) {
        if (inc.outward.dot(point).is_zero()) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(point);
  }
  if (out.size() < count) throw Error(ErrorKind::InvalidArgument, "ran out of generic evaluation points");
  return out;
}

}  // namespace gkm
