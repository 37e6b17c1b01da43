#include "doctest.h"
#include "gkm/error.hpp"
#include "gkm/localization.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gkm;
using testing::corpus_oriented;
using testing::x;

namespace {

CohomologyElement omega_power(const OrientedGkmGraph& og, unsigned e) {
  auto out = unity(og.graph_ptr());
  const auto omega = equivariant_symplectic(og);
  for (unsigned i = 0; i < e; ++i) out = out * omega;
  return out;
}

// Evaluates a library class at a plain point.
oracle::Q value_at(const CohomologyElement& f, std::size_t v, const oracle::Vec2& p) {
  return evaluate(f.at(v), WeightVector{Rational(p[0]), Rational(p[1])}).raw();
}

}  // namespace

TEST_CASE("Euler classes") {
  const auto og = corpus_oriented("cp3-k4");
  const auto& g = og.graph();
  const std::size_t d = g.index_of("D");
  CHECK(euler_class(og, d, EulerVariant::Full) ==
        (x(0) + Rational(2) * x(1)) * (Rational(2) * x(0) + Rational(2) * x(1)) * (x(0) + Rational(3) * x(1)));
  CHECK(euler_class(og, bottom_vertex(og), EulerVariant::Plus) == Polynomial::constant(2, Rational(1)));
  CHECK(euler_class(og, top_vertex(og), EulerVariant::Minus) == Polynomial::constant(2, Rational(1)));
  for (const auto& name : corpus_names()) {
    const auto o = corpus_oriented(name);
    for (std::size_t v = 0; v < o.vertex_count(); ++v) {
      const auto full = euler_class(o, v, EulerVariant::Full);
      CHECK(full == euler_class(o, v, EulerVariant::Plus) * euler_class(o, v, EulerVariant::Minus));
      CHECK(full.degree() == 3);
    }
  }
}

TEST_CASE("volume of cp3-k4") {
  const auto og = corpus_oriented("cp3-k4");
  const Rational exact = integrate(og, omega_power(og, 3));
  // With outward weights and mu(t) - mu(i) a positive multiple of the weight, the
  // localization sum of w^n is (-1)^n n! vol; the unprojected simplex has n! vol = 1.
  CHECK(exact == Rational(-1));
  const auto plain = oracle::plain(og.graph());
  for (const auto& p : oracle::evaluation_points(plain, 2)) {
    const oracle::Q direct = oracle::abbv_at(
        plain, [&](std::size_t v, const oracle::Vec2& pt) { return oracle::Q(oracle::dot(plain.mu[v], pt) *
                                                                             oracle::dot(plain.mu[v], pt) *
                                                                             oracle::dot(plain.mu[v], pt)); },
        p);
    CHECK(direct == exact.raw());
  }
  for (const auto& p : generic_points(og, 3)) {
    CHECK(localization_sum_at(og, omega_power(og, 3), p) == exact);
  }
}

TEST_CASE("integrate on Thom classes") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto og = corpus_oriented(name);
    const auto thom = thom_basis(og);
    CHECK(integrate(og, thom.plus[top_vertex(og)]) == Rational(1));
    for (std::size_t v = 0; v < og.vertex_count(); ++v) {
      CHECK(integrate(og, thom.plus[v] * thom.minus[v]) == Rational(1));
    }
  }
}

TEST_CASE("integrate is linear") {
  const auto og = corpus_oriented("flag-su3");
  const auto thom = thom_basis(og);
  const auto f = omega_power(og, 3);
  const auto g = thom.plus[top_vertex(og)];
  CHECK(integrate(og, scale(f, Rational(2, 3)) + scale(g, Rational(-5))) ==
        Rational(2, 3) * integrate(og, f) - Rational(5) * integrate(og, g));
}

TEST_CASE("integration errors") {
  const auto og = corpus_oriented("cp3-k4");
  try {
    integrate(og, omega_power(og, 2));
    FAIL("expected DegreeError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeError);
  }
  CHECK_THROWS_AS(integrate(og, unity(og.graph_ptr()) + equivariant_symplectic(og)), Error);
  // A non-class assignment yields a non-constant quotient.
  std::vector<Polynomial> values(4, Polynomial(2));
  values[0] = x(0) * x(0) * x(1);
  try {
    integrate(og, CohomologyElement(og.graph_ptr(), values));
    FAIL("expected NonConstant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonConstant);
  }
  try {
    std::vector<Polynomial> lone(4, Polynomial(2));
    lone[0] = x(0);
    integrate_low_degree_zero(og, CohomologyElement(og.graph_ptr(), lone));
    FAIL("expected NonZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonZero);
  }
  CHECK_THROWS_AS(integrate_low_degree_zero(og, omega_power(og, 3)), Error);
}

TEST_CASE("low-degree classes integrate to zero") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto og = corpus_oriented(name);
    const auto plain = oracle::plain(og.graph());
    const auto points = oracle::evaluation_points(plain, 2);
    CHECK(integrate_low_degree_zero(og, unity(og.graph_ptr())));
    CHECK(integrate_low_degree_zero(og, equivariant_symplectic(og)));
    for (unsigned d = 0; d < 3; ++d) {
      for (const auto& b : basis(og.graph_ptr(), d)) {
        CHECK(integrate_low_degree_zero(og, b));
        for (const auto& p : points) {
          CHECK(oracle::abbv_at(plain, [&](std::size_t v, const oracle::Vec2& pt) { return value_at(b, v, pt); }, p) ==
                0);
        }
      }
    }
  }
}

TEST_CASE("exact quotient agrees with point evaluation for degree-three classes") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto og = corpus_oriented(name);
    const auto plain = oracle::plain(og.graph());
    const auto points = oracle::evaluation_points(plain, 2);
    REQUIRE(points[0] != points[1]);
    for (const auto& b : basis(og.graph_ptr(), 3)) {
      const Rational exact = integrate(og, b);
      for (const auto& p : points) {
        CHECK(oracle::abbv_at(plain, [&](std::size_t v, const oracle::Vec2& pt) { return value_at(b, v, pt); }, p) ==
              exact.raw());
      }
    }
  }
}
