#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

/// Rational k-vector. Used for moment positions, edge weights and covectors.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::size_t rank) : components_(rank) {}
  explicit WeightVector(std::vector<Rational> components) : components_(std::move(components)) {}
  WeightVector(std::initializer_list<Rational> components) : components_(components) {}

  std::size_t rank() const { return components_.size(); }
  const Rational& operator[](std::size_t i) const { return components_[i]; }
  Rational& operator[](std::size_t i) { return components_[i]; }
  const std::vector<Rational>& components() const { return components_; }

  bool is_zero() const;
  Rational dot(const WeightVector& other) const;
  std::string to_string() const;

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  WeightVector& operator*=(const Rational& s);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(WeightVector a, const Rational& s) { return a *= s; }
  friend WeightVector operator*(const Rational& s, WeightVector a) { return a *= s; }
  friend WeightVector operator-(WeightVector a) { return a *= Rational(-1); }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> components_;
};

/// If b == s * a for some rational s, returns s. Requires a != 0.
std::optional<Rational> proportionality_factor(const WeightVector& b, const WeightVector& a);

/// True iff a and b are linearly independent.
bool linearly_independent(const WeightVector& a, const WeightVector& b);

using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);

/// Graded-lexicographic order, larger monomials first.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of total degree d in `rank` variables, in graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t rank, std::uint32_t d);

/// Polynomial over Q in x1..xk. Zero coefficients are never stored, so
/// structural equality is mathematical equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  explicit Polynomial(std::size_t rank = 0) : rank_(rank) {}

  static Polynomial constant(std::size_t rank, const Rational& c);
  static Polynomial variable(std::size_t rank, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  /// Zero counts as homogeneous of every degree.
  bool is_homogeneous() const;
  bool is_constant() const { return degree() <= 0; }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  void add_term(const Monomial& m, const Rational& c);

  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  void require_rank(const Polynomial& o) const;

  std::size_t rank_;
  TermMap terms_;
};

/// sum_i w_i x_i.
Polynomial lin_form(const WeightVector& w);

/// Throws Error(RankMismatch) when ranks differ.
Polynomial multiply(const Polynomial& a, const Polynomial& b);

Polynomial power(const Polynomial& a, unsigned exponent);

/// Exact quotient q with f = q * l for l a nonzero degree-1 form.
/// Throws Error(NotDivisible) when no such q exists.
Polynomial divide_by_linear(const Polynomial& f, const Polynomial& l);

/// Quotient and remainder of f by the linear form l. The remainder is free of
/// the eliminated variable (the first variable with nonzero coefficient in l)
/// and is zero iff l divides f.
struct LinearDivision {
  Polynomial quotient;
  Polynomial remainder;
};
LinearDivision reduce_by_linear(const Polynomial& f, const Polynomial& l);

bool congruent_mod_linear(const Polynomial& f, const Polynomial& g, const Polynomial& l);

Rational evaluate(const Polynomial& f, const WeightVector& point);

Polynomial homogeneous_component(const Polynomial& f, unsigned d);

/// Cohomological degree of a homogeneous polynomial: twice its polynomial degree.
inline int cohomological_degree(int polynomial_degree) { return 2 * polynomial_degree; }

}  // namespace gkm
