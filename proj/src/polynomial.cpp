#include "gkm/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gkm/error.hpp"

namespace gkm {

bool WeightVector::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

Rational WeightVector::dot(const WeightVector& other) const {
  if (other.rank() != rank()) throw Error(ErrorKind::RankMismatch, "dot product of vectors of different rank");
  Rational sum;
  for (std::size_t i = 0; i < rank(); ++i) sum += components_[i] * other.components_[i];
  return sum;
}

std::string WeightVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) out += ",";
    out += components_[i].to_string();
  }
  return out + ")";
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  if (o.rank() != rank()) throw Error(ErrorKind::RankMismatch, "vector sum of different ranks");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] += o.components_[i];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  if (o.rank() != rank()) throw Error(ErrorKind::RankMismatch, "vector difference of different ranks");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] -= o.components_[i];
  return *this;
}

WeightVector& WeightVector::operator*=(const Rational& s) {
  for (auto& c : components_) c *= s;
  return *this;
}

std::optional<Rational> proportionality_factor(const WeightVector& b, const WeightVector& a) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, "proportionality of different ranks");
  std::optional<Rational> factor;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (!a[i].is_zero()) {
      factor = b[i] / a[i];
      break;
    }
  }
  if (!factor) throw Error(ErrorKind::InvalidArgument, "proportionality to the zero vector");
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (b[i] != *factor * a[i]) return std::nullopt;
  }
  return factor;
}

bool linearly_independent(const WeightVector& a, const WeightVector& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, "independence test of different ranks");
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = i + 1; j < a.rank(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return true;
    }
  }
  return false;
}

std::uint32_t total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void fill_monomials(std::size_t rank, std::uint32_t remaining, std::size_t pos, Monomial& current,
                    std::vector<Monomial>& out) {
  if (pos + 1 == rank) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    current[pos] = e;
    fill_monomials(rank, remaining - e, pos + 1, current, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t rank, std::uint32_t d) {
  std::vector<Monomial> out;
  if (rank == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial current(rank, 0);
  fill_monomials(rank, d, 0, current, out);
  return out;
}

Polynomial Polynomial::constant(std::size_t rank, const Rational& c) {
  Polynomial p(rank);
  p.add_term(Monomial(rank, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t rank, std::size_t index) {
  if (index >= rank) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Monomial m(rank, 0);
  m[index] = 1;
  return monomial(m, Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(rank_, 0)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != rank_) throw Error(ErrorKind::RankMismatch, "monomial length differs from rank");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = c.abs();
    const bool is_const = total_degree(m) == 0;
    bool need_star = false;
    if (is_const || magnitude != Rational(1)) {
      out << magnitude.to_string();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << "x" << (i + 1);
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

void Polynomial::require_rank(const Polynomial& o) const {
  if (o.rank_ != rank_) throw Error(ErrorKind::RankMismatch, "polynomials of different rank");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_rank(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_rank(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_rank(b);
  Polynomial out(a.rank_);
  Monomial m(a.rank_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial lin_form(const WeightVector& w) {
  Polynomial p(w.rank());
  Monomial m(w.rank(), 0);
  for (std::size_t i = 0; i < w.rank(); ++i) {
    m[i] = 1;
    p.add_term(m, w[i]);
    m[i] = 0;
  }
  return p;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial power(const Polynomial& a, unsigned exponent) {
  Polynomial out = Polynomial::constant(a.rank(), Rational(1));
  for (unsigned i = 0; i < exponent; ++i) out = out * a;
  return out;
}

LinearDivision reduce_by_linear(const Polynomial& f, const Polynomial& l) {
  if (f.rank() != l.rank()) throw Error(ErrorKind::RankMismatch, "division by a form of different rank");
  if (l.is_zero() || l.degree() != 1 || !l.is_homogeneous()) {
    throw Error(ErrorKind::InvalidArgument, "divisor must be a nonzero linear form");
  }
  const std::size_t rank = l.rank();
  std::size_t pivot = rank;
  Rational lead;
  for (std::size_t i = 0; i < rank && pivot == rank; ++i) {
    Monomial m(rank, 0);
    m[i] = 1;
    lead = l.coefficient(m);
    if (!lead.is_zero()) pivot = i;
  }

  Polynomial quotient(rank);
  Polynomial rest = f;
  // Each step removes a term containing x_pivot and adds terms of strictly
  // lower x_pivot-degree, so the loop terminates.
  for (;;) {
    auto it = std::find_if(rest.terms().begin(), rest.terms().end(),
                           [pivot](const auto& term) { return term.first[pivot] > 0; });
    if (it == rest.terms().end()) break;
    Monomial m = it->first;
    const Rational c = it->second / lead;
    m[pivot] -= 1;
    const Polynomial step = Polynomial::monomial(m, c);
    quotient += step;
    rest -= step * l;
  }
  return {std::move(quotient), std::move(rest)};
}

Polynomial divide_by_linear(const Polynomial& f, const Polynomial& l) {
  auto [quotient, remainder] = reduce_by_linear(f, l);
  if (!remainder.is_zero()) {
    throw Error(ErrorKind::NotDivisible, "(" + f.to_string() + ") is not divisible by (" + l.to_string() + ")");
  }
  return quotient;
}

bool congruent_mod_linear(const Polynomial& f, const Polynomial& g, const Polynomial& l) {
  return reduce_by_linear(f - g, l).remainder.is_zero();
}

Rational evaluate(const Polynomial& f, const WeightVector& point) {
  if (point.rank() != f.rank()) throw Error(ErrorKind::RankMismatch, "evaluation point of wrong rank");
  Rational sum;
  for (const auto& [m, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial homogeneous_component(const Polynomial& f, unsigned d) {
  Polynomial out(f.rank());
  for (const auto& [m, c] : f.terms()) {
    if (total_degree(m) == d) out.add_term(m, c);
  }
  return out;
}

}  // namespace gkm
