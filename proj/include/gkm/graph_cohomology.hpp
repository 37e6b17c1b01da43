#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "gkm/gkm_graph.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

/// Assignment of a polynomial to every vertex satisfying the edge congruences
/// f(a) = f(b) mod alpha_e. Construct through make_class() or the operations
/// below, all of which check the congruences.
class CohomologyElement {
 public:
  CohomologyElement(std::shared_ptr<const GkmGraph> graph, std::vector<Polynomial> values);

  const GkmGraph& graph() const { return *graph_; }
  const std::shared_ptr<const GkmGraph>& graph_ptr() const { return graph_; }
  const std::vector<Polynomial>& values() const { return values_; }
  const Polynomial& at(std::size_t v) const { return values_.at(v); }

  bool is_zero() const;
  std::vector<std::size_t> support() const;
  /// Polynomial degree if every value is homogeneous of one common degree
  /// (zero values are ignored); nullopt otherwise. The zero class reports 0.
  std::optional<int> homogeneous_degree() const;

  friend bool operator==(const CohomologyElement& a, const CohomologyElement& b) {
    return a.graph_ == b.graph_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const GkmGraph> graph_;
  std::vector<Polynomial> values_;
};

bool is_class(const GkmGraph& g, const std::vector<Polynomial>& values);

/// Throws Error(NotAClass) if some congruence fails.
CohomologyElement make_class(std::shared_ptr<const GkmGraph> g, std::vector<Polynomial> values);

CohomologyElement unity(std::shared_ptr<const GkmGraph> g);

enum class ClassOp { Add, Multiply };

/// Pointwise sum or product; the result is re-checked to be a class.
CohomologyElement combine(const CohomologyElement& a, const CohomologyElement& b, ClassOp op);
CohomologyElement scale(const CohomologyElement& a, const Rational& s);
CohomologyElement operator+(const CohomologyElement& a, const CohomologyElement& b);
CohomologyElement operator-(const CohomologyElement& a, const CohomologyElement& b);
CohomologyElement operator*(const CohomologyElement& a, const CohomologyElement& b);

/// Basis of the Q-space of homogeneous classes of polynomial degree d.
std::vector<CohomologyElement> basis(std::shared_ptr<const GkmGraph> g, unsigned d);

/// Dimension of degree-d classes supported inside `support` (vertex indices).
std::size_t supported_class_dimension(const GkmGraph& g, const std::vector<std::size_t>& support, unsigned d);

/// sum_v binom(d - d_v + k - 1, k - 1), the rank predicted by a free Thom basis.
std::size_t predicted_dimension(const OrientedGkmGraph& og, unsigned d);

enum class ThomDirection { Plus, Minus };

/// Product of the outward weights along descending (Plus) or ascending (Minus) edges at v.
Polynomial thom_normalization(const OrientedGkmGraph& og, std::size_t v, ThomDirection dir);

/// The unique homogeneous class of degree d_v (Plus) or n - d_v (Minus),
/// supported on the ascending (descending) reachable set of v, with value
/// thom_normalization(v) at v.
///
/// Throws Error(NotIndexIncreasing), Error(NonUnique) when the constraints
/// leave freedom, Error(Infeasible) when they are inconsistent.
CohomologyElement thom_class(const OrientedGkmGraph& og, std::size_t v, ThomDirection dir);

struct ThomBasis {
  std::vector<CohomologyElement> plus;   ///< indexed by vertex
  std::vector<CohomologyElement> minus;  ///< indexed by vertex
};

ThomBasis thom_basis(const OrientedGkmGraph& og);

/// v -> <mu(v), x>. Throws Error(NotAClass) if the moment positions are not
/// edge-compatible.
CohomologyElement equivariant_symplectic(const std::shared_ptr<const GkmGraph>& g);
CohomologyElement equivariant_symplectic(const OrientedGkmGraph& og);

/// Constant class with value c everywhere.
CohomologyElement constant_class(std::shared_ptr<const GkmGraph> g, const Rational& c);

/// For a degree-1 class with f(to) = 0, the scalar k with
/// f(from) = k * <weight read from `from` toward `to`, x>.
/// Throws Error(NotDivisible) if no such scalar exists and
/// Error(InvalidArgument) if f(to) != 0 or the vertices are not adjacent.
Rational scalar_multiple_of_weight(const CohomologyElement& f, std::size_t from, std::size_t to);

}  // namespace gkm
