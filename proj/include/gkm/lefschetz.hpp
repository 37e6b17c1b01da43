#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/graph_cohomology.hpp"
#include "gkm/linear_algebra.hpp"
#include "gkm/moment_geometry.hpp"

namespace gkm {

/// Index-two vertex p and index-four vertex q of a valence-3, rank-2 graph.
struct CoefficientPair {
  std::size_t p = 0;
  std::size_t q = 0;
  bool adjacent = false;
  Rational l;  ///< (mu(q) - mu(p)) / alpha_{p,q}, zero when not adjacent
  Rational c;  ///< tau_p^+(q) / alpha_{q,v}, zero when not adjacent
};

/// Throws Error(ScopeError) unless valence 3, rank 2, index-increasing, d_p = 1, d_q = 2.
/// Throws Error(NotParallel) if mu(q) - mu(p) is not a multiple of the edge weight.
Rational l_pq(const OrientedGkmGraph& og, std::size_t p, std::size_t q);

/// Uses the unique lower neighbour v != p of q. Throws Error(AmbiguousBelowNeighbor)
/// if there is not exactly one, Error(Mismatch) if tau_p^+(v) != 0.
Rational c_pq(const OrientedGkmGraph& og, std::size_t p, std::size_t q);
Rational c_pq(const OrientedGkmGraph& og, const ThomBasis& thom, std::size_t p, std::size_t q);

CoefficientPair coefficient_pair(const OrientedGkmGraph& og, const ThomBasis& thom, std::size_t p, std::size_t q);

/// Rows are the index-four vertices q_j, columns the index-two vertices p_k,
/// both ordered by height then id.
struct AMatrix {
  std::vector<std::size_t> p;
  std::vector<std::size_t> q;
  RationalMatrix entries;
};

/// a_{jk} = integral of tau_{p_k}^+ (w - mu(p_k)) tau_{q_j}^-, also computed from
/// the single surviving term at q_j. Throws Error(Mismatch) if the two disagree.
AMatrix a_matrix(const OrientedGkmGraph& og);
AMatrix a_matrix(const OrientedGkmGraph& og, const ThomBasis& thom);

struct HrMatrix {
  int k = 0;                           ///< cohomological degree
  std::vector<std::size_t> rows;       ///< tau^+ basis in degree k
  std::vector<std::size_t> columns;    ///< tau^+ basis in degree k (k <= n) or 2n - k
  unsigned omega_power = 0;
  RationalMatrix entries;
};

/// For even k <= n: entries integral(tau_u^+ tau_v^+ w^{n-k}) over 2d_u = 2d_v = k.
/// For even n < k <= 2n the ordinary Poincare pairing of degree k against degree 2n - k.
/// Throws Error(DegreeError) for odd or out-of-range k.
HrMatrix hr_matrix(const OrientedGkmGraph& og, int k);
HrMatrix hr_matrix(const OrientedGkmGraph& og, const ThomBasis& thom, int k);

struct CoefficientWitness {
  std::size_t p = 0;
  std::size_t q = 0;
  Rational a;
  Rational c;
  Rational l;
};

/// Checks a_{jk} = -c * l for every pair and a_{jk} != 0 iff adjacent.
/// Throws Error(Mismatch).
std::vector<CoefficientWitness> check_coefficient_identity(const OrientedGkmGraph& og);

struct ColumnWitness {
  Rational t0;
  Rational second;  ///< a_22 + t0 a_21
  bool noncollinear = false;
};

/// For types (d) and (f): t0 with a_12 + t0 a_11 = 0 is nonzero and a_22 + t0 a_21 != 0;
/// mu(r), mu(p_1), mu(p_2) are not collinear. Throws Error(TypeMismatch) for other
/// types, Error(ConditionViolated) when a condition fails.
ColumnWitness check_column_independence(const OrientedGkmGraph& og);

struct CyclicSignWitness {
  std::vector<std::size_t> row_order;  ///< row permutation putting the zeros on the diagonal
  Rational determinant;
  bool all_convex = false;
};

/// Type (g): after permuting rows so that zeros sit on the diagonal the determinant is
/// a12 a23 a31 + a13 a21 a32; if every ascending cycle is convex, every nonzero entry is
/// negative and the determinant is negative. Throws Error(TypeMismatch) or
/// Error(ConditionViolated).
CyclicSignWitness check_cyclic_sign_pattern(const OrientedGkmGraph& og);

struct LefschetzReport {
  std::vector<std::size_t> betti;
  std::vector<int> down_degree;
  bool index_increasing = false;
  std::vector<HrMatrix> hr;
  std::map<int, Rational> hr_determinant;
  std::map<int, bool> verdict;
  bool hard_lefschetz = false;

  // Only for valence 3, rank 2.
  bool six_dimensional = false;
  std::optional<AMatrix> a;
  std::optional<Rational> a_determinant;
  std::vector<CoefficientPair> pairs;
  std::optional<TableType> table;
  std::vector<CycleShape> cycles;
  std::vector<SignWitness> sign_witnesses;
  std::optional<ColumnWitness> column_witness;
  std::optional<CyclicSignWitness> cyclic_witness;
  Rational volume;  ///< integral of w^n
};

/// Requires an index-increasing orientation (Error(NotIndexIncreasing)).
LefschetzReport hard_lefschetz_report(const OrientedGkmGraph& og);

}  // namespace gkm
