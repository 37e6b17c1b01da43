#include "gkm/lefschetz.hpp"

#include <algorithm>
#include <numeric>

#include "gkm/error.hpp"
#include "gkm/localization.hpp"

namespace gkm {

namespace {

void require_pair_scope(const OrientedGkmGraph& og, std::size_t p, std::size_t q) {
  if (og.valence() != 3 || og.rank() != 2) throw Error(ErrorKind::ScopeError, "needs valence 3 and rank 2");
  if (!is_index_increasing(og)) throw Error(ErrorKind::ScopeError, "orientation is not index-increasing");
  if (og.down_degree(p) != 1 || og.down_degree(q) != 2) {
    throw Error(ErrorKind::ScopeError, "expected an index-two and an index-four vertex, got " + og.graph().id(p) +
                                           " and " + og.graph().id(q));
  }
}

void require_six_dimensional(const OrientedGkmGraph& og) {
  if (og.valence() != 3 || og.rank() != 2) throw Error(ErrorKind::ScopeError, "needs valence 3 and rank 2");
  if (!is_index_increasing(og)) throw Error(ErrorKind::NotIndexIncreasing, "orientation is not index-increasing");
}

// The constant c with num = c * den.
Rational constant_ratio(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "ratio by the zero polynomial");
  if (num.is_zero()) return Rational();
  const auto& [mono, coeff] = *den.terms().begin();
  const Rational c = num.coefficient(mono) / coeff;
  if (num != den * c) throw Error(ErrorKind::NonConstant, "ratio is not a constant");
  return c;
}

CohomologyElement power_of(const CohomologyElement& f, unsigned e) {
  CohomologyElement out = unity(f.graph_ptr());
  for (unsigned i = 0; i < e; ++i) out = out * f;
  return out;
}

CohomologyElement shifted_symplectic(const OrientedGkmGraph& og, const CohomologyElement& omega, std::size_t p) {
  std::vector<Polynomial> shift(og.vertex_count(), lin_form(og.graph().mu(p)));
  return omega - make_class(og.graph_ptr(), std::move(shift));
}

std::size_t other_lower_neighbor(const OrientedGkmGraph& og, std::size_t p, std::size_t q) {
  std::vector<std::size_t> below;
  for (const auto& inc : og.descending(q)) {
    if (inc.neighbor != p) below.push_back(inc.neighbor);
  }
  if (below.size() != 1) {
    throw Error(ErrorKind::AmbiguousBelowNeighbor,
                og.graph().id(q) + " has " + std::to_string(below.size()) + " lower neighbours besides " + og.graph().id(p));
  }
  return below.front();
}

}  // namespace

Rational l_pq(const OrientedGkmGraph& og, std::size_t p, std::size_t q) {
  require_pair_scope(og, p, q);
  const auto& g = og.graph();
  if (!g.adjacent(p, q)) return Rational();
  const auto factor = proportionality_factor(g.mu(q) - g.mu(p), g.weight(p, q));
  if (!factor || factor->sign() <= 0) {
    throw Error(ErrorKind::NotParallel, "mu(" + g.id(q) + ") - mu(" + g.id(p) + ") is not a positive multiple of the weight");
  }
  return *factor;
}

Rational c_pq(const OrientedGkmGraph& og, const ThomBasis& thom, std::size_t p, std::size_t q) {
  require_pair_scope(og, p, q);
  if (!og.graph().adjacent(p, q)) return Rational();
  const std::size_t v = other_lower_neighbor(og, p, q);
  const CohomologyElement& tau = thom.plus.at(p);
  if (!tau.at(v).is_zero()) {
    throw Error(ErrorKind::Mismatch, "Thom class of " + og.graph().id(p) + " does not vanish at " + og.graph().id(v));
  }
  return scalar_multiple_of_weight(tau, q, v);
}

Rational c_pq(const OrientedGkmGraph& og, std::size_t p, std::size_t q) {
  require_pair_scope(og, p, q);
  if (!og.graph().adjacent(p, q)) return Rational();
  ThomBasis thom;
  thom.plus.assign(og.vertex_count(), unity(og.graph_ptr()));
  thom.plus[p] = thom_class(og, p, ThomDirection::Plus);
  return c_pq(og, thom, p, q);
}

CoefficientPair coefficient_pair(const OrientedGkmGraph& og, const ThomBasis& thom, std::size_t p, std::size_t q) {
  CoefficientPair out;
  out.p = p;
  out.q = q;
  out.adjacent = og.graph().adjacent(p, q);
  out.l = l_pq(og, p, q);
  out.c = c_pq(og, thom, p, q);
  return out;
}

AMatrix a_matrix(const OrientedGkmGraph& og, const ThomBasis& thom) {
  require_six_dimensional(og);
  AMatrix out;
  out.p = vertices_of_down_degree(og, 1);
  out.q = vertices_of_down_degree(og, 2);
  out.entries = RationalMatrix(out.q.size(), out.p.size());
  const CohomologyElement omega = equivariant_symplectic(og);
  for (std::size_t k = 0; k < out.p.size(); ++k) {
    const std::size_t p = out.p[k];
    const CohomologyElement lowered = thom.plus.at(p) * shifted_symplectic(og, omega, p);
    for (std::size_t j = 0; j < out.q.size(); ++j) {
      const std::size_t q = out.q[j];
      const Rational full = integrate(og, lowered * thom.minus.at(q));
      const Rational local = constant_ratio(lowered.at(q), thom_normalization(og, q, ThomDirection::Plus));
      if (full != local) {
        throw Error(ErrorKind::Mismatch, "a-matrix entry (" + og.graph().id(q) + ", " + og.graph().id(p) +
                                             "): " + full.to_string() + " vs " + local.to_string());
      }
      out.entries(j, k) = full;
    }
  }
  return out;
}

AMatrix a_matrix(const OrientedGkmGraph& og) { return a_matrix(og, thom_basis(og)); }

HrMatrix hr_matrix(const OrientedGkmGraph& og, const ThomBasis& thom, int k) {
  const int n = static_cast<int>(og.valence());
  if (k < 0 || k > 2 * n || k % 2 != 0) {
    throw Error(ErrorKind::DegreeError, "no Hodge-Riemann form in degree " + std::to_string(k));
  }
  if (!is_index_increasing(og)) throw Error(ErrorKind::NotIndexIncreasing, "orientation is not index-increasing");
  HrMatrix out;
  out.k = k;
  out.rows = vertices_of_down_degree(og, k / 2);
  if (k <= n) {
    out.columns = out.rows;
    out.omega_power = static_cast<unsigned>(n - k);
  } else {
    out.columns = vertices_of_down_degree(og, n - k / 2);
  }
  const CohomologyElement omega_power = power_of(equivariant_symplectic(og), out.omega_power);
  out.entries = RationalMatrix(out.rows.size(), out.columns.size());
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const CohomologyElement left = thom.plus.at(out.rows[i]) * omega_power;
    for (std::size_t j = 0; j < out.columns.size(); ++j) {
      out.entries(i, j) = integrate(og, left * thom.plus.at(out.columns[j]));
    }
  }
  return out;
}

HrMatrix hr_matrix(const OrientedGkmGraph& og, int k) { return hr_matrix(og, thom_basis(og), k); }

namespace {

std::vector<CoefficientWitness> coefficient_identity(const OrientedGkmGraph& og, const ThomBasis& thom, const AMatrix& a) {
  const auto& g = og.graph();
  std::vector<CoefficientWitness> out;
  for (std::size_t j = 0; j < a.q.size(); ++j) {
    bool row_nonzero = false;
    for (std::size_t k = 0; k < a.p.size(); ++k) {
      const CoefficientPair pair = coefficient_pair(og, thom, a.p[k], a.q[j]);
      CoefficientWitness w{a.p[k], a.q[j], a.entries(j, k), pair.c, pair.l};
      const std::string where = "(" + g.id(w.p) + ", " + g.id(w.q) + ")";
      if (w.a != -(w.c * w.l)) {
        throw Error(ErrorKind::Mismatch, "a != -c*l at " + where + ": " + w.a.to_string() + " vs " +
                                             (-(w.c * w.l)).to_string());
      }
      if (w.a.is_zero() == pair.adjacent) throw Error(ErrorKind::Mismatch, "a vanishes iff adjacent fails at " + where);
      row_nonzero = row_nonzero || !w.a.is_zero();
      out.push_back(std::move(w));
    }
    if (!row_nonzero) throw Error(ErrorKind::Mismatch, "a-matrix row of " + g.id(a.q[j]) + " is zero");
  }
  return out;
}

ColumnWitness column_independence(const OrientedGkmGraph& og, const AMatrix& a, char label) {
  if (label != 'd' && label != 'f') {
    throw Error(ErrorKind::TypeMismatch, std::string("column independence applies to types (d) and (f), not (") + label + ")");
  }
  if (a.p.size() != 2 || a.q.size() != 2) throw Error(ErrorKind::TypeMismatch, "expected b_2 = 2");
  const auto& m = a.entries;
  if (m(0, 0).is_zero()) throw Error(ErrorKind::ConditionViolated, "a_11 vanishes");
  ColumnWitness w;
  w.t0 = -m(0, 1) / m(0, 0);
  w.second = m(1, 1) + w.t0 * m(1, 0);
  const auto& g = og.graph();
  w.noncollinear = orientation(g.mu(top_vertex(og)), g.mu(a.p[0]), g.mu(a.p[1])) != 0;
  if (w.t0.is_zero()) throw Error(ErrorKind::ConditionViolated, "t0 vanishes");
  if (w.second.is_zero()) throw Error(ErrorKind::ConditionViolated, "the columns of the a-matrix are dependent");
  if (!w.noncollinear) throw Error(ErrorKind::ConditionViolated, "mu(r), mu(p1), mu(p2) are collinear");
  return w;
}

CyclicSignWitness cyclic_sign_pattern(const OrientedGkmGraph& og, const AMatrix& a, char label) {
  if (label != 'g') throw Error(ErrorKind::TypeMismatch, std::string("sign pattern applies to type (g), not (") + label + ")");
  if (a.p.size() != 3 || a.q.size() != 3) throw Error(ErrorKind::TypeMismatch, "expected b_2 = 3");
  CyclicSignWitness w;
  std::vector<std::size_t> perm(3);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    if (a.entries(perm[0], 0).is_zero() && a.entries(perm[1], 1).is_zero() && a.entries(perm[2], 2).is_zero()) {
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found) throw Error(ErrorKind::ConditionViolated, "no row order puts the zeros of the a-matrix on the diagonal");
  w.row_order = perm;

  RationalMatrix b(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) b(i, j) = a.entries(perm[i], j);
  }
  w.determinant = determinant(b);
  const Rational cyclic = b(0, 1) * b(1, 2) * b(2, 0) + b(0, 2) * b(1, 0) * b(2, 1);
  if (cyclic != w.determinant) throw Error(ErrorKind::ConditionViolated, "determinant is not the cyclic sum");

  w.all_convex = true;
  for (std::size_t p : a.p) {
    const CycleShape s = cycle_shape(og, p);
    w.all_convex = w.all_convex && !s.triangular && s.tetragon == TetragonClass::Convex;
  }
  if (w.all_convex) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j && b(i, j).sign() >= 0) throw Error(ErrorKind::ConditionViolated, "off-diagonal entry is not negative");
      }
    }
    if (w.determinant.sign() >= 0) throw Error(ErrorKind::ConditionViolated, "determinant is not negative");
  }
  return w;
}

}  // namespace

std::vector<CoefficientWitness> check_coefficient_identity(const OrientedGkmGraph& og) {
  const ThomBasis thom = thom_basis(og);
  return coefficient_identity(og, thom, a_matrix(og, thom));
}

ColumnWitness check_column_independence(const OrientedGkmGraph& og) {
  const char label = classify_type(og).label;
  if (label != 'd' && label != 'f') return column_independence(og, AMatrix{}, label);
  return column_independence(og, a_matrix(og), label);
}

CyclicSignWitness check_cyclic_sign_pattern(const OrientedGkmGraph& og) {
  const char label = classify_type(og).label;
  if (label != 'g') return cyclic_sign_pattern(og, AMatrix{}, label);
  return cyclic_sign_pattern(og, a_matrix(og), label);
}

LefschetzReport hard_lefschetz_report(const OrientedGkmGraph& og) {
  if (!is_index_increasing(og)) throw Error(ErrorKind::NotIndexIncreasing, "orientation is not index-increasing");
  LefschetzReport r;
  const MorseProfile profile = morse_profile(og);
  r.betti = profile.betti;
  r.down_degree = profile.down_degree;
  r.index_increasing = true;

  const ThomBasis thom = thom_basis(og);
  const int n = static_cast<int>(og.valence());
  r.hard_lefschetz = true;
  for (int k = 0; k <= 2 * n; k += 2) {
    HrMatrix hr = hr_matrix(og, thom, k);
    const Rational det = determinant(hr.entries);
    r.hr_determinant[k] = det;
    r.verdict[k] = !det.is_zero();
    r.hard_lefschetz = r.hard_lefschetz && r.verdict[k];
    r.hr.push_back(std::move(hr));
  }
  r.volume = integrate(og, power_of(equivariant_symplectic(og), static_cast<unsigned>(n)));

  if (og.valence() != 3 || og.rank() != 2) return r;
  r.six_dimensional = true;
  check_six_dimensional_structure(og);
  r.a = a_matrix(og, thom);
  r.a_determinant = determinant(r.a->entries);
  if (r.a_determinant->is_zero() != r.hr_determinant.at(2).is_zero()) {
    throw Error(ErrorKind::Mismatch, "a-matrix and HR_2 disagree on nonsingularity");
  }
  for (std::size_t q : r.a->q) {
    for (std::size_t p : r.a->p) r.pairs.push_back(coefficient_pair(og, thom, p, q));
  }
  coefficient_identity(og, thom, *r.a);
  r.table = classify_type(og);
  for (std::size_t p : r.a->p) r.cycles.push_back(cycle_shape(og, p));
  r.sign_witnesses = check_sign_conditions(og);
  if (r.table->label == 'd' || r.table->label == 'f') r.column_witness = column_independence(og, *r.a, r.table->label);
  if (r.table->label == 'g') r.cyclic_witness = cyclic_sign_pattern(og, *r.a, r.table->label);
  return r;
}

}  // namespace gkm
