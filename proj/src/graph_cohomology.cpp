#include "gkm/graph_cohomology.hpp"

#include <algorithm>
#include <map>

#include "gkm/error.hpp"
#include "gkm/linear_algebra.hpp"

namespace gkm {

CohomologyElement::CohomologyElement(std::shared_ptr<const GkmGraph> graph, std::vector<Polynomial> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
  if (!graph_) throw Error(ErrorKind::InvalidArgument, "class without a graph");
  if (values_.size() != graph_->vertex_count()) {
    throw Error(ErrorKind::InvalidArgument, "class must assign a polynomial to every vertex");
  }
  for (const auto& p : values_) {
    if (p.rank() != graph_->rank()) throw Error(ErrorKind::RankMismatch, "class value of wrong rank");
  }
}

bool CohomologyElement::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::vector<std::size_t> CohomologyElement::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (!values_[v].is_zero()) out.push_back(v);
  }
  return out;
}

std::optional<int> CohomologyElement::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& p : values_) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return std::nullopt;
    if (degree && *degree != p.degree()) return std::nullopt;
    degree = p.degree();
  }
  return degree.value_or(0);
}

bool is_class(const GkmGraph& g, const std::vector<Polynomial>& values) {
  if (values.size() != g.vertex_count()) return false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (!congruent_mod_linear(values[a], values[b], lin_form(g.edges()[e].weight_from_first))) return false;
  }
  return true;
}

CohomologyElement make_class(std::shared_ptr<const GkmGraph> g, std::vector<Polynomial> values) {
  if (!g) throw Error(ErrorKind::InvalidArgument, "class without a graph");
  if (!is_class(*g, values)) throw Error(ErrorKind::NotAClass, "edge congruence violated");
  return CohomologyElement(std::move(g), std::move(values));
}

CohomologyElement constant_class(std::shared_ptr<const GkmGraph> g, const Rational& c) {
  const std::size_t rank = g->rank();
  return CohomologyElement(g, std::vector<Polynomial>(g->vertex_count(), Polynomial::constant(rank, c)));
}

CohomologyElement unity(std::shared_ptr<const GkmGraph> g) { return constant_class(std::move(g), Rational(1)); }

CohomologyElement combine(const CohomologyElement& a, const CohomologyElement& b, ClassOp op) {
  if (a.graph_ptr() != b.graph_ptr()) throw Error(ErrorKind::InvalidArgument, "classes live on different graphs");
  std::vector<Polynomial> values;
  values.reserve(a.values().size());
  for (std::size_t v = 0; v < a.values().size(); ++v) {
    values.push_back(op == ClassOp::Add ? a.at(v) + b.at(v) : a.at(v) * b.at(v));
  }
  return make_class(a.graph_ptr(), std::move(values));
}

CohomologyElement scale(const CohomologyElement& a, const Rational& s) {
  std::vector<Polynomial> values = a.values();
  for (auto& p : values) p *= s;
  return make_class(a.graph_ptr(), std::move(values));
}

CohomologyElement operator+(const CohomologyElement& a, const CohomologyElement& b) {
  return combine(a, b, ClassOp::Add);
}

CohomologyElement operator-(const CohomologyElement& a, const CohomologyElement& b) {
  return combine(a, scale(b, Rational(-1)), ClassOp::Add);
}

CohomologyElement operator*(const CohomologyElement& a, const CohomologyElement& b) {
  return combine(a, b, ClassOp::Multiply);
}

namespace {

// Linear system whose unknowns are the coefficients of a degree-d polynomial at
// each vertex of `support`, and whose rows say that every edge congruence holds
// with zero values outside the support. Congruence mod a linear form l is
// encoded as vanishing of the remainder after eliminating one variable of l,
// which is linear in the coefficients.
class CongruenceSystem {
 public:
  CongruenceSystem(const GkmGraph& g, const std::vector<std::size_t>& support, unsigned d)
      : g_(g), monomials_(monomials_of_degree(g.rank(), d)), slot_(g.vertex_count(), -1) {
    for (std::size_t i = 0; i < support.size(); ++i) slot_[support[i]] = static_cast<long>(i);
    unknowns_ = support.size() * monomials_.size();
    for (std::size_t e = 0; e < g.edge_count(); ++e) add_edge(e);
  }

  std::size_t unknowns() const { return unknowns_; }
  std::size_t column(std::size_t v, std::size_t m) const {
    return static_cast<std::size_t>(slot_[v]) * monomials_.size() + m;
  }
  bool in_support(std::size_t v) const { return slot_[v] >= 0; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  RationalMatrix& matrix() { return matrix_; }

  std::vector<Polynomial> values_from(const std::vector<Rational>& x) const {
    std::vector<Polynomial> values(g_.vertex_count(), Polynomial(g_.rank()));
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (!in_support(v)) continue;
      for (std::size_t m = 0; m < monomials_.size(); ++m) values[v].add_term(monomials_[m], x[column(v, m)]);
    }
    return values;
  }

 private:
  void add_edge(std::size_t e) {
    const auto [a, b] = g_.endpoints(e);
    if (!in_support(a) && !in_support(b)) return;
    const Polynomial l = lin_form(g_.edges()[e].weight_from_first);
    // remainder monomial -> coefficient of each source monomial
    std::map<Monomial, std::vector<Rational>, GradedLexGreater> rows;
    for (std::size_t m = 0; m < monomials_.size(); ++m) {
      const Polynomial rem = reduce_by_linear(Polynomial::monomial(monomials_[m], Rational(1)), l).remainder;
      for (const auto& [mono, c] : rem.terms()) {
        auto& row = rows[mono];
        row.resize(monomials_.size());
        row[m] = c;
      }
    }
    for (const auto& [mono, coeffs] : rows) {
      std::vector<Rational> row(unknowns_);
      for (std::size_t m = 0; m < monomials_.size(); ++m) {
        if (in_support(a)) row[column(a, m)] += coeffs[m];
        if (in_support(b)) row[column(b, m)] -= coeffs[m];
      }
      if (unknowns_ > 0) matrix_.append_row(row);
    }
  }

  const GkmGraph& g_;
  std::vector<Monomial> monomials_;
  std::vector<long> slot_;
  std::size_t unknowns_ = 0;
  RationalMatrix matrix_;
};

std::vector<std::size_t> all_vertices(const GkmGraph& g) {
  std::vector<std::size_t> out(g.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = v;
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

std::vector<CohomologyElement> basis(std::shared_ptr<const GkmGraph> g, unsigned d) {
  CongruenceSystem system(*g, all_vertices(*g), d);
  std::vector<CohomologyElement> out;
  if (system.unknowns() == 0) return out;
  std::vector<std::vector<Rational>> kernel;
  if (system.matrix().rows() == 0) {
    for (std::size_t i = 0; i < system.unknowns(); ++i) {
      std::vector<Rational> x(system.unknowns());
      x[i] = Rational(1);
      kernel.push_back(std::move(x));
    }
  } else {
    kernel = nullspace(system.matrix());
  }
  for (const auto& x : kernel) out.push_back(make_class(g, system.values_from(x)));
  return out;
}

std::size_t supported_class_dimension(const GkmGraph& g, const std::vector<std::size_t>& support, unsigned d) {
  CongruenceSystem system(g, support, d);
  if (system.matrix().rows() == 0) return system.unknowns();
  return nullspace(system.matrix()).size();
}

std::size_t predicted_dimension(const OrientedGkmGraph& og, unsigned d) {
  const std::size_t k = og.rank();
  std::size_t total = 0;
  for (std::size_t v = 0; v < og.vertex_count(); ++v) {
    const int free_degree = static_cast<int>(d) - og.down_degree(v);
    if (free_degree >= 0) total += binomial(static_cast<std::size_t>(free_degree) + k - 1, k - 1);
  }
  return total;
}

Polynomial thom_normalization(const OrientedGkmGraph& og, std::size_t v, ThomDirection dir) {
  Polynomial out = Polynomial::constant(og.rank(), Rational(1));
  for (const auto& inc : dir == ThomDirection::Plus ? og.descending(v) : og.ascending(v)) {
    out = out * lin_form(inc.outward);
  }
  return out;
}

CohomologyElement thom_class(const OrientedGkmGraph& og, std::size_t v, ThomDirection dir) {
  if (!is_index_increasing(og)) {
    throw Error(ErrorKind::NotIndexIncreasing, "Thom classes need an index-increasing orientation");
  }
  const GkmGraph& g = og.graph();
  const bool plus = dir == ThomDirection::Plus;
  const auto support = plus ? ascending_reachable(og, v) : descending_reachable(og, v);
  const int degree = plus ? og.down_degree(v) : static_cast<int>(og.valence()) - og.down_degree(v);
  const Polynomial normalization = thom_normalization(og, v, dir);

  CongruenceSystem system(g, support, static_cast<unsigned>(degree));
  RationalMatrix& a = system.matrix();
  std::vector<Rational> rhs(a.rows());
  for (std::size_t m = 0; m < system.monomials().size(); ++m) {
    std::vector<Rational> row(system.unknowns());
    row[system.column(v, m)] = Rational(1);
    a.append_row(row);
    rhs.push_back(normalization.coefficient(system.monomials()[m]));
  }

  const std::string label = std::string(plus ? "tau+" : "tau-") + "(" + g.id(v) + ")";
  const LinearSolution solution = solve(a, rhs);
  if (!solution.particular) throw Error(ErrorKind::Infeasible, label + " has no solution");
  if (solution.nullity != 0) {
    throw Error(ErrorKind::NonUnique, label + " leaves a " + std::to_string(solution.nullity) + "-dimensional freedom");
  }
  CohomologyElement tau = make_class(og.graph_ptr(), system.values_from(*solution.particular));
  if (tau.at(v) != normalization) throw Error(ErrorKind::Mismatch, label + " normalization not met");
  return tau;
}

ThomBasis thom_basis(const OrientedGkmGraph& og) {
  ThomBasis out;
  for (std::size_t v = 0; v < og.vertex_count(); ++v) {
    out.plus.push_back(thom_class(og, v, ThomDirection::Plus));
    out.minus.push_back(thom_class(og, v, ThomDirection::Minus));
  }
  return out;
}

CohomologyElement equivariant_symplectic(const std::shared_ptr<const GkmGraph>& g) {
  std::vector<Polynomial> values;
  for (std::size_t v = 0; v < g->vertex_count(); ++v) values.push_back(lin_form(g->mu(v)));
  return make_class(g, std::move(values));
}

CohomologyElement equivariant_symplectic(const OrientedGkmGraph& og) { return equivariant_symplectic(og.graph_ptr()); }

Rational scalar_multiple_of_weight(const CohomologyElement& f, std::size_t from, std::size_t to) {
  const GkmGraph& g = f.graph();
  const WeightVector w = g.weight(from, to);
  if (!f.at(to).is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "class does not vanish at '" + g.id(to) + "'");
  }
  const Polynomial q = divide_by_linear(f.at(from), lin_form(w));
  if (!q.is_constant()) {
    throw Error(ErrorKind::NotDivisible, "value at '" + g.id(from) + "' is not a scalar multiple of " + w.to_string());
  }
  return q.constant_term();
}

}  // namespace gkm
