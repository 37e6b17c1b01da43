#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gkm/polynomial.hpp"

namespace gkm {

struct Vertex {
  std::string id;
  WeightVector mu;  ///< moment position
};

/// Unordered edge. `weight_from_first` is the axial weight read from `first`
/// toward `second`; the reverse reading carries its negative.
struct Edge {
  std::string first;
  std::string second;
  WeightVector weight_from_first;
};

/// n-valent graph with an axial function, embedded in Q^k by its moment positions.
///
/// The constructor only enforces structural well-formedness (known and unique
/// ids, consistent ranks, no loops, no multi-edges, nonzero weights); the GKM
/// axioms proper are checked by validate().
class GkmGraph {
 public:
  struct Incidence {
    std::size_t edge;
    std::size_t neighbor;
    WeightVector outward;  ///< weight read from this vertex toward `neighbor`
  };

  GkmGraph(std::size_t rank, std::size_t valence, std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t rank() const { return rank_; }
  std::size_t valence() const { return valence_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::string& id(std::size_t v) const { return vertices_.at(v).id; }
  const WeightVector& mu(std::size_t v) const { return vertices_.at(v).mu; }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  /// Throws Error(InvalidArgument) for unknown ids.
  std::size_t index_of(const std::string& id) const;

  /// Endpoint indices of edge e, in the order given at construction.
  std::pair<std::size_t, std::size_t> endpoints(std::size_t e) const { return edge_ends_.at(e); }
  const std::vector<Incidence>& incident(std::size_t v) const { return incidence_.at(v); }
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;
  bool adjacent(std::size_t u, std::size_t v) const { return edge_between(u, v).has_value(); }
  /// Weight of the edge u-v read from u. Throws Error(InvalidArgument) if not adjacent.
  WeightVector weight(std::size_t from, std::size_t to) const;
  std::string edge_label(std::size_t e) const;

 private:
  std::size_t rank_;
  std::size_t valence_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> edge_ends_;
  std::vector<std::vector<Incidence>> incidence_;
};

struct ValidationIssue {
  std::string check;    ///< one of the check names below
  std::string subject;  ///< vertex id or edge label
  std::string detail;
};

/// Checks: "valence", "edge_count", "connected", "pairwise_independence",
/// "moment_compatibility", "weight_pairing".
struct ValidationReport {
  std::vector<std::string> checks;
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool passed(const std::string& check) const;
  std::string to_string() const;
};

ValidationReport validate(const GkmGraph& g);

/// True iff a - b is a (possibly zero) multiple of alpha.
bool congruent_weights(const WeightVector& a, const WeightVector& b, const WeightVector& alpha);

/// A bijection between the other incidences at the two ends of edge e whose
/// matched weights are congruent modulo the edge weight, as pairs of positions
/// into incident(first) and incident(second). nullopt when none exists.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> weight_pairing(const GkmGraph& g, std::size_t e);

/// GKM graph oriented by a generic covector xi.
class OrientedGkmGraph {
 public:
  OrientedGkmGraph(std::shared_ptr<const GkmGraph> graph, WeightVector xi);

  const GkmGraph& graph() const { return *graph_; }
  const std::shared_ptr<const GkmGraph>& graph_ptr() const { return graph_; }
  const WeightVector& xi() const { return xi_; }
  std::size_t valence() const { return graph_->valence(); }
  std::size_t rank() const { return graph_->rank(); }
  std::size_t vertex_count() const { return graph_->vertex_count(); }

  /// <mu(v), xi>.
  const Rational& height(std::size_t v) const { return heights_.at(v); }
  std::size_t initial(std::size_t e) const { return initial_.at(e); }
  std::size_t terminal(std::size_t e) const { return terminal_.at(e); }
  /// Weight of edge e read along its orientation (from initial to terminal).
  WeightVector oriented_weight(std::size_t e) const;

  int down_degree(std::size_t v) const { return static_cast<int>(descending_.at(v).size()); }
  int morse_index(std::size_t v) const { return 2 * down_degree(v); }
  /// Edges at v toward lower (resp. higher) neighbours, with outward weights.
  const std::vector<GkmGraph::Incidence>& descending(std::size_t v) const { return descending_.at(v); }
  const std::vector<GkmGraph::Incidence>& ascending(std::size_t v) const { return ascending_.at(v); }

 private:
  std::shared_ptr<const GkmGraph> graph_;
  WeightVector xi_;
  std::vector<Rational> heights_;
  std::vector<std::size_t> initial_;
  std::vector<std::size_t> terminal_;
  std::vector<std::vector<GkmGraph::Incidence>> descending_;
  std::vector<std::vector<GkmGraph::Incidence>> ascending_;
};

/// Throws Error(NotGeneric) if xi is orthogonal to some edge weight.
OrientedGkmGraph orient(std::shared_ptr<const GkmGraph> g, const WeightVector& xi);
OrientedGkmGraph orient(const GkmGraph& g, const WeightVector& xi);

struct MorseProfile {
  std::vector<int> down_degree;
  std::vector<int> morse_index;
  /// betti[j] = b_j for j = 0..2n; odd entries are zero.
  std::vector<std::size_t> betti;
  /// For valence 3: whether b_2 == |V|/2 - 1.
  std::optional<bool> index_two_count_check;
};

MorseProfile morse_profile(const OrientedGkmGraph& og);

bool is_index_increasing(const OrientedGkmGraph& og);

/// Vertices reachable from v by ascending (resp. descending) paths, v included, sorted.
std::vector<std::size_t> ascending_reachable(const OrientedGkmGraph& og, std::size_t v);
std::vector<std::size_t> descending_reachable(const OrientedGkmGraph& og, std::size_t v);

/// The unique vertex of down-degree 0 (resp. n). Throws Error(InfeasibleInstance)
/// when it is not unique.
std::size_t bottom_vertex(const OrientedGkmGraph& og);
std::size_t top_vertex(const OrientedGkmGraph& og);

/// Vertices of a given down-degree ordered by height, ties by id.
std::vector<std::size_t> vertices_of_down_degree(const OrientedGkmGraph& og, int d);

/// Cycle through an index-two vertex p and everything ascending-reachable from it:
/// [p, q, r] when p is adjacent to the top vertex r, otherwise [p, q, r, q'].
struct AscendingCycle {
  std::vector<std::size_t> vertices;
  bool triangular() const { return vertices.size() == 3; }
};

/// Requires valence 3, rank 2, index-increasing and down_degree(p) == 1.
/// Throws Error(ScopeError) otherwise.
AscendingCycle ascending_cycle(const OrientedGkmGraph& og, std::size_t p);

/// Structural facts every valence-3, rank-2, index-increasing instance must
/// satisfy: at most eight vertices, index-two vertices adjacent to the bottom,
/// index-four vertices adjacent to the top, b_2 = |V|/2 - 1.
/// Throws Error(InfeasibleInstance) on violation, Error(ScopeError) out of scope.
void check_six_dimensional_structure(const OrientedGkmGraph& og);

}  // namespace gkm
