#include "gkm/gkm_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "gkm/error.hpp"

namespace gkm {

GkmGraph::GkmGraph(std::size_t rank, std::size_t valence, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : rank_(rank), valence_(valence), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (rank_ == 0) throw Error(ErrorKind::InvalidArgument, "rank must be positive");
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v.id).second) throw Error(ErrorKind::InvalidArgument, "duplicate vertex id '" + v.id + "'");
    if (v.mu.rank() != rank_) throw Error(ErrorKind::RankMismatch, "moment position of '" + v.id + "' has wrong rank");
  }
  incidence_.resize(vertices_.size());
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    const std::size_t a = index_of(edge.first);
    const std::size_t b = index_of(edge.second);
    if (a == b) throw Error(ErrorKind::InvalidArgument, "loop at '" + edge.first + "'");
    if (!pairs.insert({std::min(a, b), std::max(a, b)}).second) {
      throw Error(ErrorKind::InvalidArgument, "multiple edges between '" + edge.first + "' and '" + edge.second + "'");
    }
    if (edge.weight_from_first.rank() != rank_) throw Error(ErrorKind::RankMismatch, "weight of " + edge_label(e) + " has wrong rank");
    if (edge.weight_from_first.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero weight on " + edge_label(e));
    edge_ends_.emplace_back(a, b);
    incidence_[a].push_back({e, b, edge.weight_from_first});
    incidence_[b].push_back({e, a, -edge.weight_from_first});
  }
}

std::optional<std::size_t> GkmGraph::find_vertex(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t GkmGraph::index_of(const std::string& id) const {
  if (auto i = find_vertex(id)) return *i;
  throw Error(ErrorKind::InvalidArgument, "unknown vertex '" + id + "'");
}

std::optional<std::size_t> GkmGraph::edge_between(std::size_t u, std::size_t v) const {
  for (const auto& inc : incidence_.at(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

WeightVector GkmGraph::weight(std::size_t from, std::size_t to) const {
  for (const auto& inc : incidence_.at(from)) {
    if (inc.neighbor == to) return inc.outward;
  }
  throw Error(ErrorKind::InvalidArgument, "'" + id(from) + "' and '" + id(to) + "' are not adjacent");
}

std::string GkmGraph::edge_label(std::size_t e) const { return edges_.at(e).first + "-" + edges_.at(e).second; }

bool ValidationReport::passed(const std::string& check) const {
  return std::none_of(issues.begin(), issues.end(), [&](const ValidationIssue& i) { return i.check == check; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& check : checks) {
    out << (passed(check) ? "  ok    " : "  FAIL  ") << check << "\n";
    for (const auto& issue : issues) {
      if (issue.check == check) out << "          " << issue.subject << ": " << issue.detail << "\n";
    }
  }
  return out.str();
}

bool congruent_weights(const WeightVector& a, const WeightVector& b, const WeightVector& alpha) {
  const WeightVector diff = a - b;
  return diff.is_zero() || !linearly_independent(diff, alpha);
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> weight_pairing(const GkmGraph& g, std::size_t e) {
  const auto [a, b] = g.endpoints(e);
  const WeightVector& alpha = g.edges()[e].weight_from_first;
  std::vector<std::size_t> at_a, at_b;
  for (std::size_t i = 0; i < g.incident(a).size(); ++i) {
    if (g.incident(a)[i].edge != e) at_a.push_back(i);
  }
  for (std::size_t i = 0; i < g.incident(b).size(); ++i) {
    if (g.incident(b)[i].edge != e) at_b.push_back(i);
  }
  if (at_a.size() != at_b.size()) return std::nullopt;
  std::sort(at_b.begin(), at_b.end());
  do {
    bool matched = true;
    for (std::size_t i = 0; i < at_a.size() && matched; ++i) {
      matched = congruent_weights(g.incident(a)[at_a[i]].outward, g.incident(b)[at_b[i]].outward, alpha);
    }
    if (matched) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t i = 0; i < at_a.size(); ++i) out.emplace_back(at_a[i], at_b[i]);
      return out;
    }
  } while (std::next_permutation(at_b.begin(), at_b.end()));
  return std::nullopt;
}

ValidationReport validate(const GkmGraph& g) {
  ValidationReport report;
  report.checks = {"valence", "edge_count", "connected", "pairwise_independence", "moment_compatibility",
                   "weight_pairing"};
  auto fail = [&](const char* check, std::string subject, std::string detail) {
    report.issues.push_back({check, std::move(subject), std::move(detail)});
  };

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.incident(v).size() != g.valence()) {
      fail("valence", g.id(v),
           "has " + std::to_string(g.incident(v).size()) + " edges, expected " + std::to_string(g.valence()));
    }
  }
  if (2 * g.edge_count() != g.valence() * g.vertex_count()) {
    fail("edge_count", "graph",
         "2|E| = " + std::to_string(2 * g.edge_count()) + " but n|V| = " + std::to_string(g.valence() * g.vertex_count()));
  }

  if (g.vertex_count() > 0) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(u)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          stack.push_back(inc.neighbor);
        }
      }
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!seen[v]) fail("connected", g.id(v), "not reachable from '" + g.id(0) + "'");
    }
  }

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (!linearly_independent(inc[i].outward, inc[j].outward)) {
          fail("pairwise_independence", g.id(v),
               "weights " + inc[i].outward.to_string() + " and " + inc[j].outward.to_string() + " are dependent");
        }
      }
    }
  }

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    const auto factor = proportionality_factor(g.mu(b) - g.mu(a), g.edges()[e].weight_from_first);
    if (!factor || factor->sign() <= 0) {
      fail("moment_compatibility", g.edge_label(e),
           "mu difference " + (g.mu(b) - g.mu(a)).to_string() + " is not a positive multiple of " +
               g.edges()[e].weight_from_first.to_string());
    }
  }

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!weight_pairing(g, e)) {
      fail("weight_pairing", g.edge_label(e), "no bijection of the remaining weights congruent modulo " +
                                                  g.edges()[e].weight_from_first.to_string());
    }
  }
  return report;
}

OrientedGkmGraph::OrientedGkmGraph(std::shared_ptr<const GkmGraph> graph, WeightVector xi)
    : graph_(std::move(graph)), xi_(std::move(xi)) {
  const GkmGraph& g = *graph_;
  if (xi_.rank() != g.rank()) throw Error(ErrorKind::RankMismatch, "covector has wrong rank");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) heights_.push_back(g.mu(v).dot(xi_));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    const int along_weight = g.edges()[e].weight_from_first.dot(xi_).sign();
    const int along_moment = (heights_[b] - heights_[a]).sign();
    if (along_weight == 0 || along_moment == 0) {
      throw Error(ErrorKind::NotGeneric, "xi " + xi_.to_string() + " is orthogonal to edge " + g.edge_label(e));
    }
    if (along_weight != along_moment) {
      throw Error(ErrorKind::NotGeneric, "edge " + g.edge_label(e) + " weight disagrees with its moment direction");
    }
    initial_.push_back(along_moment > 0 ? a : b);
    terminal_.push_back(along_moment > 0 ? b : a);
  }
  descending_.resize(g.vertex_count());
  ascending_.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const auto& inc : g.incident(v)) {
      (heights_[inc.neighbor] < heights_[v] ? descending_ : ascending_)[v].push_back(inc);
    }
  }
}

WeightVector OrientedGkmGraph::oriented_weight(std::size_t e) const {
  return graph_->weight(initial_.at(e), terminal_.at(e));
}

OrientedGkmGraph orient(std::shared_ptr<const GkmGraph> g, const WeightVector& xi) {
  return OrientedGkmGraph(std::move(g), xi);
}

OrientedGkmGraph orient(const GkmGraph& g, const WeightVector& xi) {
  return OrientedGkmGraph(std::make_shared<const GkmGraph>(g), xi);
}

MorseProfile morse_profile(const OrientedGkmGraph& og) {
  MorseProfile profile;
  const std::size_t n = og.valence();
  profile.betti.assign(2 * n + 1, 0);
  for (std::size_t v = 0; v < og.vertex_count(); ++v) {
    profile.down_degree.push_back(og.down_degree(v));
    profile.morse_index.push_back(og.morse_index(v));
    profile.betti.at(static_cast<std::size_t>(og.morse_index(v)))++;
  }
  if (n == 3) profile.index_two_count_check = 2 * (profile.betti[2] + 1) == og.vertex_count();
  return profile;
}

bool is_index_increasing(const OrientedGkmGraph& og) {
  for (std::size_t e = 0; e < og.graph().edge_count(); ++e) {
    if (og.down_degree(og.initial(e)) >= og.down_degree(og.terminal(e))) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> reachable(const OrientedGkmGraph& og, std::size_t v, bool up) {
  std::vector<bool> seen(og.vertex_count(), false);
  std::vector<std::size_t> stack{v};
  seen.at(v) = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (const auto& inc : up ? og.ascending(u) : og.descending(u)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        stack.push_back(inc.neighbor);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

std::size_t unique_vertex_of_degree(const OrientedGkmGraph& og, int d, const char* name) {
  const auto found = vertices_of_down_degree(og, d);
  if (found.size() != 1) {
    throw Error(ErrorKind::InfeasibleInstance,
                std::to_string(found.size()) + " vertices of down-degree " + std::to_string(d) + ", expected a unique " + name);
  }
  return found.front();
}

void require_six_dimensional(const OrientedGkmGraph& og, const char* what) {
  if (og.valence() != 3 || og.rank() != 2) {
    throw Error(ErrorKind::ScopeError, std::string(what) + " requires valence 3 and rank 2");
  }
  if (!is_index_increasing(og)) throw Error(ErrorKind::ScopeError, std::string(what) + " requires an index-increasing orientation");
}

}  // namespace

std::vector<std::size_t> ascending_reachable(const OrientedGkmGraph& og, std::size_t v) { return reachable(og, v, true); }

std::vector<std::size_t> descending_reachable(const OrientedGkmGraph& og, std::size_t v) {
  return reachable(og, v, false);
}

std::vector<std::size_t> vertices_of_down_degree(const OrientedGkmGraph& og, int d) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < og.vertex_count(); ++v) {
    if (og.down_degree(v) == d) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    if (og.height(a) != og.height(b)) return og.height(a) < og.height(b);
    return og.graph().id(a) < og.graph().id(b);
  });
  return out;
}

std::size_t bottom_vertex(const OrientedGkmGraph& og) { return unique_vertex_of_degree(og, 0, "bottom vertex"); }

std::size_t top_vertex(const OrientedGkmGraph& og) {
  return unique_vertex_of_degree(og, static_cast<int>(og.valence()), "top vertex");
}

AscendingCycle ascending_cycle(const OrientedGkmGraph& og, std::size_t p) {
  require_six_dimensional(og, "ascending_cycle");
  if (og.down_degree(p) != 1) throw Error(ErrorKind::ScopeError, "'" + og.graph().id(p) + "' is not an index-two vertex");
  const GkmGraph& g = og.graph();
  const std::size_t r = top_vertex(og);
  const auto& up = og.ascending(p);
  std::vector<std::size_t> uppers;
  for (const auto& inc : up) uppers.push_back(inc.neighbor);
  std::sort(uppers.begin(), uppers.end(), [&](std::size_t a, std::size_t b) {
    if (og.height(a) != og.height(b)) return og.height(a) < og.height(b);
    return g.id(a) < g.id(b);
  });

  AscendingCycle cycle;
  const bool touches_top = std::find(uppers.begin(), uppers.end(), r) != uppers.end();
  if (touches_top) {
    const std::size_t q = uppers[0] == r ? uppers[1] : uppers[0];
    if (!g.adjacent(q, r)) throw Error(ErrorKind::InfeasibleInstance, "index-four vertex '" + g.id(q) + "' not adjacent to top");
    cycle.vertices = {p, q, r};
  } else {
    for (auto q : uppers) {
      if (!g.adjacent(q, r)) throw Error(ErrorKind::InfeasibleInstance, "index-four vertex '" + g.id(q) + "' not adjacent to top");
    }
    cycle.vertices = {p, uppers[0], r, uppers[1]};
  }

  auto reach = ascending_reachable(og, p);
  auto members = cycle.vertices;
  std::sort(members.begin(), members.end());
  if (reach != members) {
    throw Error(ErrorKind::InfeasibleInstance, "ascending set of '" + g.id(p) + "' is not a 3- or 4-cycle");
  }
  if (cycle.triangular() != g.adjacent(p, r)) {
    throw Error(ErrorKind::InfeasibleInstance, "triangular cycle must coincide with adjacency to the top vertex");
  }
  return cycle;
}

void check_six_dimensional_structure(const OrientedGkmGraph& og) {
  require_six_dimensional(og, "six-dimensional structure check");
  const GkmGraph& g = og.graph();
  if (g.vertex_count() > 8) {
    throw Error(ErrorKind::InfeasibleInstance, std::to_string(g.vertex_count()) + " vertices exceed the bound of eight");
  }
  const std::size_t o = bottom_vertex(og);
  const std::size_t r = top_vertex(og);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (og.down_degree(v) == 1 && !g.adjacent(v, o)) {
      throw Error(ErrorKind::InfeasibleInstance, "index-two vertex '" + g.id(v) + "' not adjacent to the bottom vertex");
    }
    if (og.down_degree(v) == 2 && !g.adjacent(v, r)) {
      throw Error(ErrorKind::InfeasibleInstance, "index-four vertex '" + g.id(v) + "' not adjacent to the top vertex");
    }
  }
  const auto profile = morse_profile(og);
  if (!profile.index_two_count_check.value_or(false) || profile.betti[2] != profile.betti[4]) {
    throw Error(ErrorKind::InfeasibleInstance, "index-two count differs from |V|/2 - 1 or from the index-four count");
  }
}

}  // namespace gkm
