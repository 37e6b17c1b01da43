#include "gkm/corpus.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>

#include "gkm/error.hpp"

namespace gkm {

namespace {

WeightVector v2(long a, long b) { return WeightVector{Rational(a), Rational(b)}; }

// (a, b, c) -> (a - c, b - 2c)
WeightVector project(const std::array<long, 3>& p) { return v2(p[0] - p[2], p[1] - 2 * p[2]); }

std::string id_of(const std::array<long, 3>& p) {
  return std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]);
}

std::vector<std::size_t> betti_for(std::size_t vertices) {
  const std::size_t mid = vertices / 2 - 1;
  return {1, 0, mid, 0, mid, 0, 1};
}

GraphDocument from_positions(const std::vector<std::pair<std::string, WeightVector>>& points,
                             const std::vector<std::pair<std::string, std::string>>& edges, const WeightVector& xi) {
  GraphDocument doc;
  doc.rank = 2;
  doc.valence = 3;
  for (const auto& [id, mu] : points) doc.vertices.push_back(Vertex{id, mu});
  auto mu_of = [&](const std::string& id) {
    return std::find_if(points.begin(), points.end(), [&](const auto& p) { return p.first == id; })->second;
  };
  for (const auto& [a, b] : edges) doc.edges.push_back(Edge{a, b, mu_of(b) - mu_of(a)});
  doc.xi = xi;
  return doc;
}

std::vector<std::pair<std::string, std::string>> complete_graph(const std::vector<std::string>& ids) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) out.emplace_back(ids[i], ids[j]);
  }
  return out;
}

CorpusInstance cp3_k4() {
  CorpusInstance c{"cp3-k4", "CP^3 through a rank-2 projection: triangle with one interior vertex", {}, 'a',
                   betti_for(4), true};
  c.document = from_positions({{"A", v2(0, 0)}, {"B", v2(1, 0)}, {"C", v2(0, 1)}, {"D", v2(-1, -2)}},
                              complete_graph({"A", "B", "C", "D"}), v2(1, 3));
  return c;
}

CorpusInstance cp3_square() {
  CorpusInstance c{"cp3-square", "CP^3 projected onto the unit square", {}, 'b', betti_for(4), true};
  c.document = from_positions({{"A", v2(0, 0)}, {"B", v2(1, 0)}, {"C", v2(0, 1)}, {"D", v2(1, 1)}},
                              complete_graph({"A", "B", "C", "D"}), v2(1, 2));
  return c;
}

CorpusInstance prism_e() {
  CorpusInstance c{"prism-e", "CP^2 x CP^1 with the CP^1 factor along (1,1): pentagon", {}, 'e', betti_for(6), true};
  const std::vector<std::pair<std::string, WeightVector>> points = {
      {"a0", v2(0, 0)}, {"b0", v2(2, 0)}, {"c0", v2(0, 2)}, {"a1", v2(1, 1)}, {"b1", v2(3, 1)}, {"c1", v2(1, 3)}};
  c.document = from_positions(points,
                              {{"a0", "b0"}, {"a0", "c0"}, {"b0", "c0"}, {"a1", "b1"}, {"a1", "c1"}, {"b1", "c1"},
                               {"a0", "a1"}, {"b0", "b1"}, {"c0", "c1"}},
                              v2(1, 2));
  return c;
}

CorpusInstance tol_d() {
  CorpusInstance c{"tol-d", "tetragon with two interior vertices and a concave ascending cycle", {}, 'd',
                   betti_for(6), true};
  GraphDocument& doc = c.document;
  doc.rank = 2;
  doc.valence = 3;
  doc.vertices = {{"o", v2(0, 0)}, {"p1", v2(2, 3)}, {"q1", v2(2, 5)},
                  {"p2", v2(8, 2)}, {"q2", v2(8, 6)}, {"r", v2(0, 8)}};
  // Smallest integer axial function on this edge set: see tests/oracles.hpp.
  doc.edges = {{"o", "p1", v2(6, 9)},    {"o", "p2", v2(8, 2)},   {"o", "r", v2(0, 6)},
               {"p1", "q1", v2(0, 6)},   {"p1", "q2", v2(10, 5)}, {"p2", "q1", v2(-10, 5)},
               {"p2", "q2", v2(0, 6)},   {"q1", "r", v2(-6, 9)},  {"q2", "r", v2(-8, 2)}};
  doc.xi = v2(0, 1);
  return c;
}

CorpusInstance flag_su3() {
  CorpusInstance c{"flag-su3", "full flags in C^3: hexagon with its three long diagonals", {}, 'f', betti_for(6),
                   true};
  GraphDocument& doc = c.document;
  doc.rank = 2;
  doc.valence = 3;
  std::array<long, 3> p{0, 1, 2};
  std::vector<std::array<long, 3>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::reverse(perms.begin(), perms.end());  // 210 first
  for (const auto& q : perms) doc.vertices.push_back(Vertex{id_of(q), project(q)});
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = i + 1; j < perms.size(); ++j) {
      std::array<long, 3> root{};
      int differing = 0;
      for (std::size_t t = 0; t < 3; ++t) {
        if (perms[i][t] != perms[j][t]) {
          ++differing;
          root[t] = perms[j][t] > perms[i][t] ? 1 : -1;
        }
      }
      if (differing == 2) doc.edges.push_back(Edge{id_of(perms[i]), id_of(perms[j]), project(root)});
    }
  }
  doc.xi = v2(1, 5);
  return c;
}

CorpusInstance cube_g() {
  CorpusInstance c{"cube-g", "(CP^1)^3 through the same projection: hexagon with two interior vertices", {}, 'g',
                   betti_for(8), true};
  GraphDocument& doc = c.document;
  doc.rank = 2;
  doc.valence = 3;
  std::vector<std::array<long, 3>> corners;
  for (long a = 0; a < 2; ++a) {
    for (long b = 0; b < 2; ++b) {
      for (long d = 0; d < 2; ++d) corners.push_back({a, b, d});
    }
  }
  for (const auto& q : corners) doc.vertices.push_back(Vertex{id_of(q), project(q)});
  for (std::size_t i = 0; i < corners.size(); ++i) {
    for (std::size_t j = i + 1; j < corners.size(); ++j) {
      std::array<long, 3> diff{};
      long distance = 0;
      for (std::size_t t = 0; t < 3; ++t) {
        diff[t] = corners[j][t] - corners[i][t];
        distance += std::labs(diff[t]);
      }
      if (distance == 1) doc.edges.push_back(Edge{id_of(corners[i]), id_of(corners[j]), project(diff)});
    }
  }
  doc.xi = v2(1, 5);
  return c;
}

const std::vector<std::pair<std::string, std::function<CorpusInstance()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<CorpusInstance()>>> r = {
      {"cp3-k4", cp3_k4}, {"cp3-square", cp3_square}, {"prism-e", prism_e},
      {"tol-d", tol_d},   {"flag-su3", flag_su3},     {"cube-g", cube_g}};
  return r;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : registry()) out.push_back(name);
  return out;
}

CorpusInstance corpus_instance(const std::string& name) {
  for (const auto& [n, make] : registry()) {
    if (n == name) return make();
  }
  throw Error(ErrorKind::UnknownInstance, "no corpus instance named \"" + name + "\"");
}

std::vector<CorpusInstance> corpus() {
  std::vector<CorpusInstance> out;
  for (const auto& [name, make] : registry()) out.push_back(make());
  return out;
}

}  // namespace gkm
