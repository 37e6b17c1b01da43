#include "gkm/moment_geometry.hpp"

#include <algorithm>
#include <array>

#include "gkm/error.hpp"
#include "gkm/lefschetz.hpp"

namespace gkm {

namespace {

void require_planar(std::size_t rank, const char* what) {
  if (rank != 2) throw Error(ErrorKind::ScopeError, std::string(what) + " needs rank 2");
}

Rational cross(const WeightVector& a, const WeightVector& b) { return a[0] * b[1] - a[1] * b[0]; }

WeightVector perp(const WeightVector& v) {
  WeightVector out(2);
  out[0] = -v[1];
  out[1] = v[0];
  return out;
}

bool within_box(const WeightVector& a, const WeightVector& b, const WeightVector& p) {
  for (std::size_t i = 0; i < 2; ++i) {
    if (p[i] < std::min(a[i], b[i]) || p[i] > std::max(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

int orientation(const WeightVector& a, const WeightVector& b, const WeightVector& c) {
  require_planar(a.rank(), "orientation");
  return cross(b - a, c - a).sign();
}

bool same_side(const WeightVector& a, const WeightVector& b, const WeightVector& line_dir) {
  require_planar(line_dir.rank(), "same_side");
  if (line_dir.is_zero()) throw Error(ErrorKind::InvalidArgument, "same_side: zero line direction");
  const WeightVector normal = perp(line_dir);
  return a.dot(normal).sign() * b.dot(normal).sign() >= 0;
}

bool segments_intersect(const WeightVector& a, const WeightVector& b, const WeightVector& c, const WeightVector& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && within_box(a, b, c)) || (o2 == 0 && within_box(a, b, d)) ||
         (o3 == 0 && within_box(c, d, a)) || (o4 == 0 && within_box(c, d, b));
}

std::string_view to_string(TetragonClass t) {
  switch (t) {
    case TetragonClass::Convex: return "convex";
    case TetragonClass::Concave: return "concave";
    case TetragonClass::Crossed: return "crossed";
  }
  return "?";
}

TetragonClass classify_tetragon(const WeightVector& a, const WeightVector& b, const WeightVector& c,
                                const WeightVector& d) {
  const std::array<const WeightVector*, 4> pts{&a, &b, &c, &d};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (*pts[i] == *pts[j]) throw Error(ErrorKind::Degenerate, "tetragon has repeated points");
    }
  }
  std::array<int, 4> turn{};
  for (std::size_t i = 0; i < 4; ++i) {
    turn[i] = orientation(*pts[i], *pts[(i + 1) % 4], *pts[(i + 2) % 4]);
    if (turn[i] == 0) throw Error(ErrorKind::Degenerate, "tetragon has three consecutive collinear points");
  }
  const auto positive = std::count(turn.begin(), turn.end(), 1);
  const bool opposite_cross = segments_intersect(a, b, c, d) || segments_intersect(b, c, d, a);
  TetragonClass out;
  if (positive == 4 || positive == 0) {
    out = TetragonClass::Convex;
  } else if (positive == 2) {
    out = TetragonClass::Crossed;
  } else {
    out = TetragonClass::Concave;
  }
  if ((out == TetragonClass::Crossed) != opposite_cross) {
    throw Error(ErrorKind::Degenerate, "turn signs and segment crossings disagree");
  }
  return out;
}

CycleShape cycle_shape(const OrientedGkmGraph& og, std::size_t p) {
  CycleShape out;
  out.start = p;
  out.vertices = ascending_cycle(og, p).vertices;
  out.triangular = out.vertices.size() == 3;
  if (!out.triangular) {
    const auto& g = og.graph();
    out.tetragon =
        classify_tetragon(g.mu(out.vertices[0]), g.mu(out.vertices[1]), g.mu(out.vertices[2]), g.mu(out.vertices[3]));
  }
  return out;
}

std::vector<std::size_t> convex_hull(const GkmGraph& g) {
  require_planar(g.rank(), "convex_hull");
  std::vector<std::size_t> idx(g.vertex_count());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = g.mu(a);
    const auto& pb = g.mu(b);
    if (pa[1] != pb[1]) return pa[1] < pb[1];
    return pa[0] < pb[0];
  });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return g.mu(a) == g.mu(b); }),
            idx.end());
  if (idx.size() < 3) return idx;

  // Andrew's monotone chain, sweeping by (y, x) so the first point is lowest-then-leftmost.
  auto chain = [&](auto begin, auto end) {
    std::vector<std::size_t> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2 && orientation(g.mu(h[h.size() - 2]), g.mu(h.back()), g.mu(*it)) >= 0) h.pop_back();
      h.push_back(*it);
    }
    return h;
  };
  // With the (y, x) sweep, keeping right turns walks clockwise; reverse at the end.
  auto lower = chain(idx.begin(), idx.end());
  auto upper = chain(idx.rbegin(), idx.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() < 3) return lower;
  std::reverse(lower.begin() + 1, lower.end());
  return lower;
}

bool on_hull_boundary(const GkmGraph& g, std::size_t v) {
  const auto hull = convex_hull(g);
  if (hull.size() < 3) return true;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = g.mu(hull[i]);
    const auto& b = g.mu(hull[(i + 1) % hull.size()]);
    if (orientation(a, b, g.mu(v)) == 0 && within_box(a, b, g.mu(v))) return true;
  }
  return false;
}

bool is_interior_vertex(const GkmGraph& g, std::size_t v) {
  require_planar(g.rank(), "is_interior_vertex");
  const auto& inc = g.incident(v);
  // The cone is not the plane iff all weights fit in a closed half-plane, and such a
  // half-plane can always be rotated until its boundary contains one of the weights.
  for (const auto& i : inc) {
    const WeightVector n = perp(i.outward);
    for (const WeightVector& u : {n, -n}) {
      const bool all = std::all_of(inc.begin(), inc.end(), [&](const auto& j) { return j.outward.dot(u).sign() >= 0; });
      if (all) return false;
    }
  }
  return !inc.empty();
}

char table_label(std::size_t hull_vertices, std::size_t vertex_count, bool o_adjacent_r,
                 std::size_t tetragonal_cycles) {
  struct Row {
    std::size_t hull, count;
    bool adjacent;
    std::size_t tetragonal;
    char label;
  };
  static constexpr Row rows[] = {{3, 4, true, 0, 'a'},  {4, 4, true, 0, 'b'},  {4, 6, false, 1, 'c'},
                                 {4, 6, true, 2, 'd'},  {5, 6, false, 1, 'e'}, {6, 6, true, 2, 'f'},
                                 {6, 8, false, 3, 'g'}};
  for (const auto& row : rows) {
    if (row.hull == hull_vertices && row.count == vertex_count && row.adjacent == o_adjacent_r &&
        row.tetragonal == tetragonal_cycles) {
      return row.label;
    }
  }
  return '?';
}

TableType classify_type(const OrientedGkmGraph& og) {
  const auto& g = og.graph();
  TableType t;
  t.hull_vertices = convex_hull(g).size();
  t.vertex_count = g.vertex_count();
  t.o_adjacent_r = g.adjacent(bottom_vertex(og), top_vertex(og));
  for (std::size_t p : vertices_of_down_degree(og, 1)) {
    if (!cycle_shape(og, p).triangular) ++t.tetragonal_cycles;
  }
  t.label = table_label(t.hull_vertices, t.vertex_count, t.o_adjacent_r, t.tetragonal_cycles);
  if (t.label == '?') {
    throw Error(ErrorKind::Unclassifiable,
                "no row for hull " + std::to_string(t.hull_vertices) + ", |V| " + std::to_string(t.vertex_count) +
                    ", o~r " + (t.o_adjacent_r ? "yes" : "no") + ", tetragonal " + std::to_string(t.tetragonal_cycles));
  }
  return t;
}

std::vector<SignWitness> check_sign_conditions(const OrientedGkmGraph& og) {
  const auto& g = og.graph();
  const ThomBasis thom = thom_basis(og);
  std::vector<SignWitness> out;
  auto fail = [&](std::size_t p, std::size_t q, const std::string& what) {
    throw Error(ErrorKind::ConditionViolated, what + " at (" + g.id(p) + ", " + g.id(q) + ")");
  };

  for (std::size_t p : vertices_of_down_degree(og, 1)) {
    const WeightVector& down = og.descending(p).front().outward;
    for (std::size_t q : vertices_of_down_degree(og, 2)) {
      if (!g.adjacent(p, q)) continue;
      std::size_t v = q;
      for (const auto& inc : og.descending(q)) {
        if (inc.neighbor != p) v = inc.neighbor;
      }
      SignWitness w{g.id(p), g.id(q), "same_side", same_side(down, g.weight(q, v), g.weight(p, q)),
                    c_pq(og, thom, p, q)};
      if ((w.c.sign() > 0) != w.same_side) fail(p, q, "sign of c disagrees with the same-side test");
      out.push_back(std::move(w));
    }
  }

  const bool eight = g.vertex_count() == 8;
  for (std::size_t p : vertices_of_down_degree(og, 1)) {
    const CycleShape shape = cycle_shape(og, p);
    const bool convex = !shape.triangular && shape.tetragon == TetragonClass::Convex;
    if (eight && !convex) fail(p, p, "ascending cycle is not a convex tetragon on eight vertices");
    if (!convex) continue;
    for (std::size_t q : {shape.vertices[1], shape.vertices[3]}) {
      SignWitness w{g.id(p), g.id(q), "convex_cycle", true, c_pq(og, thom, p, q)};
      if (w.c.sign() <= 0) fail(p, q, "c is not positive on a convex tetragonal cycle");
      out.push_back(std::move(w));
    }
    if (eight) out.push_back(SignWitness{g.id(p), g.id(p), "all_convex", true, Rational()});
  }
  return out;
}

}  // namespace gkm
