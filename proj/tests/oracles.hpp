// Independent reference computations used to check the library. Everything
// here is deliberately naive: plain GMP rationals, cofactor expansion,
// brute-force search. Nothing calls into the library's linear algebra,
// cohomology or localization code.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "gkm/gkm_graph.hpp"
#include "gkm/polynomial.hpp"

namespace oracle {

using Q = mpq_class;
using Vec2 = std::array<Q, 2>;
using Matrix = std::vector<std::vector<Q>>;

inline Q cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
inline Q dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline Vec2 sub(const Vec2& a, const Vec2& b) { return {Q(a[0] - b[0]), Q(a[1] - b[1])}; }

inline Q det_cofactor(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Q total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Q> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(row);
    }
    const Q term = m[0][j] * det_cofactor(minor);
    total += (j % 2 == 0) ? term : Q(-term);
  }
  return total;
}

/// Gauss-Jordan over Q; returns the pivot columns and reduces m in place.
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Plain copy of a rank-2 graph.
struct PlainGraph {
  struct PlainEdge {
    std::size_t a, b;
    Vec2 w;  // read from a
  };
  std::vector<std::string> ids;
  std::vector<Vec2> mu;
  std::vector<PlainEdge> edges;

  std::vector<std::pair<std::size_t, Vec2>> outward(std::size_t v) const {
    std::vector<std::pair<std::size_t, Vec2>> out;
    for (const auto& e : edges) {
      if (e.a == v) out.emplace_back(e.b, e.w);
      if (e.b == v) out.emplace_back(e.a, Vec2{Q(-e.w[0]), Q(-e.w[1])});
    }
    return out;
  }
};

inline Q to_q(const gkm::Rational& r) { return Q(r.raw()); }

inline PlainGraph plain(const gkm::GkmGraph& g) {
  PlainGraph p;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    p.ids.push_back(g.id(v));
    p.mu.push_back({to_q(g.mu(v)[0]), to_q(g.mu(v)[1])});
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    const auto& w = g.edges()[e].weight_from_first;
    p.edges.push_back({a, b, {to_q(w[0]), to_q(w[1])}});
  }
  return p;
}

/// d_v by direct comparison of heights along edges.
inline std::vector<int> down_degrees(const PlainGraph& g, const Vec2& xi) {
  std::vector<int> d(g.ids.size(), 0);
  for (const auto& e : g.edges) {
    const Q ha = dot(g.mu[e.a], xi), hb = dot(g.mu[e.b], xi);
    if (ha < hb) ++d[e.b];
    if (hb < ha) ++d[e.a];
  }
  return d;
}

/// sum_v f(v, x) / prod(outward weights at v)(x), evaluated at a single point.
inline Q abbv_at(const PlainGraph& g, const std::function<Q(std::size_t, const Vec2&)>& f, const Vec2& x) {
  Q sum = 0;
  for (std::size_t v = 0; v < g.ids.size(); ++v) {
    Q nu = 1;
    for (const auto& [n, w] : g.outward(v)) nu *= dot(w, x);
    sum += f(v, x) / nu;
  }
  return sum;
}

/// Points (1, t) for t = 2, 3, 4, ... at which no edge weight vanishes.
inline std::vector<Vec2> evaluation_points(const PlainGraph& g, std::size_t count) {
  std::vector<Vec2> out;
  for (long t = 2; out.size() < count; ++t) {
    const Vec2 x{Q(1), Q(t)};
    if (std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) { return dot(e.w, x) != 0; })) {
      out.push_back(x);
    }
  }
  return out;
}

/// sum_v binom(d - d_v + k - 1, k - 1), zero terms for d < d_v.
inline std::size_t hilbert_count(const std::vector<int>& down, int d, int k) {
  auto binom = [](long n, long r) {
    if (r < 0 || n < r) return 0L;
    long out = 1;
    for (long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
  };
  std::size_t total = 0;
  for (int dv : down) {
    if (d >= dv) total += static_cast<std::size_t>(binom(d - dv + k - 1, k - 1));
  }
  return total;
}

/// Whether the other weights at the two ends of an edge can be matched so that each
/// matched pair differs by a multiple of alpha. Tries every bijection.
inline bool weights_pairable(std::vector<Vec2> a, const std::vector<Vec2>& b, const Vec2& alpha) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = cross(sub(a[i], b[perm[i]]), alpha) == 0;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Whether f - g vanishes on the line alpha^perp, i.e. alpha divides f - g (rank 2).
/// Checked by evaluation at deg + 1 points of the line.
inline bool congruent_on_line(const gkm::Polynomial& f, const gkm::Polynomial& g, const gkm::WeightVector& alpha) {
  const gkm::Polynomial diff = f - g;
  const int deg = std::max(diff.degree(), 0);
  for (long t = 1; t <= deg + 1; ++t) {
    const gkm::WeightVector point{-alpha[1] * gkm::Rational(t), alpha[0] * gkm::Rational(t)};
    if (!gkm::evaluate(diff, point).is_zero()) return false;
  }
  return true;
}

inline bool is_class_by_evaluation(const gkm::GkmGraph& g, const std::vector<gkm::Polynomial>& values) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (!congruent_on_line(values[a], values[b], g.edges()[e].weight_from_first)) return false;
  }
  return true;
}

/// Number of points that are not in the closed convex hull of the others.
inline std::size_t extreme_point_count(const std::vector<Vec2>& pts) {
  auto in_triangle = [](const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
    const int s1 = sgn(cross(sub(b, a), sub(p, a)));
    const int s2 = sgn(cross(sub(c, b), sub(p, b)));
    const int s3 = sgn(cross(sub(a, c), sub(p, c)));
    const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
    const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
    return !(has_neg && has_pos);
  };
  auto on_segment = [](const Vec2& p, const Vec2& a, const Vec2& b) {
    return cross(sub(b, a), sub(p, a)) == 0 && dot(sub(p, a), sub(p, b)) <= 0;
  };
  std::size_t count = 0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool covered = false;
    for (std::size_t a = 0; a < n && !covered; ++a) {
      for (std::size_t b = a + 1; b < n && !covered; ++b) {
        if (a == i || b == i) continue;
        if (on_segment(pts[i], pts[a], pts[b])) covered = true;
        for (std::size_t c = b + 1; c < n && !covered; ++c) {
          if (c == i) continue;
          const bool degenerate = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a])) == 0;
          if (!degenerate && in_triangle(pts[i], pts[a], pts[b], pts[c])) covered = true;
        }
      }
    }
    if (!covered) ++count;
  }
  return count;
}

/// Exhaustive search for integer axial functions on a fixed planar graph: edge e gets
/// weight m_e * (primitive direction of mu(b) - mu(a)) with 1 <= m_e <= bound, and every
/// edge must admit a congruent pairing of the remaining weights. Backtracking prunes
/// an edge as soon as all weights around it are fixed.
struct AxialSearch {
  std::vector<std::vector<long>> solutions;  // multipliers, sorted by (norm, lexicographic)
  std::vector<std::array<long, 2>> primitive;

  long norm(const std::vector<long>& m) const {
    long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      s += m[i] * m[i] * (primitive[i][0] * primitive[i][0] + primitive[i][1] * primitive[i][1]);
    }
    return s;
  }
};

inline AxialSearch axial_search(const std::vector<std::array<long, 2>>& positions,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges, long bound) {
  AxialSearch out;
  for (const auto& [a, b] : edges) {
    long dx = positions[b][0] - positions[a][0], dy = positions[b][1] - positions[a][1];
    const long g = std::gcd(std::labs(dx), std::labs(dy));
    out.primitive.push_back({dx / g, dy / g});
  }
  const std::size_t m = edges.size();
  std::vector<std::vector<std::pair<std::size_t, long>>> incident(positions.size());
  for (std::size_t e = 0; e < m; ++e) {
    incident[edges[e].first].emplace_back(e, 1);
    incident[edges[e].second].emplace_back(e, -1);
  }
  // Largest edge index an edge's check depends on.
  std::vector<std::size_t> ready(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    ready[e] = e;
    for (std::size_t v : {edges[e].first, edges[e].second}) {
      for (const auto& [f, s] : incident[v]) ready[e] = std::max(ready[e], f);
    }
  }
  std::vector<long> mult(m, 0);
  auto weight = [&](std::size_t e, long sign) {
    return Vec2{Q(sign * mult[e] * out.primitive[e][0]), Q(sign * mult[e] * out.primitive[e][1])};
  };
  auto edge_ok = [&](std::size_t e) {
    std::vector<Vec2> at_a, at_b;
    for (const auto& [f, s] : incident[edges[e].first]) {
      if (f != e) at_a.push_back(weight(f, s));
    }
    for (const auto& [f, s] : incident[edges[e].second]) {
      if (f != e) at_b.push_back(weight(f, s));
    }
    return weights_pairable(at_a, at_b, weight(e, 1));
  };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == m) {
      out.solutions.push_back(mult);
      return;
    }
    for (long val = 1; val <= bound; ++val) {
      mult[k] = val;
      bool good = true;
      for (std::size_t e = 0; e < m && good; ++e) {
        if (ready[e] == k) good = edge_ok(e);
      }
      if (good) rec(k + 1);
    }
    mult[k] = 0;
  };
  rec(0);
  std::sort(out.solutions.begin(), out.solutions.end(), [&](const auto& x, const auto& y) {
    const long nx = out.norm(x), ny = out.norm(y);
    return nx != ny ? nx < ny : x < y;
  });
  return out;
}

}  // namespace oracle
