#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gkm/gkm_graph.hpp"

// Planar (rank 2) geometry of moment images.

namespace gkm {

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const WeightVector& a, const WeightVector& b, const WeightVector& c);

/// Whether a and b lie in the same closed half-plane bounded by the line R*line_dir.
/// A vector on the line counts as being on either side.
bool same_side(const WeightVector& a, const WeightVector& b, const WeightVector& line_dir);

/// Whether the closed segments [a,b] and [c,d] meet.
bool segments_intersect(const WeightVector& a, const WeightVector& b, const WeightVector& c, const WeightVector& d);

enum class TetragonClass { Convex, Concave, Crossed };
std::string_view to_string(TetragonClass t);

/// Classifies the closed polygon A->B->C->D->A. Throws Error(Degenerate) on
/// repeated points or three consecutive collinear points.
TetragonClass classify_tetragon(const WeightVector& a, const WeightVector& b, const WeightVector& c,
                                const WeightVector& d);

struct CycleShape {
  std::size_t start = 0;
  std::vector<std::size_t> vertices;
  bool triangular = false;
  TetragonClass tetragon = TetragonClass::Convex;  ///< meaningful only when !triangular
};

CycleShape cycle_shape(const OrientedGkmGraph& og, std::size_t p);

/// Vertex-indices of the extreme points of the convex hull of mu(V), counter-clockwise,
/// starting from the lowest-then-leftmost point.
std::vector<std::size_t> convex_hull(const GkmGraph& g);

/// Whether mu(v) lies on the topological boundary of the hull of mu(V).
bool on_hull_boundary(const GkmGraph& g, std::size_t v);

/// Whether the outward weights at v positively span the plane.
bool is_interior_vertex(const GkmGraph& g, std::size_t v);
inline bool is_interior_vertex(const OrientedGkmGraph& og, std::size_t v) {
  return is_interior_vertex(og.graph(), v);
}

struct TableType {
  std::size_t hull_vertices = 0;
  std::size_t vertex_count = 0;
  bool o_adjacent_r = false;
  std::size_t tetragonal_cycles = 0;
  char label = '?';
};

/// Matches (hull vertices, |V|, o~r, #tetragonal cycles) against the seven
/// admissible rows:
///   a: 3,4,Y,0  b: 4,4,Y,0  c: 4,6,N,1  d: 4,6,Y,2
///   e: 5,6,N,1  f: 6,6,Y,2  g: 6,8,N,3
/// Throws Error(Unclassifiable) if none matches.
TableType classify_type(const OrientedGkmGraph& og);

/// Looks up a row by its criteria; '?' when there is none.
char table_label(std::size_t hull_vertices, std::size_t vertex_count, bool o_adjacent_r,
                 std::size_t tetragonal_cycles);

struct SignWitness {
  std::string p;
  std::string q;
  std::string rule;  ///< "same_side", "convex_cycle" or "all_convex"
  bool same_side = false;
  Rational c;
};

/// For every adjacent index-two/index-four pair: c_pq > 0 iff the descending
/// weight at p and the weight from q to its other lower neighbour lie on the
/// same side of the line R*alpha_{p,q}. For convex tetragonal cycles through p:
/// c_pq > 0. With eight vertices: every ascending cycle convex.
/// Throws Error(ConditionViolated) naming the offending pair.
std::vector<SignWitness> check_sign_conditions(const OrientedGkmGraph& og);

}  // namespace gkm
