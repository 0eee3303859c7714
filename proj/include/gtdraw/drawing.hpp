#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtdraw/exact.hpp"

namespace gtdraw {

// Unordered pair of distinct 1-based vertices, stored with u < v.
struct EdgeId {
  int u = 0, v = 0;
  EdgeId() = default;
  EdgeId(int a, int b) {
    if (a == b || a < 1 || b < 1) throw Error("bad edge pair");
    u = a < b ? a : b;
    v = a < b ? b : a;
  }
  bool contains(int w) const { return u == w || v == w; }
  // Shares at least one endpoint.
  bool adjacent(const EdgeId& o) const { return contains(o.u) || contains(o.v); }
  int other(int w) const { return u == w ? v : u; }
  std::string str() const { return std::to_string(u) + "-" + std::to_string(v); }
  friend bool operator==(const EdgeId& a, const EdgeId& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const EdgeId& a, const EdgeId& b) { return !(a == b); }
  friend bool operator<(const EdgeId& a, const EdgeId& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

// Position of edge {u,v} in the lexicographic list of all pairs over 1..n.
inline int edge_index(const EdgeId& e, int n) {
  return (e.u - 1) * (2 * n - e.u) / 2 + (e.v - e.u - 1);
}
inline int edge_count(int n) { return n * (n - 1) / 2; }
std::vector<EdgeId> all_edges(int n);

enum class Mode { kPlane, kCylinder };

// One drawn edge. In PLANE mode the polyline is in Cartesian (x, y).
// In CYLINDER mode points are (angle, radius) with the angle coordinate
// unrolled: it increases strictly along the polyline and may pass integer
// values; angles that differ by an integer are the same cylinder angle.
// `wrap` marks that the arc crosses the distinguished ray (an integer angle
// strictly inside its span).
struct Arc {
  EdgeId edge;
  std::vector<Pt> polyline;
  bool wrap = false;
  int from_v = 0;  // endpoint at polyline.front(); set by Drawing::make
};

// A simple-drawing candidate of the complete graph K_n. Construction via
// make() enforces the structural invariants; geometric simplicity is the
// job of validate_simple.
struct Drawing {
  int n = 0;
  Mode mode = Mode::kPlane;
  std::vector<Pt> vertex_pos;  // [v-1] for vertex v
  std::vector<Arc> arcs;       // all C(n,2) edges, sorted by EdgeId

  static Drawing make(int n, Mode mode, std::vector<Pt> vertex_pos, std::vector<Arc> arcs);

  const Pt& vpos(int v) const { return vertex_pos[v - 1]; }
  const Arc& arc(const EdgeId& e) const { return arcs[edge_index(e, n)]; }

  // CYLINDER helpers.
  // Angular span of an arc in unrolled coordinates.
  std::pair<Rat, Rat> arc_span(const EdgeId& e) const;
  // Radius of the arc at an unrolled angle within its span.
  Rat arc_radius_at(const EdgeId& e, const Rat& theta) const;
  // All unrolled angles within the span mapping to cylinder angle `theta01`.
  std::vector<Rat> span_hits(const EdgeId& e, const Rat& theta01) const;
};

// (theta mod 1, r)
Pt cyl_canonical(const Pt& p);

enum class ValidationErrorCode {
  kDoubleCrossing,
  kAdjacentCrossing,
  kVertexOnArc,
  kDegenerateContact,
  kTriplePoint,
};
std::string to_string(ValidationErrorCode c);

struct ValidationError {
  ValidationErrorCode code;
  std::optional<EdgeId> e1, e2;
  std::optional<int> vertex;
  std::vector<Pt> points;  // exact offending locations (first arc's frame)
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationError> errors;
  bool ok() const { return errors.empty(); }
};

// Proper transversal crossing between two arcs, with enough arc-local data
// to split polylines for the arrangement.
struct ArcCrossing {
  EdgeId e, f;      // e < f
  Pt pos_e, pos_f;  // the point in each arc's own (unrolled) frame
  int seg_e = 0, seg_f = 0;
  Rat t_e, t_f;     // parameter in (0,1) within the segment
};

struct PairwiseResult {
  ValidationReport report;
  std::vector<ArcCrossing> crossings;  // meaningful when report.ok()
};

// Full pairwise sweep: arc self-checks, arc-pair contacts, vertex-on-arc,
// coincident crossing points.
PairwiseResult pairwise_intersections(const Drawing& d);

// OK iff every pair of arcs meets at most once, each meeting being a proper
// crossing or a shared endpoint, no arc passes through a foreign vertex and
// no two crossings coincide.
ValidationReport validate_simple(const Drawing& d);

struct CrossingSet {
  // Sorted pairs (e, f) with e < f.
  std::vector<std::pair<EdgeId, EdgeId>> pairs;

  static CrossingSet from_pairs(std::vector<std::pair<EdgeId, EdgeId>> raw);
  bool crosses(const EdgeId& a, const EdgeId& b) const;
  int size() const { return static_cast<int>(pairs.size()); }
  // Crossings within the 4-subset {a,b,c,d}.
  int count_in_quad(int a, int b, int c, int d) const;
  friend bool operator==(const CrossingSet& x, const CrossingSet& y) { return x.pairs == y.pairs; }
};

// Pre: validate_simple(d).ok().
CrossingSet crossing_set(const Drawing& d);
CrossingSet crossing_set(const Drawing& d, const PairwiseResult& pw);

struct RotationSystem {
  // rot[v-1]: the other endpoints in counterclockwise cyclic order around v
  // (counterclockwise in the coordinate chart), rotated so the smallest
  // vertex comes first.
  std::vector<std::vector<int>> rot;
  // True iff y and z are cyclically adjacent around x.
  bool consecutive(int x, int y, int z) const;
};

// Throws AmbiguousRotationError if two arcs leave a vertex in the same
// direction.
RotationSystem rotation_system(const Drawing& d);

}  // namespace gtdraw
