#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtdraw/drawing.hpp"
#include "gtdraw/sweep.hpp"

namespace gtdraw {

// Vertex triple, ascending.
using Triangle = std::array<int, 3>;

std::vector<Triangle> all_triangles(int n);
std::string tri_str(const Triangle& t);

enum class EmptySide { kNone, kA, kB, kBoth };
std::string to_string(EmptySide side);

// Per-triangle census. The triangle's boundary splits the other vertices in
// two: side A is the side of the center on the cylinder and the bounded side
// in the plane, side B the other one. A side is empty when it holds no
// vertex; BOTH happens only for n = 3. The triangle is a star triangle at a
// corner x when no edge incident to x crosses the opposite edge.
// o_side_empty is set for cylinder drawings with exactly one empty side and
// tells whether that side is the center side.
struct TriangleReport {
  Triangle triangle{};
  std::vector<int> side_a;
  std::vector<int> side_b;
  EmptySide empty_side = EmptySide::kNone;
  std::vector<int> star_at;
  std::optional<bool> o_side_empty;

  bool empty() const { return empty_side != EmptySide::kNone; }
  bool star(int x) const;
};

// One report per vertex triple, in lexicographic order. Sides come from the
// radial parity test on the cylinder and from the planarization in the
// plane. Pre: the drawing is simple (checked).
std::vector<TriangleReport> analyze_triangles(const Drawing& d);

// Number of triangles with an empty side (BOTH counts once).
int count_empty(const std::vector<TriangleReport>& reports);
int count_empty(const Drawing& d);

// Empty triangles containing x that are star triangles at x.
// The Drawing overload analyzes first; pre n >= 4.
std::vector<Triangle> empty_star_triangles_at(const std::vector<TriangleReport>& reports, int x);
std::vector<Triangle> empty_star_triangles_at(const Drawing& d, int x);

// Empty triangles that are star triangles at exactly two corners.
// Meaningful for generalized twisted drawings (where there are exactly four).
std::vector<Triangle> double_star_empty(const std::vector<TriangleReport>& reports);
std::vector<Triangle> double_star_empty(const Drawing& d);

enum class SuiteLevel { kSimple, kGt };

struct SuiteCheck {
  std::string name;
  bool pass = true;
  // Key/value payload naming the first violating tuple; empty when passing.
  std::vector<std::pair<std::string, std::string>> witness;
};

struct SuiteReport {
  SuiteLevel level = SuiteLevel::kSimple;
  std::optional<GtVerdict> gt;  // engaged at GT level
  std::vector<SuiteCheck> checks;

  // Every check passed, and at GT level the drawing is generalized twisted.
  bool all_pass() const;
  const SuiteCheck& at(const std::string& name) const;
};

// Runs the lemma checks. SIMPLE level runs S1..S7 on any simple drawing;
// GT level additionally records the gt verdict and runs G1..G8 (cylinder
// drawings only). The G checks are evaluated even when the verdict is
// negative, so a broken drawing yields concrete counterexamples.
// Pre: the drawing is simple (checked) and n >= 4.
//   S1 every 4-subset has at most one crossing
//   S2 every vertex has at least two empty star triangles
//   S3 a star triangle at x is empty iff its other corners are consecutive
//      in the rotation around x
//   S4 empty sides of two empty star triangles at the same vertex are
//      region-disjoint
//   S5 if x, y are on the same side of triangle uvw and (x,v) crosses (u,w),
//      then (x,y) crosses at most one of (v,u), (v,w)
//   S6 every vertex lies on at least two empty triangles
//   S7 at least n empty triangles
//   G1 every triangle separates the two cylinder ends
//   G2 no three interior-disjoint triangles (exhaustive for n <= 7, sampled
//      above)
//   G3 the end cells each have a vertex on their boundary
//   G4 every 4-subset has exactly one crossing
//   G5 every vertex has exactly two empty star triangles, one per end
//   G6 every empty triangle with the center on its empty side contains every
//      boundary vertex v of the center cell, is star at one or both of the
//      other corners, and when star at both, all edges from v cross the
//      opposite edge
//   G7 exactly four double-star empty triangles, two per end
//   G8 exactly 2n-4 empty triangles
SuiteReport verify_suite(const Drawing& d, SuiteLevel level);

}  // namespace gtdraw
