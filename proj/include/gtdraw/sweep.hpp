#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gtdraw/drawing.hpp"

namespace gtdraw {

// One event of a sweep around the cylinder, taken in angular order starting
// just after the distinguished ray. A vertex event removes the radially
// contiguous block of arcs arriving at the vertex and inserts the departing
// arcs (listed innermost first) in its place; the last vertex has nothing
// arriving, so it carries an explicit 0-based insertion rank instead. A
// crossing event swaps two radially adjacent arcs.
struct SweepEvent {
  enum class Kind { kVert, kCross };
  Kind kind = Kind::kVert;
  int vertex = 0;
  std::vector<EdgeId> depart;
  std::optional<int> rank;
  EdgeId a, b;
  friend bool operator==(const SweepEvent&, const SweepEvent&) = default;
};

SweepEvent vert_event(int vertex, std::vector<EdgeId> depart, std::optional<int> rank = {});
SweepEvent cross_event(EdgeId a, EdgeId b);

// Combinatorial description of a generalized-twisted drawing: the radial
// order of all C(n,2) edges at the ray (innermost first) plus the event list
// of one full turn. Vertex labels follow the sweep order.
struct SweepWord {
  int n = 0;
  std::vector<EdgeId> pi0;
  std::vector<SweepEvent> events;
  friend bool operator==(const SweepWord&, const SweepWord&) = default;
};

enum class SweepErrorCode {
  kVertOrder,
  kNoncontiguousArrival,
  kNonadjacentSwap,
  kAdjacentPairCrosses,
  kPairCrossesTwice,
  kClosureMismatch,
};
std::string to_string(SweepErrorCode c);

struct SweepIssue {
  SweepErrorCode code;
  int event_index = -1;  // -1: detected at the end of the word
  std::string detail;
};

struct SweepReport {
  std::optional<SweepIssue> issue;
  bool ok() const { return !issue.has_value(); }
};

// Replays the word. Structural malformations (wrong edge multiset in pi0,
// wrong departure set, misplaced insertion rank, ...) throw SchemaError; the
// sweep invariants land in the report.
SweepReport validate_sweep_word(const SweepWord& w);

// The crossing pairs named by the word's crossing events.
CrossingSet word_crossing_set(const SweepWord& w);

// Geometric realization on the cylinder: vertices and crossings at distinct
// angles, arcs as angle-monotone polylines all wrapping across the ray once.
// Throws Error when the word does not validate.
Drawing realize(const SweepWord& w);

// Reads the word back off a drawing using a ray through no vertex or
// crossing. Throws ModeMismatchError for PLANE mode, CoincidentAnglesError
// when two events share an angle, and Error when the drawing is invalid, not
// generalized twisted, or its labels do not follow the sweep order.
SweepWord extract_sweep_word(const Drawing& d);

struct GtVerdict {
  bool is_gt = false;
  std::string reason;      // set when !is_gt
  std::optional<Rat> ray;  // witness angle when is_gt
};

// Is the drawing generalized twisted: no arc spans a full turn, and some ray
// from the center meets every edge exactly once. Throws ModeMismatchError for
// PLANE mode.
GtVerdict validate_gt(const Drawing& d);

enum class RadialSide { kOSide, kZSide };

// Which side of the triangle's closed curve vertex w lies on, via the parity
// of boundary strands strictly below w on its radial segment toward O: even
// parity is the O side. Throws DegenerateRadiusError on a radius tie (in a
// valid drawing: exactly when w is a corner), ModeMismatchError for PLANE.
RadialSide radial_side(const Drawing& d, const std::array<int, 3>& tri, int w);

}  // namespace gtdraw
