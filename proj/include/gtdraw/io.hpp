#pragma once

#include <string>
#include <vector>

#include "gtdraw/drawing.hpp"
#include "gtdraw/sweep.hpp"
#include "gtdraw/triangles.hpp"

namespace gtdraw {

// All serializers emit canonical text: object keys sorted, rationals in
// lowest terms ("num/den", the "/den" dropped for integers), arcs in edge
// order, one trailing newline. Byte equality of serialized forms is therefore
// a valid equality test on the underlying values.

// Drawing file: JSON {"n", "mode": "plane"|"cylinder",
//   "vertices": [{"id", "x", "y"}, ...],
//   "edges": [{"u", "v", "polyline": [[x, y], ...], "wrap"?}, ...]}
// with every coordinate a rational string. The "wrap" flag is present exactly
// on cylinder arcs that cross the distinguished ray. parse_drawing runs the
// full structural checks of Drawing::make; malformed JSON or schema
// violations throw SchemaError (with a field path where known), bad
// coordinate literals throw RationalParseError.
Drawing parse_drawing(const std::string& text);
std::string serialize_drawing(const Drawing& d);

// Sweep-word file: JSON {"n", "pi0": ["u-v", ...], "events": [...]} where an
// event is {"cross": ["u-v", "u-v"]} or {"vert": i, "depart": ["u-v", ...]}
// plus a 0-based "rank" on the last vertex event only. parse_sweep_word runs
// the structural half of validate_sweep_word (bad shapes throw SchemaError)
// but accepts words whose replay breaks a sweep invariant, so that invalid
// words can still be loaded and diagnosed.
SweepWord parse_sweep_word(const std::string& text);
std::string serialize_sweep_word(const SweepWord& w);

// Crossing-set file: one line per crossing pair, "u1-v1 x u2-v2", sorted.
CrossingSet parse_crossing_set(const std::string& text);
std::string serialize_crossing_set(const CrossingSet& cs);

// Suite report: JSON keyed by check id (S1..S7, and G1..G8 at GT level),
// each {"pass": bool} plus a "witness" object naming the first violating
// tuple when the check failed. At GT level one extra key "gt" reports the
// generalized-twisted verdict the same way.
std::string serialize_suite_report(const SuiteReport& r);

// Knobs for render_svg. Dimensions and strokes must be positive.
struct RenderStyle {
  int width = 860;
  int height = 860;
  double vertex_radius = 4.5;
  double edge_stroke = 1.2;
  double marker_stroke = 1.0;
  bool show_o_z_regions = true;        // label O and Z in cylinder views
  bool highlight_empty_triangles = true;
  bool unroll = false;                 // strip view instead of the polar view
};

// Deterministic SVG picture of a drawing: arcs as paths, vertices labeled,
// one dot per crossing, the distinguished ray dashed (cylinder mode). When
// reports are supplied and highlighting is on, each empty triangle's closed
// boundary curve is shaded (polar and plane views; the strip view cuts those
// curves at the seam, so it never shades). Numbers are printed to 9
// significant digits; this is the only place the library leaves exact
// arithmetic. Invalid drawings still render, just without crossing dots.
std::string render_svg(const Drawing& d, const std::vector<TriangleReport>* reports = nullptr,
                       const RenderStyle& style = RenderStyle{});

}  // namespace gtdraw
