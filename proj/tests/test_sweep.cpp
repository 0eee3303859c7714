#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "fixtures.hpp"
#include "gtdraw/arrangement.hpp"
#include "gtdraw/construct.hpp"
#include "gtdraw/sweep.hpp"

using namespace gtdraw;
using testfix::pentagon;
using testfix::straight;
using testfix::twisted_like;

namespace {

EdgeId E(int a, int b) { return EdgeId(a, b); }

// The two sweep words on three vertices (up to the orientation of the ray).
SweepWord k3_word_a() {
  SweepWord w;
  w.n = 3;
  w.pi0 = {E(2, 3), E(1, 3), E(1, 2)};
  w.events = {vert_event(1, {}), vert_event(2, {E(1, 2)}),
              vert_event(3, {E(2, 3), E(1, 3)}, 0)};
  return w;
}

SweepWord k3_word_b() {
  SweepWord w;
  w.n = 3;
  w.pi0 = {E(1, 2), E(1, 3), E(2, 3)};
  w.events = {vert_event(1, {}), vert_event(2, {E(1, 2)}),
              vert_event(3, {E(1, 3), E(2, 3)}, 1)};
  return w;
}

// Sweep word of the twisted drawing of K_4, derived from its geometry: one
// crossing, between the outermost pair after the last vertex.
SweepWord k4_twisted_word() {
  SweepWord w;
  w.n = 4;
  w.pi0 = {E(1, 2), E(1, 3), E(1, 4), E(2, 3), E(2, 4), E(3, 4)};
  w.events = {vert_event(1, {}),
              vert_event(2, {E(1, 2)}),
              vert_event(3, {E(1, 3), E(2, 3)}),
              vert_event(4, {E(1, 4), E(2, 4), E(3, 4)}, 3),
              cross_event(E(1, 4), E(2, 3))};
  return w;
}

CrossingSet nested_pairs(int n) {
  std::vector<std::pair<EdgeId, EdgeId>> raw;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i + 1; k < j; ++k)
        for (int l = k + 1; l < j; ++l) raw.emplace_back(E(i, j), E(k, l));
  return CrossingSet::from_pairs(std::move(raw));
}

SweepErrorCode code_of(const SweepWord& w) {
  SweepReport r = validate_sweep_word(w);
  REQUIRE(!r.ok());
  return r.issue->code;
}

// Replaces the polyline of one arc and rebuilds the drawing.
Drawing reroute(const Drawing& d, const EdgeId& e, std::vector<Pt> polyline, bool wrap) {
  std::vector<Arc> arcs = d.arcs;
  arcs[edge_index(e, d.n)] = Arc{e, std::move(polyline), wrap};
  return Drawing::make(d.n, d.mode, d.vertex_pos, std::move(arcs));
}

}  // namespace

TEST_CASE("the two words on three vertices validate and realize") {
  for (const SweepWord& w : {k3_word_a(), k3_word_b()}) {
    CHECK(validate_sweep_word(w).ok());
    CHECK(word_crossing_set(w).size() == 0);
    Drawing d = realize(w);
    CHECK(d.n == 3);
    CHECK(d.mode == Mode::kCylinder);
    CHECK(validate_simple(d).ok());
    CHECK(crossing_set(d).size() == 0);
    GtVerdict gt = validate_gt(d);
    CHECK(gt.is_gt);
    CHECK(gt.ray.has_value());
    CHECK(extract_sweep_word(d) == w);
  }
}

TEST_CASE("realized arcs wrap once and vertices follow the sweep order") {
  Drawing d = realize(k3_word_a());
  for (const Arc& a : d.arcs) {
    CHECK(a.wrap);
    auto [lo, hi] = d.arc_span(a.edge);
    CHECK(hi - lo < Rat(1));
    CHECK(a.from_v == a.edge.v);
  }
  for (int v = 1; v < d.n; ++v) CHECK(d.vpos(v).x < d.vpos(v + 1).x);
}

TEST_CASE("twisted K_4: extraction matches the hand-written word") {
  const SweepWord want = k4_twisted_word();
  CHECK(validate_sweep_word(want).ok());

  SweepWord got = extract_sweep_word(twisted_like(4));
  CHECK(got == want);

  Drawing d = realize(want);
  CHECK(validate_simple(d).ok());
  CHECK(crossing_set(d) == word_crossing_set(want));
  CHECK(crossing_set(d) == nested_pairs(4));
  CHECK(extract_sweep_word(d) == want);
}

TEST_CASE("twisted words round-trip through realization") {
  for (int n : {5, 6, 7, 8}) {
    CAPTURE(n);
    SweepWord w = extract_sweep_word(n <= 5 ? twisted_like(n) : gtdraw::twisted(n));
    CHECK(validate_sweep_word(w).ok());
    CHECK(word_crossing_set(w) == nested_pairs(n));
    Drawing d = realize(w);
    CHECK(validate_simple(d).ok());
    CHECK(crossing_set(d) == nested_pairs(n));
    CHECK(validate_gt(d).is_gt);
    CHECK(extract_sweep_word(d) == w);
  }
}

TEST_CASE("replay rejections, one per code") {
  SUBCASE("vertex out of sweep order") {
    SweepWord w = k3_word_b();
    std::swap(w.events[0], w.events[1]);
    CHECK(code_of(w) == SweepErrorCode::kVertOrder);
  }
  SUBCASE("arriving edges not radially consecutive") {
    SweepWord w;
    w.n = 4;
    w.pi0 = {E(1, 2), E(2, 3), E(1, 3), E(1, 4), E(2, 4), E(3, 4)};
    w.events = {vert_event(1, {}), vert_event(2, {E(1, 2)}),
                vert_event(3, {E(1, 3), E(2, 3)}),
                vert_event(4, {E(1, 4), E(2, 4), E(3, 4)}, 0)};
    CHECK(code_of(w) == SweepErrorCode::kNoncontiguousArrival);
  }
  SUBCASE("swap of non-neighbours") {
    SweepWord w = k4_twisted_word();
    w.events.insert(w.events.begin(), cross_event(E(1, 2), E(3, 4)));
    CHECK(code_of(w) == SweepErrorCode::kNonadjacentSwap);
  }
  SUBCASE("swap involving an edge that already left") {
    SweepWord w = k4_twisted_word();
    w.events.insert(w.events.begin() + 1, cross_event(E(1, 2), E(3, 4)));
    CHECK(code_of(w) == SweepErrorCode::kNonadjacentSwap);
  }
  SUBCASE("adjacent edges may not cross") {
    SweepWord w = k4_twisted_word();
    w.events.insert(w.events.begin(), cross_event(E(1, 2), E(1, 3)));
    CHECK(code_of(w) == SweepErrorCode::kAdjacentPairCrosses);
  }
  SUBCASE("a pair may cross only once") {
    SweepWord w;
    w.n = 4;
    w.pi0 = {E(1, 3), E(2, 4), E(1, 2), E(1, 4), E(2, 3), E(3, 4)};
    w.events = {cross_event(E(1, 3), E(2, 4)), cross_event(E(1, 3), E(2, 4)),
                vert_event(1, {}), vert_event(2, {E(1, 2)}),
                vert_event(3, {E(1, 3), E(2, 3)}),
                vert_event(4, {E(1, 4), E(2, 4), E(3, 4)}, 0)};
    CHECK(code_of(w) == SweepErrorCode::kPairCrossesTwice);
  }
  SUBCASE("the order must close up after a full turn") {
    SweepWord w = k3_word_a();
    w.events[2] = vert_event(3, {E(2, 3), E(1, 3)}, 1);
    SweepReport r = validate_sweep_word(w);
    REQUIRE(!r.ok());
    CHECK(r.issue->code == SweepErrorCode::kClosureMismatch);
    CHECK(r.issue->event_index == -1);
  }
}

TEST_CASE("malformed words are schema errors") {
  SUBCASE("pi0 not a permutation of the edges") {
    SweepWord w = k3_word_a();
    w.pi0[1] = E(1, 2);
    CHECK_THROWS_AS(validate_sweep_word(w), SchemaError);
  }
  SUBCASE("wrong departure set") {
    SweepWord w = k3_word_a();
    w.events[1] = vert_event(2, {E(1, 3)});
    CHECK_THROWS_AS(validate_sweep_word(w), SchemaError);
  }
  SUBCASE("rank on a vertex that is not last") {
    SweepWord w = k3_word_a();
    w.events[1] = vert_event(2, {E(1, 2)}, 0);
    CHECK_THROWS_AS(validate_sweep_word(w), SchemaError);
  }
  SUBCASE("missing rank on the last vertex") {
    SweepWord w = k3_word_a();
    w.events[2] = vert_event(3, {E(2, 3), E(1, 3)});
    CHECK_THROWS_AS(validate_sweep_word(w), SchemaError);
  }
  SUBCASE("insertion rank beyond the active edges") {
    SweepWord w = k3_word_a();
    w.events[2] = vert_event(3, {E(2, 3), E(1, 3)}, 2);
    CHECK_THROWS_AS(validate_sweep_word(w), SchemaError);
  }
  SUBCASE("crossing event repeating an edge") {
    SweepWord w = k4_twisted_word();
    SweepEvent ev;
    ev.kind = SweepEvent::Kind::kCross;
    ev.a = ev.b = E(1, 2);
    w.events.push_back(ev);
    CHECK_THROWS_AS(validate_sweep_word(w), SchemaError);
  }
  SUBCASE("a vertex event missing entirely") {
    SweepWord w = k3_word_a();
    w.events.pop_back();
    CHECK_THROWS_AS(validate_sweep_word(w), SchemaError);
  }
  SUBCASE("realize refuses invalid words") {
    SweepWord w = k3_word_b();
    std::swap(w.events[0], w.events[1]);
    CHECK_THROWS_AS(realize(w), Error);
  }
}

TEST_CASE("generalized-twisted verdict") {
  SUBCASE("twisted drawings qualify") {
    GtVerdict gt = validate_gt(twisted_like(5));
    CHECK(gt.is_gt);
    REQUIRE(gt.ray.has_value());
    // The witness angle really does sit inside every edge's window.
    Drawing d = twisted_like(5);
    for (const Arc& a : d.arcs) {
      auto [lo, hi] = d.arc_span(a.edge);
      Rat f = *gt.ray - lo;
      f = f - f.floor();
      CHECK(f <= hi - lo);
    }
  }
  SUBCASE("an edge spanning a full turn disqualifies") {
    std::vector<Pt> vp = {{Rat(1, 4), Rat(1)}, {Rat(2, 4), Rat(2)}, {Rat(3, 4), Rat(3)}};
    std::vector<Arc> arcs;
    arcs.push_back({E(1, 2), {{Rat(2, 4), Rat(2)}, {Rat(9, 4), Rat(1)}}, true});
    arcs.push_back({E(1, 3), {{Rat(3, 4), Rat(3)}, {Rat(5, 4), Rat(1)}}, true});
    arcs.push_back({E(2, 3), {{Rat(3, 4), Rat(3)}, {Rat(6, 4), Rat(2)}}, true});
    Drawing d = Drawing::make(3, Mode::kCylinder, vp, arcs);
    GtVerdict gt = validate_gt(d);
    CHECK(!gt.is_gt);
    CHECK(gt.reason.find("1-2") != std::string::npos);
    CHECK(gt.reason.find("full turn") != std::string::npos);
  }
  SUBCASE("no common ray disqualifies") {
    Drawing d = twisted_like(4);
    d = reroute(d, E(2, 3), {{Rat(2, 5), Rat(2)}, {Rat(3, 5), Rat(3)}}, false);
    d = reroute(d, E(3, 4), {{Rat(3, 5), Rat(3)}, {Rat(4, 5), Rat(4)}}, false);
    GtVerdict gt = validate_gt(d);
    CHECK(!gt.is_gt);
    CHECK(gt.reason.find("no ray") != std::string::npos);
  }
  SUBCASE("plane drawings are the wrong mode") {
    CHECK_THROWS_AS(validate_gt(straight(5, pentagon())), ModeMismatchError);
    CHECK_THROWS_AS(extract_sweep_word(straight(5, pentagon())), ModeMismatchError);
  }
}

TEST_CASE("extraction refuses coincident event angles") {
  // Twisted K_5 with edge 2-3 rerouted so that its crossing with 1-4 happens
  // at angle 17/18, the angle of the crossing 1-5 x 3-4.
  Drawing d = reroute(twisted_like(5), E(2, 3),
                      {{Rat(1, 2), Rat(3)},
                       {Rat(31, 36), Rat(9, 4)},
                       {Rat(35, 36), Rat(85, 36)},
                       {Rat(4, 3), Rat(2)}},
                      true);
  REQUIRE(validate_simple(d).ok());
  REQUIRE(crossing_set(d) == nested_pairs(5));
  REQUIRE(validate_gt(d).is_gt);
  CHECK_THROWS_AS(extract_sweep_word(d), CoincidentAnglesError);
}

TEST_CASE("radial side of a vertex against a triangle") {
  Drawing d = twisted_like(5);
  SUBCASE("pinned sides") {
    CHECK(radial_side(d, {1, 2, 3}, 4) == RadialSide::kZSide);
    CHECK(radial_side(d, {1, 2, 3}, 5) == RadialSide::kZSide);
  }
  SUBCASE("corners are degenerate") {
    CHECK_THROWS_AS(radial_side(d, {1, 2, 3}, 1), DegenerateRadiusError);
  }
  SUBCASE("plane drawings are the wrong mode") {
    CHECK_THROWS_AS(radial_side(straight(5, pentagon()), {1, 2, 3}, 4), ModeMismatchError);
  }
  SUBCASE("agrees with the face two-colouring") {
    Arrangement arr = planarize(d);
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b)
        for (int c = b + 1; c <= 5; ++c) {
          SidePartition sp = side_partition(arr, {a, b, c});
          for (int w = 1; w <= 5; ++w) {
            if (w == a || w == b || w == c) continue;
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(c);
            CAPTURE(w);
            const bool o_side = radial_side(d, {a, b, c}, w) == RadialSide::kOSide;
            CHECK(o_side == (sp.vertex_side[w - 1] == sp.side_of_o));
          }
        }
  }
}
