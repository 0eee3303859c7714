#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "gtdraw/arrangement.hpp"
#include "gtdraw/construct.hpp"
#include "gtdraw/triangles.hpp"

using namespace gtdraw;
using testfix::pentagon;
using testfix::straight;

namespace {

const std::vector<Pt>& square() {
  static const std::vector<Pt> p = {{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(4), Rat(4)},
                                    {Rat(0), Rat(4)}};
  return p;
}

// twisted(4) with edge {1,4} rerouted from vertex 4 the long way around
// (1.4 turns) through the face that touches all four vertices, so the single
// crossing of the drawing is gone.
Drawing no_crossing_k4() {
  Drawing d = twisted(4);
  Arc& a = d.arcs[edge_index(EdgeId(1, 4), 4)];
  a.polyline = {d.vpos(4),
                {Rat(9, 10), Rat(189, 50)},
                {Rat(13, 10), Rat(29, 10)},
                {Rat(3, 2), Rat(29, 10)},
                {Rat(17, 10), Rat(13, 5)},
                {Rat(2), Rat(17, 10)},
                {Rat(11, 5), Rat(5, 4)}};
  a.wrap = true;
  return Drawing::make(d.n, d.mode, d.vertex_pos, d.arcs);
}

const TriangleReport& report_for(const std::vector<TriangleReport>& rs, const Triangle& t) {
  for (const TriangleReport& r : rs)
    if (r.triangle == t) return r;
  throw Error("no report for " + tri_str(t));
}

}  // namespace

TEST_CASE("a lone triangle has both sides empty") {
  for (const Drawing& d : {straight(3, {{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(1), Rat(3)}}),
                           twisted(3)}) {
    const auto rs = analyze_triangles(d);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].triangle == Triangle{1, 2, 3});
    CHECK(rs[0].empty_side == EmptySide::kBoth);
    CHECK(rs[0].side_a.empty());
    CHECK(rs[0].side_b.empty());
    CHECK(rs[0].star_at == std::vector<int>{1, 2, 3});
    CHECK(!rs[0].o_side_empty.has_value());
    CHECK(count_empty(d) == 1);
  }
}

TEST_CASE("convex pentagon: all ten triangles empty on the bounded side") {
  const Drawing d = straight(5, pentagon());
  const auto rs = analyze_triangles(d);
  REQUIRE(rs.size() == 10);
  for (const TriangleReport& r : rs) {
    CAPTURE(tri_str(r.triangle));
    CHECK(r.empty_side == EmptySide::kA);
    CHECK(r.side_a.empty());
    CHECK(r.side_b.size() == 2);
    CHECK(!r.o_side_empty.has_value());
  }
  CHECK(count_empty(d) == 10);
  CHECK(report_for(rs, {1, 2, 3}).star_at == std::vector<int>{1, 3});
  CHECK(report_for(rs, {1, 2, 4}).star_at == std::vector<int>{4});
  CHECK(empty_star_triangles_at(d, 1) ==
        std::vector<Triangle>{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}});
}

TEST_CASE("twisted drawings have exactly 2n-4 empty triangles") {
  for (int n = 4; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(count_empty(twisted(n)) == 2 * n - 4);
  }
}

TEST_CASE("star structure of twisted drawings") {
  for (int n : {4, 5, 6, 8}) {
    CAPTURE(n);
    const Drawing d = twisted(n);
    const auto rs = analyze_triangles(d);
    int incidences = 0;
    for (int x = 1; x <= n; ++x) {
      CAPTURE(x);
      const auto ts = empty_star_triangles_at(rs, x);
      REQUIRE(ts.size() == 2);
      incidences += 2;
      const auto& oa = report_for(rs, ts[0]).o_side_empty;
      const auto& ob = report_for(rs, ts[1]).o_side_empty;
      REQUIRE(oa.has_value());
      REQUIRE(ob.has_value());
      CHECK(*oa != *ob);
    }
    CHECK(incidences == 2 * n);
    const auto ds = double_star_empty(rs);
    REQUIRE(ds.size() == 4);
    int with_o = 0;
    for (const Triangle& t : ds) with_o += *report_for(rs, t).o_side_empty ? 1 : 0;
    CHECK(with_o == 2);
    CHECK(2 * 4 + (count_empty(rs) - 4) == 2 * n);
  }
}

TEST_CASE("triangle census is preserved by the sweep round trip") {
  const Drawing d = twisted(5);
  const Drawing d2 = realize(extract_sweep_word(d));
  const auto rs = analyze_triangles(d);
  const auto rs2 = analyze_triangles(d2);
  REQUIRE(rs.size() == rs2.size());
  for (size_t i = 0; i < rs.size(); ++i) {
    CAPTURE(tri_str(rs[i].triangle));
    CHECK(rs[i].triangle == rs2[i].triangle);
    CHECK(rs[i].empty_side == rs2[i].empty_side);
    CHECK(rs[i].side_a == rs2[i].side_a);
    CHECK(rs[i].side_b == rs2[i].side_b);
    CHECK(rs[i].star_at == rs2[i].star_at);
    CHECK(rs[i].o_side_empty == rs2[i].o_side_empty);
  }
}

TEST_CASE("radial side test agrees with the planarization") {
  const Drawing d = twisted(5);
  const Arrangement arr = planarize(d);
  for (const Triangle& t : all_triangles(5)) {
    const SidePartition sp = side_partition(arr, t);
    for (int w = 1; w <= 5; ++w) {
      if (w == t[0] || w == t[1] || w == t[2]) continue;
      CAPTURE(tri_str(t));
      CAPTURE(w);
      CHECK((radial_side(d, t, w) == RadialSide::kOSide) ==
            (sp.vertex_side[w - 1] == sp.side_of_o));
    }
  }
}

TEST_CASE("the suite passes on twisted drawings") {
  for (int n : {4, 5, 6, 7, 10}) {
    CAPTURE(n);
    const SuiteReport rep = verify_suite(twisted(n), SuiteLevel::kGt);
    REQUIRE(rep.gt.has_value());
    CHECK(rep.gt->is_gt);
    REQUIRE(rep.checks.size() == 15);
    for (const SuiteCheck& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
      CHECK(c.witness.empty());
    }
    CHECK(rep.all_pass());
  }
  const SuiteReport simple = verify_suite(twisted(5), SuiteLevel::kSimple);
  CHECK(!simple.gt.has_value());
  REQUIRE(simple.checks.size() == 7);
  CHECK(simple.all_pass());
  CHECK(simple.checks.front().name == "S1");
  CHECK(simple.checks.back().name == "S7");
}

TEST_CASE("the suite passes on convex plane drawings") {
  for (const Drawing& d : {straight(4, square()), straight(5, pentagon())}) {
    CAPTURE(d.n);
    const SuiteReport rep = verify_suite(d, SuiteLevel::kSimple);
    for (const SuiteCheck& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
    CHECK(rep.all_pass());
  }
  CHECK_THROWS_AS(verify_suite(straight(5, pentagon()), SuiteLevel::kGt), ModeMismatchError);
}

TEST_CASE("a missing crossing is caught with a witness") {
  const Drawing d = no_crossing_k4();
  REQUIRE(validate_simple(d).ok());
  REQUIRE(crossing_set(d).size() == 0);
  const SuiteReport rep = verify_suite(d, SuiteLevel::kGt);
  REQUIRE(rep.gt.has_value());
  CHECK(!rep.gt->is_gt);
  CHECK(!rep.gt->reason.empty());
  const SuiteCheck& g4 = rep.at("G4");
  CHECK(!g4.pass);
  REQUIRE(g4.witness.size() == 2);
  CHECK(g4.witness[0] == std::pair<std::string, std::string>{"quad", "1-2-3-4"});
  CHECK(g4.witness[1] == std::pair<std::string, std::string>{"crossings", "0"});
  CHECK(!rep.at("G1").pass);
  CHECK(!rep.at("G5").pass);
  CHECK(!rep.all_pass());
  CHECK(rep.at("S1").pass);
}

TEST_CASE("bad inputs are rejected") {
  const Drawing k3 = straight(3, {{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(1), Rat(3)}});
  CHECK_THROWS_WITH(verify_suite(k3, SuiteLevel::kSimple),
                    doctest::Contains("needs n >= 4"));
  CHECK_THROWS_WITH(empty_star_triangles_at(k3, 1), doctest::Contains("needs n >= 4"));
  CHECK_THROWS_WITH(empty_star_triangles_at(twisted(5), 0),
                    doctest::Contains("vertex out of range"));
  // vertex 3 sits on edge {1,2}
  const Drawing bad =
      straight(4, {{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(4)}});
  CHECK_THROWS_WITH(analyze_triangles(bad), doctest::Contains("valid simple drawing"));
  CHECK_THROWS_WITH(verify_suite(bad, SuiteLevel::kSimple),
                    doctest::Contains("valid simple drawing"));
}
