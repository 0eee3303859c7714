#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gtdraw/construct.hpp"
#include "gtdraw/io.hpp"

using namespace gtdraw;
using nlohmann::json;

namespace {

int count_sub(const std::string& hay, const std::string& needle) {
  int c = 0;
  for (size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + needle.size()))
    ++c;
  return c;
}

bool same_drawing(const Drawing& a, const Drawing& b) {
  if (a.n != b.n || a.mode != b.mode || a.vertex_pos != b.vertex_pos) return false;
  if (a.arcs.size() != b.arcs.size()) return false;
  for (size_t i = 0; i < a.arcs.size(); ++i) {
    const Arc &x = a.arcs[i], &y = b.arcs[i];
    if (x.edge != y.edge || x.polyline != y.polyline || x.wrap != y.wrap || x.from_v != y.from_v)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("a cylinder drawing survives the json round trip byte for byte") {
  const Drawing d = twisted(5);
  const std::string text = serialize_drawing(d);
  const Drawing back = parse_drawing(text);
  CHECK(same_drawing(d, back));
  CHECK(serialize_drawing(back) == text);
}

TEST_CASE("a plane drawing survives the json round trip") {
  const Drawing d = testfix::straight(5, testfix::pentagon());
  const std::string text = serialize_drawing(d);
  CHECK(count_sub(text, "\"wrap\"") == 0);
  const Drawing back = parse_drawing(text);
  CHECK(same_drawing(d, back));
  CHECK(serialize_drawing(back) == text);
}

TEST_CASE("zero denominators are rational parse errors") {
  json j = json::parse(serialize_drawing(twisted(4)));
  j["vertices"][0]["x"] = "1/0";
  CHECK_THROWS_WITH_AS(parse_drawing(j.dump()),
                       "zero denominator in \"1/0\" (at /vertices/0/x)", RationalParseError);
  j["vertices"][0]["x"] = "two";
  CHECK_THROWS_AS(parse_drawing(j.dump()), RationalParseError);
}

TEST_CASE("duplicate edges are schema errors") {
  json j = json::parse(serialize_drawing(twisted(4)));
  // Arc records are in edge order, so record 0 is 1-2 and record 1 is 1-3.
  j["edges"][1]["v"] = 2;
  CHECK_THROWS_WITH_AS(parse_drawing(j.dump()), "duplicate edge 1-2 (at /edges/1)", SchemaError);
}

TEST_CASE("missing, unknown and malformed fields are schema errors") {
  const std::string text = serialize_drawing(twisted(4));
  CHECK_THROWS_AS(parse_drawing("{"), SchemaError);
  CHECK_THROWS_AS(parse_drawing("[1,2]"), SchemaError);

  json j = json::parse(text);
  j.erase("mode");
  CHECK_THROWS_AS(parse_drawing(j.dump()), SchemaError);

  j = json::parse(text);
  j["mode"] = "torus";
  CHECK_THROWS_AS(parse_drawing(j.dump()), SchemaError);

  j = json::parse(text);
  j["comment"] = "hello";
  CHECK_THROWS_AS(parse_drawing(j.dump()), SchemaError);

  j = json::parse(text);
  j["vertices"][2]["id"] = 1;
  CHECK_THROWS_AS(parse_drawing(j.dump()), SchemaError);

  // Structural checks behind the schema fire too: stripping a wrap flag
  // contradicts the arc's angular span.
  j = json::parse(text);
  j["edges"][0].erase("wrap");
  CHECK_THROWS_AS(parse_drawing(j.dump()), SchemaError);
}

TEST_CASE("a sweep word survives the json round trip") {
  const SweepWord w = extract_sweep_word(twisted(5));
  const std::string text = serialize_sweep_word(w);
  const SweepWord back = parse_sweep_word(text);
  CHECK(back == w);
  CHECK(serialize_sweep_word(back) == text);
}

TEST_CASE("structurally broken words fail to parse") {
  const std::string text = serialize_sweep_word(extract_sweep_word(twisted(5)));

  json j = json::parse(text);
  j["pi0"].erase(0);
  CHECK_THROWS_AS(parse_sweep_word(j.dump()), SchemaError);

  // An insertion rank anywhere but the final vertex is a shape error.
  j = json::parse(text);
  for (auto& ev : j["events"])
    if (ev.contains("vert") && ev["vert"] == 1) ev["rank"] = 0;
  CHECK_THROWS_AS(parse_sweep_word(j.dump()), SchemaError);

  j = json::parse(text);
  j["events"][0]["bogus"] = 1;
  CHECK_THROWS_AS(parse_sweep_word(j.dump()), SchemaError);
}

TEST_CASE("a word that breaks a sweep invariant parses and reports it") {
  json j = json::parse(serialize_sweep_word(extract_sweep_word(twisted(5))));
  json& evs = j["events"];
  for (size_t i = 0; i < evs.size(); ++i) {
    if (evs[i].contains("cross")) {
      evs.insert(evs.begin() + i, evs[i]);  // the same pair crosses twice
      break;
    }
  }
  const SweepWord w = parse_sweep_word(j.dump());
  CHECK_FALSE(validate_sweep_word(w).ok());
}

TEST_CASE("crossing sets round trip through text") {
  CHECK(serialize_crossing_set(crossing_set(twisted(3))).empty());
  CHECK(parse_crossing_set("").pairs.empty());

  CHECK(serialize_crossing_set(crossing_set(twisted(4))) == "1-4 x 2-3\n");

  const CrossingSet cs = crossing_set(twisted(6));
  const std::string text = serialize_crossing_set(cs);
  CHECK(count_sub(text, "\n") == 15);
  CHECK(parse_crossing_set(text) == cs);
}

TEST_CASE("crossing set text rejects malformed lines") {
  CHECK_THROWS_AS(parse_crossing_set("1-2 y 3-4\n"), SchemaError);
  CHECK_THROWS_AS(parse_crossing_set("1-2 x 2-3\n"), SchemaError);        // shared endpoint
  CHECK_THROWS_AS(parse_crossing_set("1-2 x 3-4\n1-2 x 3-4\n"), SchemaError);
  CHECK_THROWS_AS(parse_crossing_set("1-1 x 3-4\n"), SchemaError);
}

TEST_CASE("suite reports serialize with one entry per check") {
  const std::string text = serialize_suite_report(verify_suite(twisted(5), SuiteLevel::kGt));
  const json j = json::parse(text);
  CHECK(j.size() == 16);  // S1..S7, G1..G8, gt
  for (const auto& [key, rec] : j.items()) {
    CAPTURE(key);
    CHECK(rec["pass"] == true);
    CHECK(!rec.contains("witness"));
  }
  CHECK(j.contains("S7"));
  CHECK(j.contains("G8"));
  CHECK(j.contains("gt"));

  const json simple =
      json::parse(serialize_suite_report(verify_suite(twisted(5), SuiteLevel::kSimple)));
  CHECK(simple.size() == 7);
  CHECK(!simple.contains("gt"));
}

TEST_CASE("failing checks carry their witness") {
  SuiteReport r;
  r.level = SuiteLevel::kGt;
  r.gt = GtVerdict{false, "an edge meets the ray twice", {}};
  r.checks.push_back({"G4", false, {{"quad", "1 2 3 5"}, {"crossings", "0"}}});
  const json j = json::parse(serialize_suite_report(r));
  CHECK(j["G4"]["pass"] == false);
  CHECK(j["G4"]["witness"]["quad"] == "1 2 3 5");
  CHECK(j["G4"]["witness"]["crossings"] == "0");
  CHECK(j["gt"]["pass"] == false);
  CHECK(j["gt"]["witness"]["reason"] == "an edge meets the ray twice");
}

TEST_CASE("svg marks every crossing once") {
  const Drawing d = twisted(6);
  const std::string svg = render_svg(d);
  CHECK(count_sub(svg, "class=\"crossing\"") == 15);
  CHECK(count_sub(svg, "class=\"vertex\"") == 6);
  CHECK(count_sub(svg, "class=\"ray\"") == 1);
  CHECK(count_sub(svg, "stroke-dasharray") == 1);
  CHECK(count_sub(svg, "id=\"arc-1-2\"") == 1);
  CHECK(render_svg(d) == svg);  // byte-identical rerun
}

TEST_CASE("svg of a triangle has arcs but no crossing marks") {
  const std::string svg = render_svg(twisted(3));
  CHECK(count_sub(svg, "class=\"arc\"") == 3);
  CHECK(count_sub(svg, "class=\"crossing\"") == 0);
  CHECK(count_sub(svg, ">1</text>") == 1);
  CHECK(count_sub(svg, ">3</text>") == 1);
}

TEST_CASE("strip view draws the ray once per turn") {
  RenderStyle st;
  st.unroll = true;
  const Drawing d = twisted(5);
  const std::string svg = render_svg(d, nullptr, st);
  CHECK(count_sub(svg, "class=\"ray\"") == 2);  // wrapped arcs span past one turn
  CHECK(count_sub(svg, "class=\"crossing\"") == 5);
  CHECK(render_svg(d, nullptr, st) == svg);
}

TEST_CASE("plane svg shades the empty triangles when reports are given") {
  const Drawing d = testfix::straight(5, testfix::pentagon());
  const std::vector<TriangleReport> reports = analyze_triangles(d);
  CHECK(count_sub(render_svg(d), "class=\"empty-tri\"") == 0);
  CHECK(count_sub(render_svg(d, &reports), "class=\"empty-tri\"") == 10);

  RenderStyle st;
  st.highlight_empty_triangles = false;
  CHECK(count_sub(render_svg(d, &reports, st), "class=\"empty-tri\"") == 0);
}

TEST_CASE("polar svg shades empty triangles toward both ends") {
  const Drawing d = twisted(5);
  const std::vector<TriangleReport> reports = analyze_triangles(d);
  const std::string svg = render_svg(d, &reports);
  CHECK(count_sub(svg, "class=\"empty-tri\"") == 6);
  CHECK(count_sub(svg, "#f6b26b") > 0);  // empty side toward the center
  CHECK(count_sub(svg, "#76c7c0") > 0);  // empty side toward the far end
}

TEST_CASE("degenerate render styles are rejected") {
  RenderStyle st;
  st.width = 0;
  CHECK_THROWS_AS(render_svg(twisted(4), nullptr, st), Error);
  st = RenderStyle{};
  st.vertex_radius = -1;
  CHECK_THROWS_AS(render_svg(twisted(4), nullptr, st), Error);
}
