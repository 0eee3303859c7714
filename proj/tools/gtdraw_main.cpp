// Command-line front end: generate, analyze, verify, enumerate and render
// simple drawings of complete graphs, with a focus on generalized-twisted
// ones. Exit codes: 0 success, 1 a verification check failed, 2 unusable
// input or arguments, 3 search budget exhausted.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtdraw/arrangement.hpp"
#include "gtdraw/construct.hpp"
#include "gtdraw/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gtdraw;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error("cannot write " + path.string());
}

// The sweep word of a generated drawing lands next to the drawing file:
// out/k6.json -> out/k6.word.json.
fs::path word_path(fs::path drawing) {
  if (drawing.extension() == ".json") drawing.replace_extension();
  drawing += ".word.json";
  return drawing;
}

long long parse_budget(const std::string& s, long long small, long long dflt, long long large) {
  if (s == "small") return small;
  if (s == "default") return dflt;
  if (s == "large") return large;
  try {
    size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size() || v <= 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("bad budget \"" + s + "\" (use small, default, large or a positive node count)");
  }
}

// Parse plus the simplicity gate shared by every file-reading command.
Drawing load_valid_drawing(const std::string& path) {
  Drawing d = parse_drawing(read_file(path));
  const ValidationReport rep = validate_simple(d);
  if (!rep.ok()) {
    const ValidationError& e = rep.errors.front();
    std::string msg = "invalid drawing: " + to_string(e.code);
    if (e.e1) msg += " " + e.e1->str();
    if (e.e2) msg += " x " + e.e2->str();
    if (e.vertex) msg += " vertex " + std::to_string(*e.vertex);
    if (!e.detail.empty()) msg += " (" + e.detail + ")";
    throw Error(msg);
  }
  return d;
}

bool json_format(const std::string& format) { return format == "json"; }

// ------------------------------------------------------------------- gen

int run_gen(const Drawing& d, const SweepWord& w, const std::string& out,
            const std::string& format) {
  if (!out.empty()) {
    write_file(out, serialize_drawing(d));
    write_file(word_path(out), serialize_sweep_word(w));
  }
  const int crossings = crossing_set(d).size();
  const int empty = count_empty(d);
  if (json_format(format))
    std::cout << json{{"crossings", crossings}, {"empty", empty}}.dump() << "\n";
  else
    std::cout << "crossings=" << crossings << " empty=" << empty << "\n";
  return 0;
}

// --------------------------------------------------------------- analyze

json triangle_record(const TriangleReport& r) {
  json rec{{"triangle", tri_str(r.triangle)}, {"side", to_string(r.empty_side)}};
  json stars = json::array();
  for (int x : r.star_at) stars.push_back(x);
  rec["star_at"] = std::move(stars);
  if (r.o_side_empty) rec["empty_toward"] = *r.o_side_empty ? "O" : "Z";
  return rec;
}

std::string triangle_line(const TriangleReport& r) {
  std::string line = tri_str(r.triangle) + " side=" + to_string(r.empty_side);
  if (r.o_side_empty) line += std::string(" empty_toward=") + (*r.o_side_empty ? "O" : "Z");
  line += " star_at=";
  for (size_t i = 0; i < r.star_at.size(); ++i)
    line += (i ? "," : "") + std::to_string(r.star_at[i]);
  if (r.star_at.empty()) line += "-";
  return line;
}

int report_empty(const Drawing& d, const std::string& format) {
  const std::vector<TriangleReport> reports = analyze_triangles(d);
  std::vector<const TriangleReport*> empty;
  for (const TriangleReport& r : reports)
    if (r.empty()) empty.push_back(&r);
  if (json_format(format)) {
    json out{{"count", empty.size()}};
    json list = json::array();
    for (const TriangleReport* r : empty) list.push_back(triangle_record(*r));
    out["empty"] = std::move(list);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "empty=" << empty.size() << "\n";
    for (const TriangleReport* r : empty) std::cout << triangle_line(*r) << "\n";
  }
  return 0;
}

int report_star(const Drawing& d, const std::string& format) {
  if (d.n < 4) throw Error("the star report needs n >= 4");
  const std::vector<TriangleReport> reports = analyze_triangles(d);
  if (json_format(format)) {
    json out;
    json per = json::object();
    for (int x = 1; x <= d.n; ++x) {
      json list = json::array();
      for (const Triangle& t : empty_star_triangles_at(reports, x)) list.push_back(tri_str(t));
      per[std::to_string(x)] = std::move(list);
    }
    out["empty_star"] = std::move(per);
    json ds = json::array();
    for (const Triangle& t : double_star_empty(reports)) ds.push_back(tri_str(t));
    out["double_star"] = std::move(ds);
    std::cout << out.dump(2) << "\n";
  } else {
    for (int x = 1; x <= d.n; ++x) {
      std::cout << x << ":";
      for (const Triangle& t : empty_star_triangles_at(reports, x)) std::cout << " " << tri_str(t);
      std::cout << "\n";
    }
    std::cout << "double_star:";
    for (const Triangle& t : double_star_empty(reports)) std::cout << " " << tri_str(t);
    std::cout << "\n";
  }
  return 0;
}

int report_crossings(const Drawing& d, const std::string& format) {
  const CrossingSet cs = crossing_set(d);
  if (json_format(format)) {
    json pairs = json::array();
    for (const auto& [e, f] : cs.pairs) pairs.push_back(e.str() + " x " + f.str());
    std::cout << json{{"count", cs.size()}, {"pairs", std::move(pairs)}}.dump(2) << "\n";
  } else {
    std::cout << serialize_crossing_set(cs);
  }
  return 0;
}

int report_cells(const Drawing& d, const std::string& format) {
  const Arrangement arr = planarize(d);
  // Drawing vertices on the boundary of each face.
  std::vector<std::set<int>> verts(arr.num_faces);
  for (int p = 0; p < arr.piece_count(); ++p) {
    for (const int node : {arr.pieces[p].node_a, arr.pieces[p].node_b}) {
      if (!arr.nodes[node].is_vertex) continue;
      verts[arr.dart_face[2 * p]].insert(arr.nodes[node].vertex);
      verts[arr.dart_face[2 * p + 1]].insert(arr.nodes[node].vertex);
    }
  }
  auto vert_list = [&](int face) {
    json a = json::array();
    for (int v : verts[face]) a.push_back(v);
    return a;
  };
  auto vert_line = [&](int face) {
    std::string s;
    for (int v : verts[face]) s += " " + std::to_string(v);
    return s;
  };
  if (json_format(format)) {
    json out{{"cells", arr.num_faces}};
    if (arr.mode == Mode::kCylinder) {
      out["o_cell"] = json{{"face", arr.o_face}, {"vertices", vert_list(arr.o_face)}};
      out["z_cell"] = json{{"face", arr.z_face}, {"vertices", vert_list(arr.z_face)}};
    } else {
      out["outer_cell"] = json{{"face", arr.outer_face}, {"vertices", vert_list(arr.outer_face)}};
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "cells=" << arr.num_faces << "\n";
    if (arr.mode == Mode::kCylinder) {
      std::cout << "o_cell vertices:" << vert_line(arr.o_face) << "\n";
      std::cout << "z_cell vertices:" << vert_line(arr.z_face) << "\n";
    } else {
      std::cout << "outer_cell vertices:" << vert_line(arr.outer_face) << "\n";
    }
  }
  return 0;
}

int run_analyze(const std::string& path, const std::string& report, const std::string& format) {
  const Drawing d = load_valid_drawing(path);
  if (report == "empty") return report_empty(d, format);
  if (report == "star") return report_star(d, format);
  if (report == "crossings") return report_crossings(d, format);
  return report_cells(d, format);
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& path, const std::string& suite, const std::string& format) {
  const Drawing d = load_valid_drawing(path);
  const SuiteLevel level = suite == "gt" ? SuiteLevel::kGt : SuiteLevel::kSimple;
  const SuiteReport rep = verify_suite(d, level);
  if (json_format(format)) {
    std::cout << serialize_suite_report(rep);
  } else {
    for (const SuiteCheck& c : rep.checks) {
      std::cout << c.name << (c.pass ? " pass" : " FAIL");
      for (const auto& [k, v] : c.witness) std::cout << " " << k << "=" << v;
      std::cout << "\n";
    }
    if (rep.gt) std::cout << "gt " << (rep.gt->is_gt ? "pass" : "FAIL " + rep.gt->reason) << "\n";
  }
  if (rep.all_pass()) return 0;
  for (const SuiteCheck& c : rep.checks) {
    if (c.pass) continue;
    std::cerr << "FAIL " << c.name;
    for (const auto& [k, v] : c.witness) std::cerr << " " << k << "=" << v;
    std::cerr << "\n";
    return 1;
  }
  std::cerr << "FAIL gt reason=" << rep.gt->reason << "\n";
  return 1;
}

// ------------------------------------------------------------------ enum

int run_enum(int n, const std::string& budget_s, int jobs, const std::string& out_dir,
             const std::string& format) {
  const long long budget =
      parse_budget(budget_s, 20'000'000, kEnumBudgetDefault, 4'000'000'000LL);
  const EnumResult res = enumerate_gt(n, budget, jobs);

  json index{{"n", res.n}, {"exhaustive", res.exhaustive}};
  json classes = json::array();
  for (const EnumClass& c : res.classes) {
    const std::string hash = short_hash(c.key);
    const Drawing d = realize(c.witness);
    if (!out_dir.empty()) {
      write_file(fs::path(out_dir) / (hash + ".word.json"), serialize_sweep_word(c.witness));
      write_file(fs::path(out_dir) / (hash + ".drawing.json"), serialize_drawing(d));
      write_file(fs::path(out_dir) / (hash + ".crossings.txt"),
                 serialize_crossing_set(crossing_set(d)));
    }
    classes.push_back({{"key", c.key.bytes},
                       {"hash", hash},
                       {"words_found", c.words_found},
                       {"empty_triangles", c.empty_triangles}});
  }
  index["classes"] = std::move(classes);
  if (!out_dir.empty()) write_file(fs::path(out_dir) / "index.json", index.dump(2) + "\n");

  if (json_format(format)) {
    std::cout << index.dump(2) << "\n";
  } else {
    std::cout << "classes=" << res.classes.size() << " exhaustive="
              << (res.exhaustive ? "true" : "false") << "\n";
    for (const json& c : index["classes"])
      std::cout << c["hash"].get<std::string>() << " words=" << c["words_found"]
                << " empty=" << c["empty_triangles"] << "\n";
  }
  return res.exhaustive ? 0 : 3;
}

// ---------------------------------------------------------------- render

int run_render(const std::string& path, const std::string& out, const std::string& view,
               int width, int height, bool no_highlight) {
  const Drawing d = load_valid_drawing(path);
  RenderStyle style;
  style.width = width;
  style.height = height;
  style.unroll = view == "strip";
  std::vector<TriangleReport> reports;
  const std::vector<TriangleReport>* rp = nullptr;
  if (!no_highlight) {
    reports = analyze_triangles(d);
    rp = &reports;
  }
  write_file(out, render_svg(d, rp, style));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct, verify and inspect simple drawings of complete graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format for reports")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  int rc = 0;
  int n = 0, jobs = 1, width = 860, height = 860;
  std::uint64_t seed = 0;
  std::string out, path, budget = "default", report = "empty", suite, view = "polar";
  bool no_highlight = false;

  CLI::App* gen = app.add_subcommand("gen", "generate a drawing and its sweep word");
  gen->require_subcommand(1);
  gen->fallthrough();

  CLI::App* gen_twisted = gen->add_subcommand("twisted", "the twisted drawing T_n");
  gen_twisted->add_option("-n,--n", n, "number of vertices")->required();
  gen_twisted->add_option("-o,--out", out, "drawing file to write");
  gen_twisted->callback([&] {
    const Drawing d = twisted(n);
    rc = run_gen(d, extract_sweep_word(d), out, format);
  });

  CLI::App* gen_random = gen->add_subcommand("random", "a seeded random generalized-twisted drawing");
  gen_random->add_option("-n,--n", n, "number of vertices")->required();
  gen_random->add_option("-s,--seed", seed, "random seed")->required();
  gen_random->add_option("-o,--out", out, "drawing file to write");
  gen_random->add_option("--budget", budget, "search node budget (small|default|large|count)")
      ->capture_default_str();
  gen_random->callback([&] {
    const SweepWord w =
        random_gt_word(n, seed, parse_budget(budget, 1'000'000, kSampleBudgetDefault, 200'000'000));
    rc = run_gen(realize(w), w, out, format);
  });

  CLI::App* analyze = app.add_subcommand("analyze", "report on a drawing file");
  analyze->add_option("path", path, "drawing file")->required();
  analyze->add_option("--report", report, "what to report")
      ->check(CLI::IsMember({"empty", "star", "crossings", "cells"}))
      ->capture_default_str();
  analyze->callback([&] { rc = run_analyze(path, report, format); });

  CLI::App* verify = app.add_subcommand("verify", "run the lemma suite on a drawing file");
  verify->add_option("path", path, "drawing file")->required();
  verify->add_option("--suite", suite, "check level")
      ->check(CLI::IsMember({"simple", "gt"}))
      ->required();
  verify->callback([&] { rc = run_verify(path, suite, format); });

  CLI::App* enum_cmd = app.add_subcommand("enum", "enumerate weak-isomorphism classes");
  enum_cmd->add_option("-n,--n", n, "number of vertices")->required();
  enum_cmd->add_option("--budget", budget, "search node budget (small|default|large|count)")
      ->capture_default_str();
  enum_cmd->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
  enum_cmd->add_option("-o,--out", out, "directory for per-class files");
  enum_cmd->callback([&] { rc = run_enum(n, budget, jobs, out, format); });

  CLI::App* render = app.add_subcommand("render", "draw a drawing file as SVG");
  render->add_option("path", path, "drawing file")->required();
  render->add_option("-o,--out", out, "SVG file to write")->required();
  render->add_option("--view", view, "cylinder projection")
      ->check(CLI::IsMember({"polar", "strip"}))
      ->capture_default_str();
  render->add_option("--width", width, "canvas width in px")->check(CLI::PositiveNumber);
  render->add_option("--height", height, "canvas height in px")->check(CLI::PositiveNumber);
  render->add_flag("--no-highlight", no_highlight, "skip empty-triangle shading");
  render->callback([&] { rc = run_render(path, out, view, width, height, no_highlight); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad arguments are input errors
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.cli_exit();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
