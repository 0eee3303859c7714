#include "gtdraw/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gtdraw {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- json access

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string sub(const std::string& path, size_t index) {
  return path + "/" + std::to_string(index);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError("expected an object", path.empty() ? "/" : path);
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing \"" + key + "\"", path.empty() ? "/" : path);
  return *it;
}

int need_int(const json& j, const std::string& key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_number_integer()) throw SchemaError("expected an integer", sub(path, key));
  return v.get<int>();
}

std::string need_str(const json& j, const std::string& key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_string()) throw SchemaError("expected a string", sub(path, key));
  return v.get<std::string>();
}

const json& need_array(const json& j, const std::string& key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_array()) throw SchemaError("expected an array", sub(path, key));
  return v;
}

// Typos in hand-edited files should fail loudly, not silently drop a field.
void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* k) { return it.key() == k; }))
      throw SchemaError("unknown key \"" + it.key() + "\"", path.empty() ? "/" : path);
  }
}

Rat rat_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError("expected a rational string", path);
  try {
    return Rat::parse(v.get<std::string>());
  } catch (const RationalParseError& e) {
    throw RationalParseError(std::string(e.what()) + " (at " + path + ")");
  }
}

Pt pt_at(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw SchemaError("expected an [x, y] pair", path);
  return Pt{rat_at(v[0], sub(path, size_t(0))), rat_at(v[1], sub(path, size_t(1)))};
}

// "u-v" with both endpoints positive and distinct.
EdgeId edge_from_str(const std::string& s, const std::string& path) {
  auto bad = [&] { return SchemaError("bad edge \"" + s + "\"", path); };
  const size_t dash = s.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= s.size()) throw bad();
  const std::string lhs = s.substr(0, dash), rhs = s.substr(dash + 1);
  auto to_int = [&](const std::string& t) {
    if (t.size() > 6 || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
          return std::isdigit(c) != 0;
        }))
      throw bad();
    return std::stoi(t);
  };
  const int a = to_int(lhs), b = to_int(rhs);
  if (a < 1 || b < 1 || a == b) throw bad();
  return EdgeId(a, b);
}

EdgeId edge_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError("expected an edge string \"u-v\"", path);
  return edge_from_str(v.get<std::string>(), path);
}

std::vector<EdgeId> edge_list_at(const json& arr, const std::string& path) {
  std::vector<EdgeId> out;
  out.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) out.push_back(edge_at(arr[i], sub(path, i)));
  return out;
}

json edge_list_json(const std::vector<EdgeId>& es) {
  json a = json::array();
  for (const EdgeId& e : es) a.push_back(e.str());
  return a;
}

}  // namespace

// ----------------------------------------------------------------- drawings

Drawing parse_drawing(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw SchemaError("top level must be an object", "/");
  reject_unknown(j, {"edges", "mode", "n", "vertices"}, "");
  const int n = need_int(j, "n", "");
  if (n < 1 || n > 1000) throw SchemaError("vertex count out of range", "/n");

  const std::string mode_s = need_str(j, "mode", "");
  Mode mode;
  if (mode_s == "plane") mode = Mode::kPlane;
  else if (mode_s == "cylinder") mode = Mode::kCylinder;
  else throw SchemaError("mode must be \"plane\" or \"cylinder\"", "/mode");

  const json& vs = need_array(j, "vertices", "");
  if (static_cast<int>(vs.size()) != n)
    throw SchemaError("expected exactly n vertex records", "/vertices");
  std::vector<Pt> pos(n);
  std::vector<bool> seen(n, false);
  for (size_t i = 0; i < vs.size(); ++i) {
    const std::string path = sub("/vertices", i);
    const json& v = vs[i];
    if (!v.is_object()) throw SchemaError("expected an object", path);
    reject_unknown(v, {"id", "x", "y"}, path);
    const int id = need_int(v, "id", path);
    if (id < 1 || id > n) throw SchemaError("vertex id out of range", sub(path, "id"));
    if (seen[id - 1]) throw SchemaError("duplicate vertex id", sub(path, "id"));
    seen[id - 1] = true;
    pos[id - 1] = Pt{rat_at(need(v, "x", path), sub(path, "x")),
                     rat_at(need(v, "y", path), sub(path, "y"))};
  }

  const json& es = need_array(j, "edges", "");
  std::vector<Arc> arcs;
  arcs.reserve(es.size());
  std::set<EdgeId> seen_edges;
  for (size_t i = 0; i < es.size(); ++i) {
    const std::string path = sub("/edges", i);
    const json& rec = es[i];
    if (!rec.is_object()) throw SchemaError("expected an object", path);
    reject_unknown(rec, {"polyline", "u", "v", "wrap"}, path);
    const int u = need_int(rec, "u", path), v = need_int(rec, "v", path);
    if (u < 1 || v < 1 || u == v) throw SchemaError("bad edge endpoints", path);
    Arc a;
    a.edge = EdgeId(u, v);
    if (!seen_edges.insert(a.edge).second)
      throw SchemaError("duplicate edge " + a.edge.str(), path);
    const json& pl = need_array(rec, "polyline", path);
    const std::string pl_path = sub(path, "polyline");
    a.polyline.reserve(pl.size());
    for (size_t k = 0; k < pl.size(); ++k) a.polyline.push_back(pt_at(pl[k], sub(pl_path, k)));
    if (auto it = rec.find("wrap"); it != rec.end()) {
      if (!it->is_boolean()) throw SchemaError("wrap must be a boolean", sub(path, "wrap"));
      a.wrap = it->get<bool>();
    }
    arcs.push_back(std::move(a));
  }

  return Drawing::make(n, mode, std::move(pos), std::move(arcs));
}

std::string serialize_drawing(const Drawing& d) {
  json j;
  j["n"] = d.n;
  j["mode"] = d.mode == Mode::kPlane ? "plane" : "cylinder";
  json vs = json::array();
  for (int v = 1; v <= d.n; ++v)
    vs.push_back({{"id", v}, {"x", d.vpos(v).x.str()}, {"y", d.vpos(v).y.str()}});
  j["vertices"] = std::move(vs);
  json es = json::array();
  for (const Arc& a : d.arcs) {
    json pl = json::array();
    for (const Pt& p : a.polyline) pl.push_back(json::array({p.x.str(), p.y.str()}));
    json rec{{"u", a.edge.u}, {"v", a.edge.v}, {"polyline", std::move(pl)}};
    if (a.wrap) rec["wrap"] = true;
    es.push_back(std::move(rec));
  }
  j["edges"] = std::move(es);
  return j.dump() + "\n";
}

// -------------------------------------------------------------- sweep words

SweepWord parse_sweep_word(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw SchemaError("top level must be an object", "/");
  reject_unknown(j, {"events", "n", "pi0"}, "");
  SweepWord w;
  w.n = need_int(j, "n", "");
  if (w.n < 1 || w.n > 1000) throw SchemaError("vertex count out of range", "/n");
  w.pi0 = edge_list_at(need_array(j, "pi0", ""), "/pi0");

  const json& evs = need_array(j, "events", "");
  for (size_t i = 0; i < evs.size(); ++i) {
    const std::string path = sub("/events", i);
    const json& ev = evs[i];
    if (!ev.is_object()) throw SchemaError("expected an object", path);
    if (ev.contains("cross")) {
      reject_unknown(ev, {"cross"}, path);
      const json& c = ev["cross"];
      const std::string c_path = sub(path, "cross");
      if (!c.is_array() || c.size() != 2)
        throw SchemaError("expected a pair of edges", c_path);
      w.events.push_back(
          cross_event(edge_at(c[0], sub(c_path, size_t(0))), edge_at(c[1], sub(c_path, size_t(1)))));
    } else {
      reject_unknown(ev, {"depart", "rank", "vert"}, path);
      const int v = need_int(ev, "vert", path);
      std::vector<EdgeId> depart =
          edge_list_at(need_array(ev, "depart", path), sub(path, "depart"));
      std::optional<int> rank;
      if (ev.contains("rank")) rank = need_int(ev, "rank", path);
      w.events.push_back(vert_event(v, std::move(depart), rank));
    }
  }

  // Shape checks (wrong edge multisets, misplaced rank, ...) throw from here;
  // a word that merely breaks a sweep invariant parses fine.
  validate_sweep_word(w);
  return w;
}

std::string serialize_sweep_word(const SweepWord& w) {
  json j;
  j["n"] = w.n;
  j["pi0"] = edge_list_json(w.pi0);
  json evs = json::array();
  for (const SweepEvent& e : w.events) {
    if (e.kind == SweepEvent::Kind::kCross) {
      evs.push_back({{"cross", json::array({e.a.str(), e.b.str()})}});
    } else {
      json rec{{"vert", e.vertex}, {"depart", edge_list_json(e.depart)}};
      if (e.rank) rec["rank"] = *e.rank;
      evs.push_back(std::move(rec));
    }
  }
  j["events"] = std::move(evs);
  return j.dump() + "\n";
}

// ------------------------------------------------------------ crossing sets

CrossingSet parse_crossing_set(const std::string& text) {
  std::vector<std::pair<EdgeId, EdgeId>> raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    const size_t mid = line.find(" x ");
    if (mid == std::string::npos)
      throw SchemaError("expected \"u1-v1 x u2-v2\", got \"" + line + "\"", where);
    raw.emplace_back(edge_from_str(line.substr(0, mid), where),
                     edge_from_str(line.substr(mid + 3), where));
  }
  try {
    return CrossingSet::from_pairs(std::move(raw));
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
}

std::string serialize_crossing_set(const CrossingSet& cs) {
  std::string out;
  for (const auto& [e, f] : cs.pairs) out += e.str() + " x " + f.str() + "\n";
  return out;
}

// ------------------------------------------------------------ suite reports

std::string serialize_suite_report(const SuiteReport& r) {
  json j = json::object();
  for (const SuiteCheck& c : r.checks) {
    json rec{{"pass", c.pass}};
    if (!c.witness.empty()) {
      json w = json::object();
      for (const auto& [k, v] : c.witness) w[k] = v;
      rec["witness"] = std::move(w);
    }
    j[c.name] = std::move(rec);
  }
  if (r.gt) {
    json rec{{"pass", r.gt->is_gt}};
    if (!r.gt->is_gt) rec["witness"] = json{{"reason", r.gt->reason}};
    j["gt"] = std::move(rec);
  }
  return j.dump(2) + "\n";
}

// -------------------------------------------------------------------- svg

namespace {

constexpr const char* kArcColor = "#35465e";
constexpr const char* kVertexColor = "#2d74b3";
constexpr const char* kCrossingColor = "#c0392b";
constexpr const char* kRayColor = "#777777";
constexpr const char* kLabelColor = "#111111";

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  if (std::strcmp(buf, "-0") == 0) return "0";
  return buf;
}

struct XY {
  double x = 0, y = 0;
};

void put_circle(std::string& out, XY p, double r, const std::string& fill,
                const std::string& cls, const std::string& extra = "") {
  out += "<circle cx=\"" + fmt9(p.x) + "\" cy=\"" + fmt9(p.y) + "\" r=\"" + fmt9(r) +
         "\" fill=\"" + fill + "\" class=\"" + cls + "\"" + extra + "/>\n";
}

void put_text(std::string& out, XY p, const std::string& s, const std::string& cls,
              int size = 11) {
  out += "<text x=\"" + fmt9(p.x) + "\" y=\"" + fmt9(p.y) +
         "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(size) + "\" fill=\"" +
         kLabelColor + "\" class=\"" + cls + "\">" + s + "</text>\n";
}

void put_line(std::string& out, XY a, XY b, double width, const std::string& cls,
              bool dashed) {
  out += "<line x1=\"" + fmt9(a.x) + "\" y1=\"" + fmt9(a.y) + "\" x2=\"" + fmt9(b.x) +
         "\" y2=\"" + fmt9(b.y) + "\" stroke=\"" + kRayColor + "\" stroke-width=\"" +
         fmt9(width) + "\"" + (dashed ? " stroke-dasharray=\"6 4\"" : "") + " class=\"" + cls +
         "\"/>\n";
}

void put_path(std::string& out, const std::string& dstr, const std::string& attrs,
              const std::string& cls) {
  out += "<path d=\"" + dstr + "\" " + attrs + " class=\"" + cls + "\"/>\n";
}

std::string stroke_attrs(double width) {
  return "fill=\"none\" stroke=\"" + std::string(kArcColor) + "\" stroke-width=\"" +
         fmt9(width) + "\"";
}

// View-specific point mapper plus how finely polar arcs get subdivided.
struct Mapper {
  virtual ~Mapper() = default;
  virtual XY map(double x, double y) const = 0;
  // Pieces to cut a single polyline segment into so curvature shows.
  virtual int pieces(double x0, double x1) const { (void)x0; (void)x1; return 1; }
};

struct PlaneMapper : Mapper {
  double s = 1, cxd = 0, cyd = 0, cx = 0, cy = 0;
  XY map(double x, double y) const override { return {cx + (x - cxd) * s, cy - (y - cyd) * s}; }
};

struct PolarMapper : Mapper {
  double cx = 0, cy = 0, r_in = 0, r_out = 0, rmax = 1;
  XY map(double th, double r) const override {
    const double ang = 2 * M_PI * (th - std::floor(th));
    const double rr = r_in + (r / rmax) * (r_out - r_in);
    return {cx + rr * std::cos(ang), cy - rr * std::sin(ang)};
  }
  int pieces(double x0, double x1) const override {
    return std::max(1, static_cast<int>(std::ceil(std::abs(x1 - x0) * 96)));
  }
};

struct StripMapper : Mapper {
  double mx = 0, my = 0, w = 1, h = 1, theta_max = 1, rmax = 1;
  XY map(double th, double r) const override {
    return {mx + (th / theta_max) * w, my + (1 - r / rmax) * h};
  }
};

// Appends the mapped polyline to `dstr`, subdividing segments as the mapper
// asks. `first` spans calls so triangle boundaries can chain several arcs
// into one subpath.
void emit_polyline(std::string& dstr, const std::vector<Pt>& pl, const Mapper& m, bool& first) {
  auto put = [&](double x, double y) {
    const XY p = m.map(x, y);
    dstr += (first ? "M " : "L ") + fmt9(p.x) + " " + fmt9(p.y) + " ";
    first = false;
  };
  for (size_t i = 0; i + 1 < pl.size(); ++i) {
    const double x0 = pl[i].x.to_double(), x1 = pl[i + 1].x.to_double();
    const double y0 = pl[i].y.to_double(), y1 = pl[i + 1].y.to_double();
    if (i == 0) put(x0, y0);
    const int k = m.pieces(x0, x1);
    for (int j = 1; j <= k; ++j) {
      const double a = static_cast<double>(j) / k;
      put(x0 + (x1 - x0) * a, y0 + (y1 - y0) * a);
    }
  }
}

// The three sides of the triangle, each oriented corner i -> corner i+1.
std::array<std::vector<Pt>, 3> tri_sides(const Drawing& d, const Triangle& t) {
  std::array<std::vector<Pt>, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Arc& a = d.arc(EdgeId(t[i], t[(i + 1) % 3]));
    out[i] = a.polyline;
    if (a.from_v != t[i]) std::reverse(out[i].begin(), out[i].end());
  }
  return out;
}

std::string shade_fill(const TriangleReport& tr) {
  if (tr.o_side_empty.has_value()) return *tr.o_side_empty ? "#f6b26b" : "#76c7c0";
  return "#f1c40f";
}

void emit_empty_triangles(std::string& out, const Drawing& d,
                          const std::vector<TriangleReport>& reports, const Mapper& m) {
  for (const TriangleReport& tr : reports) {
    if (!tr.empty()) continue;
    std::string dstr;
    bool first = true;
    for (const std::vector<Pt>& side : tri_sides(d, tr.triangle)) emit_polyline(dstr, side, m, first);
    dstr += "Z";
    put_path(out, dstr,
             "fill=\"" + shade_fill(tr) + "\" fill-opacity=\"0.28\" fill-rule=\"evenodd\"",
             "empty-tri");
  }
}

void emit_arcs(std::string& out, const Drawing& d, const Mapper& m, double width) {
  for (const Arc& a : d.arcs) {
    std::string dstr;
    bool first = true;
    emit_polyline(dstr, a.polyline, m, first);
    put_path(out, dstr, stroke_attrs(width) + " id=\"arc-" + a.edge.str() + "\"", "arc");
  }
}

// Crossing points in their first arc's own frame; empty when the drawing
// does not validate (the picture still renders, just without dots).
std::vector<Pt> crossing_points(const Drawing& d) {
  const PairwiseResult pw = pairwise_intersections(d);
  std::vector<Pt> out;
  if (!pw.report.ok()) return out;
  out.reserve(pw.crossings.size());
  for (const ArcCrossing& c : pw.crossings) out.push_back(c.pos_e);
  return out;
}

void emit_crossings(std::string& out, const std::vector<Pt>& pts, const Mapper& m, double r) {
  for (const Pt& p : pts)
    put_circle(out, m.map(p.x.to_double(), p.y.to_double()), r, kCrossingColor, "crossing");
}

void emit_vertex(std::string& out, int v, XY p, const RenderStyle& st) {
  put_circle(out, p, st.vertex_radius, kVertexColor, "vertex",
             " id=\"vert-" + std::to_string(v) + "\"");
  put_text(out, {p.x + st.vertex_radius + 3, p.y - 3}, std::to_string(v), "vlabel");
}

std::string svg_open(const RenderStyle& st) {
  const std::string w = std::to_string(st.width), h = std::to_string(st.height);
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" "
         "version=\"1.1\" width=\"" +
         w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
}

double crossing_dot_radius(const RenderStyle& st) {
  return std::max(1.6, st.vertex_radius * 0.45);
}

std::string render_plane(const Drawing& d, const std::vector<TriangleReport>* reports,
                         const RenderStyle& st) {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  auto grow = [&](const Pt& p) {
    const double x = p.x.to_double(), y = p.y.to_double();
    x0 = std::min(x0, x); x1 = std::max(x1, x);
    y0 = std::min(y0, y); y1 = std::max(y1, y);
  };
  for (const Pt& p : d.vertex_pos) grow(p);
  for (const Arc& a : d.arcs)
    for (const Pt& p : a.polyline) grow(p);

  PlaneMapper m;
  const double margin = 34;
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  m.s = (std::min(st.width, st.height) - 2 * margin) / span;
  m.cxd = (x0 + x1) / 2;
  m.cyd = (y0 + y1) / 2;
  m.cx = st.width / 2.0;
  m.cy = st.height / 2.0;

  std::string out = svg_open(st);
  if (reports && st.highlight_empty_triangles) emit_empty_triangles(out, d, *reports, m);
  emit_arcs(out, d, m, st.edge_stroke);
  emit_crossings(out, crossing_points(d), m, crossing_dot_radius(st));
  for (int v = 1; v <= d.n; ++v)
    emit_vertex(out, v, m.map(d.vpos(v).x.to_double(), d.vpos(v).y.to_double()), st);
  out += "</svg>\n";
  return out;
}

double max_radius(const Drawing& d) {
  Rat rmax = d.vertex_pos[0].y;
  for (const Pt& p : d.vertex_pos) rmax = std::max(rmax, p.y);
  for (const Arc& a : d.arcs)
    for (const Pt& p : a.polyline) rmax = std::max(rmax, p.y);
  return rmax.to_double();
}

std::string render_polar(const Drawing& d, const std::vector<TriangleReport>* reports,
                         const RenderStyle& st) {
  PolarMapper m;
  m.cx = st.width / 2.0;
  m.cy = st.height / 2.0;
  m.r_out = std::min(st.width, st.height) / 2.0 - 30;
  m.r_in = 0.10 * m.r_out;
  m.rmax = max_radius(d);

  std::string out = svg_open(st);
  if (reports && st.highlight_empty_triangles) emit_empty_triangles(out, d, *reports, m);
  emit_arcs(out, d, m, st.edge_stroke);
  put_line(out, {m.cx, m.cy}, {m.cx + m.r_out, m.cy}, st.marker_stroke, "ray", true);
  emit_crossings(out, crossing_points(d), m, crossing_dot_radius(st));
  for (int v = 1; v <= d.n; ++v) {
    const Pt c = cyl_canonical(d.vpos(v));
    emit_vertex(out, v, m.map(c.x.to_double(), c.y.to_double()), st);
  }
  if (st.show_o_z_regions) {
    put_text(out, {m.cx - 4, m.cy + 4}, "O", "oz", 13);
    put_text(out, {m.cx + m.r_out + 6, m.cy - m.r_out}, "Z", "oz", 13);
  }
  out += "</svg>\n";
  return out;
}

std::string render_strip(const Drawing& d, const RenderStyle& st) {
  StripMapper m;
  const double margin = 34;
  m.mx = margin;
  m.my = 26;
  m.w = st.width - 2 * margin;
  m.h = st.height - 2 * 26;
  m.rmax = max_radius(d);
  Rat tmax(1);
  for (const Arc& a : d.arcs) tmax = std::max(tmax, a.polyline.back().x);
  m.theta_max = tmax.to_double();

  std::string out = svg_open(st);
  emit_arcs(out, d, m, st.edge_stroke);
  // The distinguished ray appears once per unrolled turn.
  for (int k = 0; k <= static_cast<int>(std::floor(m.theta_max + 1e-9)); ++k) {
    const double x = m.mx + (k / m.theta_max) * m.w;
    put_line(out, {x, m.my}, {x, m.my + m.h}, st.marker_stroke, "ray", true);
  }
  emit_crossings(out, crossing_points(d), m, crossing_dot_radius(st));
  for (int v = 1; v <= d.n; ++v) {
    const Pt c = cyl_canonical(d.vpos(v));
    // Arcs from the wrapped side end at angle + 1, so show every copy that
    // falls inside the strip.
    for (double th = c.x.to_double(); th <= m.theta_max + 1e-9; th += 1)
      emit_vertex(out, v, m.map(th, c.y.to_double()), st);
  }
  if (st.show_o_z_regions) {
    put_text(out, {6, m.my + m.h + 4}, "O", "oz", 13);
    put_text(out, {6, m.my - 8}, "Z", "oz", 13);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string render_svg(const Drawing& d, const std::vector<TriangleReport>* reports,
                       const RenderStyle& style) {
  if (style.width <= 0 || style.height <= 0 || style.vertex_radius <= 0 ||
      style.edge_stroke <= 0 || style.marker_stroke <= 0)
    throw Error("render style dimensions must be positive");
  if (d.mode == Mode::kPlane) return render_plane(d, reports, style);
  if (style.unroll) return render_strip(d, style);
  return render_polar(d, reports, style);
}

}  // namespace gtdraw
