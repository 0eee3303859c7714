#include "gtdraw/triangles.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gtdraw/arrangement.hpp"
#include "gtdraw/error.hpp"

namespace gtdraw {

std::string to_string(EmptySide side) {
  switch (side) {
    case EmptySide::kNone: return "NONE";
    case EmptySide::kA: return "A";
    case EmptySide::kB: return "B";
    case EmptySide::kBoth: return "BOTH";
  }
  throw Error("bad empty side");
}

bool TriangleReport::star(int x) const {
  return std::find(star_at.begin(), star_at.end(), x) != star_at.end();
}

std::vector<Triangle> all_triangles(int n) {
  std::vector<Triangle> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) out.push_back({a, b, c});
  return out;
}

std::string tri_str(const Triangle& t) {
  return std::to_string(t[0]) + "-" + std::to_string(t[1]) + "-" + std::to_string(t[2]);
}

namespace {

bool in_tri(const Triangle& t, int w) { return w == t[0] || w == t[1] || w == t[2]; }

std::array<EdgeId, 3> tri_edges(const Triangle& t) {
  return {EdgeId(t[0], t[1]), EdgeId(t[0], t[2]), EdgeId(t[1], t[2])};
}

// The edge of t opposite corner x.
EdgeId opposite(const Triangle& t, int x) {
  return EdgeId(t[0] == x ? t[1] : t[0], t[2] == x ? t[1] : t[2]);
}

const char* b2s(bool b) { return b ? "true" : "false"; }

// Which of the two side_partition colors plays role A.
int side_a_id(const SidePartition& sp, Mode mode) {
  return mode == Mode::kCylinder ? sp.side_of_o : 1 - sp.side_of_outer;
}

std::vector<TriangleReport> analyze_impl(const Drawing& d, const PairwiseResult& pw) {
  const CrossingSet cs = crossing_set(d, pw);
  std::optional<Arrangement> arr;
  if (d.mode == Mode::kPlane) arr = planarize(d, pw);
  std::vector<TriangleReport> out;
  for (const Triangle& t : all_triangles(d.n)) {
    TriangleReport r;
    r.triangle = t;
    std::optional<SidePartition> sp;
    int a = 0;
    if (arr) {
      sp = side_partition(*arr, t);
      a = side_a_id(*sp, d.mode);
    }
    for (int w = 1; w <= d.n; ++w) {
      if (in_tri(t, w)) continue;
      const bool on_a =
          sp ? sp->vertex_side[w - 1] == a : radial_side(d, t, w) == RadialSide::kOSide;
      (on_a ? r.side_a : r.side_b).push_back(w);
    }
    const bool ea = r.side_a.empty(), eb = r.side_b.empty();
    r.empty_side = ea && eb ? EmptySide::kBoth
                 : ea      ? EmptySide::kA
                 : eb      ? EmptySide::kB
                           : EmptySide::kNone;
    if (d.mode == Mode::kCylinder && ea != eb) r.o_side_empty = ea;
    for (int x : t) {
      const EdgeId opp = opposite(t, x);
      bool star = true;
      for (int w = 1; w <= d.n && star; ++w)
        if (!in_tri(t, w) && cs.crosses(EdgeId(x, w), opp)) star = false;
      if (star) r.star_at.push_back(x);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<TriangleReport> analyze_triangles(const Drawing& d) {
  const PairwiseResult pw = pairwise_intersections(d);
  if (!pw.report.ok()) throw Error("triangle analysis needs a valid simple drawing");
  return analyze_impl(d, pw);
}

int count_empty(const std::vector<TriangleReport>& reports) {
  int k = 0;
  for (const TriangleReport& r : reports) k += r.empty() ? 1 : 0;
  return k;
}

int count_empty(const Drawing& d) { return count_empty(analyze_triangles(d)); }

std::vector<Triangle> empty_star_triangles_at(const std::vector<TriangleReport>& reports, int x) {
  std::vector<Triangle> out;
  for (const TriangleReport& r : reports)
    if (r.empty() && in_tri(r.triangle, x) && r.star(x)) out.push_back(r.triangle);
  return out;
}

std::vector<Triangle> empty_star_triangles_at(const Drawing& d, int x) {
  if (d.n < 4) throw Error("the star triangle census needs n >= 4");
  if (x < 1 || x > d.n) throw Error("vertex out of range");
  return empty_star_triangles_at(analyze_triangles(d), x);
}

std::vector<Triangle> double_star_empty(const std::vector<TriangleReport>& reports) {
  std::vector<Triangle> out;
  for (const TriangleReport& r : reports)
    if (r.empty() && r.star_at.size() == 2) out.push_back(r.triangle);
  return out;
}

std::vector<Triangle> double_star_empty(const Drawing& d) {
  if (d.n < 4) throw Error("the star triangle census needs n >= 4");
  return double_star_empty(analyze_triangles(d));
}

bool SuiteReport::all_pass() const {
  if (gt && !gt->is_gt) return false;
  for (const SuiteCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

const SuiteCheck& SuiteReport::at(const std::string& name) const {
  for (const SuiteCheck& c : checks)
    if (c.name == name) return c;
  throw Error("no such suite check: " + name);
}

namespace {

std::string quad_str(const std::array<int, 4>& q) {
  return std::to_string(q[0]) + "-" + std::to_string(q[1]) + "-" + std::to_string(q[2]) + "-" +
         std::to_string(q[3]);
}

// Vertices on the boundary walk of a face.
std::vector<int> face_vertices(const Arrangement& arr, int face) {
  std::set<int> vs;
  for (int dart = 0; dart < arr.dart_count(); ++dart) {
    if (arr.dart_face[dart] != face) continue;
    const ArrPiece& pc = arr.pieces[dart / 2];
    const int tail = dart % 2 == 0 ? pc.node_a : pc.node_b;
    if (arr.nodes[tail].is_vertex) vs.insert(arr.nodes[tail].vertex);
  }
  return {vs.begin(), vs.end()};
}

}  // namespace

SuiteReport verify_suite(const Drawing& d, SuiteLevel level) {
  const PairwiseResult pw = pairwise_intersections(d);
  if (!pw.report.ok()) throw Error("the lemma suite needs a valid simple drawing");
  if (d.n < 4) throw Error("the lemma suite needs n >= 4");

  SuiteReport rep;
  rep.level = level;
  if (level == SuiteLevel::kGt) rep.gt = validate_gt(d);

  const int n = d.n;
  const CrossingSet cs = crossing_set(d, pw);
  const std::vector<TriangleReport> reports = analyze_impl(d, pw);
  const std::vector<Triangle> tris = all_triangles(n);
  const int tcount = static_cast<int>(tris.size());
  const Arrangement arr = planarize(d, pw);
  std::vector<SidePartition> sp;
  sp.reserve(tris.size());
  for (const Triangle& t : tris) sp.push_back(side_partition(arr, t));
  const RotationSystem rot = rotation_system(d);

  std::vector<std::vector<Triangle>> star_lists(n);
  for (int x = 1; x <= n; ++x) star_lists[x - 1] = empty_star_triangles_at(reports, x);

  // Empty side of each triangle in side_partition colors; -1 when none.
  std::vector<int> empty_id(tris.size(), -1);
  for (int i = 0; i < tcount; ++i) {
    bool has[2] = {false, false};
    for (int w = 1; w <= n; ++w)
      if (!in_tri(tris[i], w)) has[sp[i].vertex_side[w - 1]] = true;
    if (has[0] != has[1]) empty_id[i] = has[0] ? 1 : 0;
  }
  const auto tri_index = [&](const Triangle& t) {
    return static_cast<int>(std::lower_bound(tris.begin(), tris.end(), t) - tris.begin());
  };
  const auto each_quad = [&](auto&& fn) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          for (int e = c + 1; e <= n; ++e)
            if (!fn(std::array<int, 4>{a, b, c, e})) return;
  };

  // S1 / G4 share the quad scan.
  const auto quad_check = [&](const char* name, bool exact) {
    SuiteCheck c{name};
    each_quad([&](const std::array<int, 4>& q) {
      const int k = cs.count_in_quad(q[0], q[1], q[2], q[3]);
      if (k > 1 || (exact && k != 1)) {
        c.pass = false;
        c.witness = {{"quad", quad_str(q)}, {"crossings", std::to_string(k)}};
        return false;
      }
      return true;
    });
    return c;
  };

  rep.checks.push_back(quad_check("S1", false));

  {
    SuiteCheck c{"S2"};
    for (int x = 1; x <= n && c.pass; ++x) {
      const int k = static_cast<int>(star_lists[x - 1].size());
      if (k < 2) {
        c.pass = false;
        c.witness = {{"vertex", std::to_string(x)}, {"empty_star_triangles", std::to_string(k)}};
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    SuiteCheck c{"S3"};
    for (int i = 0; i < tcount && c.pass; ++i)
      for (int x : tris[i]) {
        if (!reports[i].star(x)) continue;
        const EdgeId opp = opposite(tris[i], x);
        const bool cons = rot.consecutive(x, opp.u, opp.v);
        if (reports[i].empty() != cons) {
          c.pass = false;
          c.witness = {{"triangle", tri_str(tris[i])},
                       {"vertex", std::to_string(x)},
                       {"empty", b2s(reports[i].empty())},
                       {"consecutive", b2s(cons)}};
          break;
        }
      }
    rep.checks.push_back(std::move(c));
  }

  {
    SuiteCheck c{"S4"};
    for (int x = 1; x <= n && c.pass; ++x) {
      const std::vector<Triangle>& ts = star_lists[x - 1];
      for (size_t i = 0; i < ts.size() && c.pass; ++i)
        for (size_t j = i + 1; j < ts.size() && c.pass; ++j) {
          const auto fail = [&](const std::string& key, const std::string& val) {
            c.pass = false;
            c.witness = {{"vertex", std::to_string(x)},
                         {"triangle_a", tri_str(ts[i])},
                         {"triangle_b", tri_str(ts[j])},
                         {key, val}};
          };
          for (const EdgeId& e1 : tri_edges(ts[i]))
            for (const EdgeId& e2 : tri_edges(ts[j]))
              if (!e1.adjacent(e2) && cs.crosses(e1, e2))
                fail("crossing", e1.str() + " x " + e2.str());
          if (!c.pass) break;
          const int i1 = tri_index(ts[i]), i2 = tri_index(ts[j]);
          if (empty_id[i1] < 0 || empty_id[i2] < 0) {
            fail("detail", "side classifications disagree");
            break;
          }
          for (int f = 0; f < arr.num_faces && c.pass; ++f)
            if (sp[i1].face_side[f] == empty_id[i1] && sp[i2].face_side[f] == empty_id[i2])
              fail("cell", std::to_string(f));
        }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    SuiteCheck c{"S5"};
    for (int i = 0; i < tcount && c.pass; ++i)
      for (int apex : tris[i]) {
        const EdgeId base = opposite(tris[i], apex);
        for (const std::vector<int>* side : {&reports[i].side_a, &reports[i].side_b})
          for (int x : *side) {
            if (!cs.crosses(EdgeId(x, apex), base)) continue;
            for (int y : *side) {
              if (y == x) continue;
              if (cs.crosses(EdgeId(x, y), EdgeId(apex, base.u)) &&
                  cs.crosses(EdgeId(x, y), EdgeId(apex, base.v))) {
                c.pass = false;
                c.witness = {{"triangle", tri_str(tris[i])},
                             {"apex", std::to_string(apex)},
                             {"x", std::to_string(x)},
                             {"y", std::to_string(y)}};
              }
            }
          }
        if (!c.pass) break;
      }
    rep.checks.push_back(std::move(c));
  }

  {
    SuiteCheck c{"S6"};
    for (int v = 1; v <= n && c.pass; ++v) {
      int k = 0;
      for (int i = 0; i < tcount; ++i)
        if (reports[i].empty() && in_tri(tris[i], v)) ++k;
      if (k < 2) {
        c.pass = false;
        c.witness = {{"vertex", std::to_string(v)}, {"empty_triangles", std::to_string(k)}};
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    SuiteCheck c{"S7"};
    const int k = count_empty(reports);
    if (k < n) {
      c.pass = false;
      c.witness = {{"empty", std::to_string(k)}, {"n", std::to_string(n)}};
    }
    rep.checks.push_back(std::move(c));
  }

  if (level != SuiteLevel::kGt) return rep;

  {
    SuiteCheck c{"G1"};
    for (int i = 0; i < tcount && c.pass; ++i)
      if (sp[i].side_of_o == sp[i].side_of_z) {
        c.pass = false;
        c.witness = {{"triangle", tri_str(tris[i])}};
      }
    rep.checks.push_back(std::move(c));
  }

  {
    SuiteCheck c{"G2"};
    // Interior of a triangle: its center side. Two triangles are
    // interior-disjoint when their boundaries do not cross and no cell lies
    // in both interiors.
    const auto interiors_disjoint = [&](int i, int j) {
      for (const EdgeId& e1 : tri_edges(tris[i]))
        for (const EdgeId& e2 : tri_edges(tris[j]))
          if (!e1.adjacent(e2) && cs.crosses(e1, e2)) return false;
      for (int f = 0; f < arr.num_faces; ++f)
        if (sp[i].face_side[f] == sp[i].side_of_o && sp[j].face_side[f] == sp[j].side_of_o)
          return false;
      return true;
    };
    const auto fail = [&](int i, int j, int k) {
      c.pass = false;
      c.witness = {{"triangles", tri_str(tris[i]) + " " + tri_str(tris[j]) + " " + tri_str(tris[k])}};
    };
    if (n <= 7) {
      std::vector<std::vector<char>> dis(tcount, std::vector<char>(tcount, 0));
      for (int i = 0; i < tcount; ++i)
        for (int j = i + 1; j < tcount; ++j) dis[i][j] = dis[j][i] = interiors_disjoint(i, j);
      for (int i = 0; i < tcount && c.pass; ++i)
        for (int j = i + 1; j < tcount && c.pass; ++j)
          for (int k = j + 1; k < tcount && c.pass; ++k)
            if (dis[i][j] && dis[i][k] && dis[j][k]) fail(i, j, k);
    } else {
      std::mt19937 rng(271828);
      std::uniform_int_distribution<int> pick(0, tcount - 1);
      for (int trial = 0; trial < 2000 && c.pass; ++trial) {
        const int i = pick(rng), j = pick(rng), k = pick(rng);
        if (i == j || i == k || j == k) continue;
        if (interiors_disjoint(i, j) && interiors_disjoint(i, k) && interiors_disjoint(j, k))
          fail(i, j, k);
      }
    }
    rep.checks.push_back(std::move(c));
  }

  const std::vector<int> o_boundary = face_vertices(arr, arr.o_face);

  {
    SuiteCheck c{"G3"};
    if (o_boundary.empty()) {
      c.pass = false;
      c.witness = {{"cell", "O"}};
    } else if (face_vertices(arr, arr.z_face).empty()) {
      c.pass = false;
      c.witness = {{"cell", "Z"}};
    }
    rep.checks.push_back(std::move(c));
  }

  rep.checks.push_back(quad_check("G4", true));

  {
    SuiteCheck c{"G5"};
    for (int x = 1; x <= n && c.pass; ++x) {
      const std::vector<Triangle>& ts = star_lists[x - 1];
      if (ts.size() != 2) {
        c.pass = false;
        c.witness = {{"vertex", std::to_string(x)},
                     {"empty_star_triangles", std::to_string(ts.size())}};
        break;
      }
      int o_cnt = 0;
      for (const Triangle& t : ts) {
        const std::optional<bool>& o = reports[tri_index(t)].o_side_empty;
        o_cnt += o && *o ? 1 : 0;
      }
      if (o_cnt != 1) {
        c.pass = false;
        c.witness = {{"vertex", std::to_string(x)},
                     {"detail", "empty star triangles do not split between the ends"}};
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    SuiteCheck c{"G6"};
    for (int i = 0; i < tcount && c.pass; ++i) {
      const TriangleReport& r = reports[i];
      if (!r.empty() || !r.o_side_empty || !*r.o_side_empty) continue;
      const auto fail = [&](int v, const std::string& key, const std::string& val) {
        c.pass = false;
        c.witness = {{"triangle", tri_str(tris[i])}, {"vertex", std::to_string(v)}, {key, val}};
      };
      for (int v : o_boundary) {
        if (!in_tri(tris[i], v)) {
          fail(v, "detail", "center-cell boundary vertex missing from the triangle");
          break;
        }
        const EdgeId xy = opposite(tris[i], v);
        const bool sx = r.star(xy.u), sy = r.star(xy.v);
        if (!sx && !sy) {
          fail(v, "detail", "star at neither remaining corner");
          break;
        }
        if (sx && sy) {
          for (int w = 1; w <= n; ++w) {
            if (in_tri(tris[i], w) || cs.crosses(EdgeId(v, w), xy)) continue;
            fail(v, "edge", EdgeId(v, w).str() + " misses " + xy.str());
            break;
          }
          if (!c.pass) break;
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    SuiteCheck c{"G7"};
    int ds = 0, ds_o = 0;
    for (int i = 0; i < tcount; ++i)
      if (reports[i].empty() && reports[i].star_at.size() == 2) {
        ++ds;
        ds_o += reports[i].o_side_empty && *reports[i].o_side_empty ? 1 : 0;
      }
    if (ds != 4) {
      c.pass = false;
      c.witness = {{"double_star_empty", std::to_string(ds)}};
    } else if (ds_o != 2) {
      c.pass = false;
      c.witness = {{"with_center_side_empty", std::to_string(ds_o)}};
    }
    rep.checks.push_back(std::move(c));
  }

  {
    SuiteCheck c{"G8"};
    const int k = count_empty(reports);
    if (k != 2 * n - 4) {
      c.pass = false;
      c.witness = {{"empty", std::to_string(k)}, {"expected", std::to_string(2 * n - 4)}};
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

}  // namespace gtdraw
