#include "gtdraw/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace gtdraw {

namespace {

void append_pt(std::vector<Pt>& v, const Pt& p) {
  if (v.empty() || !(v.back() == p)) v.push_back(p);
}

struct SplitEvent {
  int seg;
  Rat t;
  int node;
  Pt pos;
};

void split_arcs(const Drawing& d, const std::vector<ArcCrossing>& xs, int first_cross_node,
                Arrangement& arr) {
  std::vector<std::vector<SplitEvent>> per_edge(edge_count(d.n));
  for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
    const ArcCrossing& x = xs[i];
    per_edge[edge_index(x.e, d.n)].push_back({x.seg_e, x.t_e, first_cross_node + i, x.pos_e});
    per_edge[edge_index(x.f, d.n)].push_back({x.seg_f, x.t_f, first_cross_node + i, x.pos_f});
  }
  for (const Arc& a : d.arcs) {
    auto& evs = per_edge[edge_index(a.edge, d.n)];
    std::sort(evs.begin(), evs.end(), [](const SplitEvent& p, const SplitEvent& q) {
      return p.seg != q.seg ? p.seg < q.seg : p.t < q.t;
    });
    const auto& P = a.polyline;
    int cur_start = a.from_v - 1;
    std::vector<Pt> pts = {P[0]};
    size_t k = 0;
    for (int s = 0; s + 1 < static_cast<int>(P.size()); ++s) {
      while (k < evs.size() && evs[k].seg == s) {
        append_pt(pts, evs[k].pos);
        arr.pieces.push_back({a.edge, cur_start, evs[k].node, std::move(pts)});
        cur_start = evs[k].node;
        pts = {evs[k].pos};
        ++k;
      }
      append_pt(pts, P[s + 1]);
    }
    arr.pieces.push_back({a.edge, cur_start, a.edge.other(a.from_v) - 1, std::move(pts)});
  }
}

void build_faces(Arrangement& arr) {
  const int nd = arr.dart_count();
  std::vector<int> dart_node(nd);
  std::vector<Pt> dart_dir(nd);
  for (int p = 0; p < arr.piece_count(); ++p) {
    const auto& pts = arr.pieces[p].pts;
    const size_t m = pts.size();
    dart_node[2 * p] = arr.pieces[p].node_a;
    dart_dir[2 * p] = {pts[1].x - pts[0].x, pts[1].y - pts[0].y};
    dart_node[2 * p + 1] = arr.pieces[p].node_b;
    dart_dir[2 * p + 1] = {pts[m - 2].x - pts[m - 1].x, pts[m - 2].y - pts[m - 1].y};
  }

  arr.node_darts.assign(arr.nodes.size(), {});
  for (int dd = 0; dd < nd; ++dd) arr.node_darts[dart_node[dd]].push_back(dd);
  std::vector<int> pos_in_node(nd);
  for (auto& darts : arr.node_darts) {
    std::sort(darts.begin(), darts.end(),
              [&](int x, int y) { return dir_ccw_less(dart_dir[x], dart_dir[y]); });
    for (size_t i = 0; i + 1 < darts.size(); ++i)
      if (dir_equal(dart_dir[darts[i]], dart_dir[darts[i + 1]]))
        throw AmbiguousRotationError("two pieces leave a node in the same direction");
    for (size_t i = 0; i < darts.size(); ++i) pos_in_node[darts[i]] = static_cast<int>(i);
  }

  // Reverse, then step clockwise in the rotation: orbits trace each face with
  // the face on the left of every dart.
  auto next_dart = [&](int dd) {
    const int twin = dd ^ 1;
    const auto& darts = arr.node_darts[dart_node[twin]];
    const int sz = static_cast<int>(darts.size());
    return darts[(pos_in_node[twin] + sz - 1) % sz];
  };

  arr.dart_face.assign(nd, -1);
  for (int dd = 0; dd < nd; ++dd) {
    if (arr.dart_face[dd] >= 0) continue;
    const int f = arr.num_faces++;
    int cur = dd;
    do {
      arr.dart_face[cur] = f;
      cur = next_dart(cur);
    } while (cur != dd);
  }

  const long v = static_cast<long>(arr.nodes.size());
  const long e = arr.piece_count();
  const long f = arr.num_faces;
  if (v - e + f != 2) throw Error("planarization violates Euler's relation");
}

// Signed-area sums identify the unbounded face: every bounded face boundary is
// a counterclockwise walk, the outer boundary is clockwise.
void find_outer_face(Arrangement& arr) {
  std::vector<Rat> area(arr.num_faces, Rat(0));
  for (int p = 0; p < arr.piece_count(); ++p) {
    const auto& pts = arr.pieces[p].pts;
    Rat s(0);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
      s += pts[i].x * pts[i + 1].y - pts[i + 1].x * pts[i].y;
    area[arr.dart_face[2 * p]] += s;
    area[arr.dart_face[2 * p + 1]] -= s;
  }
  int outer = -1;
  for (int f = 0; f < arr.num_faces; ++f) {
    if (area[f].sgn() >= 0) continue;
    if (outer >= 0) throw Error("two faces claim to be unbounded");
    outer = f;
  }
  if (outer < 0) throw Error("no unbounded face found");
  arr.outer_face = outer;
}

struct StackEntry {
  Rat y;
  int above, below;
};

void assign_column(Arrangement& arr, std::vector<char>& has_rep, const Rat& x,
                   std::vector<StackEntry>& entries, int bottom_face_hint) {
  std::sort(entries.begin(), entries.end(),
            [](const StackEntry& a, const StackEntry& b) { return a.y < b.y; });
  for (size_t i = 0; i + 1 < entries.size(); ++i) {
    if (entries[i].y == entries[i + 1].y) throw Error("pieces meet off a node");
    if (entries[i].above != entries[i + 1].below) throw Error("face stack mismatch");
  }
  if (bottom_face_hint >= 0 && entries.front().below != bottom_face_hint)
    throw Error("face scan disagrees about the bottom face");

  auto put = [&](int f, Pt rep) {
    if (has_rep[f]) return;
    has_rep[f] = 1;
    arr.face_rep[f] = std::move(rep);
  };
  const int bottom = entries.front().below;
  put(bottom, {x, arr.mode == Mode::kCylinder ? entries.front().y / Rat(2)
                                              : entries.front().y - Rat(1)});
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    put(entries[i].above, {x, (entries[i].y + entries[i + 1].y) / Rat(2)});
  put(entries.back().above, {x, entries.back().y + Rat(1)});
}

Rat interp_y(const Pt& a, const Pt& b, const Rat& x) {
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

void scan_plane(Arrangement& arr) {
  std::vector<Rat> crit;
  for (const auto& pc : arr.pieces)
    for (const Pt& q : pc.pts) crit.push_back(q.x);
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  std::vector<char> has_rep(arr.num_faces, 0);
  arr.face_rep.assign(arr.num_faces, Pt{});
  int missing = arr.num_faces;
  auto all_done = [&]() {
    missing = static_cast<int>(std::count(has_rep.begin(), has_rep.end(), 0));
    return missing == 0;
  };

  for (size_t c = 0; c + 1 < crit.size() && !all_done(); ++c) {
    const Rat x = (crit[c] + crit[c + 1]) / Rat(2);
    std::vector<StackEntry> entries;
    for (int p = 0; p < arr.piece_count(); ++p) {
      const auto& pts = arr.pieces[p].pts;
      for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const bool right = pts[i].x < pts[i + 1].x;
        const Rat& lo = right ? pts[i].x : pts[i + 1].x;
        const Rat& hi = right ? pts[i + 1].x : pts[i].x;
        if (!(lo < x && x < hi)) continue;
        entries.push_back({interp_y(pts[i], pts[i + 1], x),
                           arr.dart_face[2 * p + (right ? 0 : 1)],
                           arr.dart_face[2 * p + (right ? 1 : 0)]});
      }
    }
    if (entries.empty()) continue;
    assign_column(arr, has_rep, x, entries, arr.outer_face);
  }
  if (!all_done()) throw Error("face representative scan incomplete");
}

void scan_cylinder(Arrangement& arr) {
  std::vector<Rat> crit;
  for (const auto& pc : arr.pieces)
    for (const Pt& q : pc.pts) crit.push_back(q.x - q.x.floor());
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  std::vector<Rat> mids;
  for (size_t c = 0; c + 1 < crit.size(); ++c) mids.push_back((crit[c] + crit[c + 1]) / Rat(2));
  Rat wrap = (crit.back() + crit.front() + Rat(1)) / Rat(2);
  mids.push_back(wrap - wrap.floor());

  std::vector<char> has_rep(arr.num_faces, 0);
  arr.face_rep.assign(arr.num_faces, Pt{});
  auto all_done = [&]() {
    return std::count(has_rep.begin(), has_rep.end(), 0) == 0 && arr.o_face >= 0;
  };

  for (const Rat& x : mids) {
    if (all_done()) break;
    std::vector<StackEntry> entries;
    for (int p = 0; p < arr.piece_count(); ++p) {
      const auto& pts = arr.pieces[p].pts;
      for (Rat th = x + (pts.front().x - x).ceil(); th < pts.back().x; th += Rat(1)) {
        if (!(pts.front().x < th)) continue;
        auto it = std::upper_bound(pts.begin(), pts.end(), th,
                                   [](const Rat& t, const Pt& q) { return t < q.x; });
        entries.push_back(
            {interp_y(*(it - 1), *it, th), arr.dart_face[2 * p], arr.dart_face[2 * p + 1]});
      }
    }
    if (entries.empty()) continue;
    assign_column(arr, has_rep, x, entries, arr.o_face);
    std::sort(entries.begin(), entries.end(),
              [](const StackEntry& a, const StackEntry& b) { return a.y < b.y; });
    if (arr.o_face < 0) {
      arr.o_face = entries.front().below;
      arr.z_face = entries.back().above;
    } else if (arr.z_face != entries.back().above) {
      throw Error("face scan disagrees about the top face");
    }
  }
  if (arr.o_face < 0 || std::count(has_rep.begin(), has_rep.end(), 0) != 0)
    throw Error("face representative scan incomplete");
}

}  // namespace

Arrangement planarize(const Drawing& d, const PairwiseResult& pw) {
  if (!pw.report.ok()) throw Error("planarize needs a valid simple drawing");
  Arrangement arr;
  arr.mode = d.mode;
  arr.n = d.n;
  for (int v = 1; v <= d.n; ++v) arr.nodes.push_back({true, v, {}, d.vpos(v)});

  std::vector<ArcCrossing> xs = pw.crossings;
  std::sort(xs.begin(), xs.end(), [](const ArcCrossing& a, const ArcCrossing& b) {
    if (a.e != b.e) return a.e < b.e;
    return a.f < b.f;
  });
  for (const ArcCrossing& x : xs) {
    Pt pos = d.mode == Mode::kCylinder ? cyl_canonical(x.pos_e) : x.pos_e;
    arr.nodes.push_back({false, 0, {x.e, x.f}, std::move(pos)});
  }

  split_arcs(d, xs, d.n, arr);
  build_faces(arr);
  if (d.mode == Mode::kPlane) {
    find_outer_face(arr);
    scan_plane(arr);
  } else {
    scan_cylinder(arr);
  }
  return arr;
}

Arrangement planarize(const Drawing& d) { return planarize(d, pairwise_intersections(d)); }

SidePartition side_partition(const Arrangement& arr, const std::array<int, 3>& tri) {
  for (int v : tri)
    if (v < 1 || v > arr.n) throw Error("triangle vertex out of range");
  if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
    throw Error("triangle vertices must be distinct");
  const EdgeId sides[3] = {EdgeId(tri[0], tri[1]), EdgeId(tri[1], tri[2]),
                           EdgeId(tri[0], tri[2])};

  SidePartition sp;
  sp.face_side.assign(arr.num_faces, -1);
  sp.face_side[0] = 0;
  // Breadth-first over face adjacencies, flipping sides across the triangle.
  std::deque<int> bfs = {0};
  while (!bfs.empty()) {
    const int f = bfs.front();
    bfs.pop_front();
    for (int p = 0; p < arr.piece_count(); ++p) {
      const int f1 = arr.dart_face[2 * p], f2 = arr.dart_face[2 * p + 1];
      if (f1 != f && f2 != f) continue;
      const int g = f1 == f ? f2 : f1;
      const bool flip = arr.pieces[p].edge == sides[0] || arr.pieces[p].edge == sides[1] ||
                        arr.pieces[p].edge == sides[2];
      const signed char want = static_cast<signed char>(flip ? 1 - sp.face_side[f] : sp.face_side[f]);
      if (sp.face_side[g] == -1) {
        sp.face_side[g] = want;
        bfs.push_back(g);
      } else if (sp.face_side[g] != want) {
        throw Error("triangle does not split the faces into two sides");
      }
    }
  }
  for (int f = 0; f < arr.num_faces; ++f)
    if (sp.face_side[f] == -1) throw Error("face not reached by the side partition");

  sp.vertex_side.assign(arr.n, -1);
  for (int v = 1; v <= arr.n; ++v) {
    if (v == tri[0] || v == tri[1] || v == tri[2]) continue;
    signed char side = -1;
    for (int dd : arr.node_darts[v - 1]) {
      const signed char s = sp.face_side[arr.dart_face[dd]];
      if (side == -1) side = s;
      else if (side != s) throw Error("vertex touches both sides of a triangle");
    }
    sp.vertex_side[v - 1] = side;
  }

  if (arr.outer_face >= 0) sp.side_of_outer = sp.face_side[arr.outer_face];
  if (arr.o_face >= 0) sp.side_of_o = sp.face_side[arr.o_face];
  if (arr.z_face >= 0) sp.side_of_z = sp.face_side[arr.z_face];
  return sp;
}

}  // namespace gtdraw
