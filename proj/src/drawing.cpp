#include "gtdraw/drawing.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gtdraw {

std::vector<EdgeId> all_edges(int n) {
  std::vector<EdgeId> out;
  out.reserve(edge_count(n));
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  return out;
}

Pt cyl_canonical(const Pt& p) { return {p.x - p.x.floor(), p.y}; }

std::string to_string(ValidationErrorCode c) {
  switch (c) {
    case ValidationErrorCode::kDoubleCrossing: return "DOUBLE_CROSSING";
    case ValidationErrorCode::kAdjacentCrossing: return "ADJACENT_CROSSING";
    case ValidationErrorCode::kVertexOnArc: return "VERTEX_ON_ARC";
    case ValidationErrorCode::kDegenerateContact: return "DEGENERATE_CONTACT";
    case ValidationErrorCode::kTriplePoint: return "TRIPLE_POINT";
  }
  return "?";
}

namespace {

[[noreturn]] void structural(const std::string& msg) { throw SchemaError(msg); }

// Does the open interval (a, b) contain an integer?
bool open_span_wraps(const Rat& a, const Rat& b) { return a.floor() + Rat(1) < b; }

}  // namespace

Drawing Drawing::make(int n, Mode mode, std::vector<Pt> vertex_pos, std::vector<Arc> arcs) {
  if (n < 3) structural("drawing needs n >= 3");
  if (static_cast<int>(vertex_pos.size()) != n) structural("vertex count != n");
  if (mode == Mode::kCylinder) {
    for (int v = 1; v <= n; ++v) {
      const Pt& p = vertex_pos[v - 1];
      if (p.x.sgn() < 0 || p.x >= Rat(1)) structural("vertex angle outside [0,1)");
      if (p.y.sgn() <= 0) structural("vertex radius must be positive");
    }
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (vertex_pos[a - 1] == vertex_pos[b - 1]) structural("coincident vertex positions");

  if (static_cast<int>(arcs.size()) != edge_count(n)) structural("arc count != C(n,2)");
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& x, const Arc& y) { return x.edge < y.edge; });
  const auto ids = all_edges(n);
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
    if (arcs[i].edge != ids[i]) structural("arcs must cover every edge exactly once");

  for (Arc& a : arcs) {
    const auto& P = a.polyline;
    if (P.size() < 2) structural("polyline needs at least 2 points: " + a.edge.str());
    for (size_t i = 0; i + 1 < P.size(); ++i)
      if (P[i] == P[i + 1]) structural("repeated consecutive polyline point: " + a.edge.str());
    if (a.edge.v > n) structural("edge endpoint out of range");

    if (mode == Mode::kPlane) {
      if (a.wrap) structural("wrap flag in plane mode: " + a.edge.str());
      const Pt& pu = vertex_pos[a.edge.u - 1];
      const Pt& pv = vertex_pos[a.edge.v - 1];
      if (P.front() == pu && P.back() == pv) a.from_v = a.edge.u;
      else if (P.front() == pv && P.back() == pu) a.from_v = a.edge.v;
      else structural("polyline endpoints do not match vertex positions: " + a.edge.str());
    } else {
      for (size_t i = 0; i + 1 < P.size(); ++i)
        if (!(P[i].x < P[i + 1].x)) structural("arc not angle-monotone: " + a.edge.str());
      for (const Pt& p : P)
        if (p.y.sgn() <= 0) structural("nonpositive radius on arc: " + a.edge.str());
      const Pt f = cyl_canonical(P.front()), b = cyl_canonical(P.back());
      const Pt& pu = vertex_pos[a.edge.u - 1];
      const Pt& pv = vertex_pos[a.edge.v - 1];
      if (f == pu && b == pv) a.from_v = a.edge.u;
      else if (f == pv && b == pu) a.from_v = a.edge.v;
      else structural("polyline endpoints do not match vertex positions: " + a.edge.str());
      if (a.wrap != open_span_wraps(P.front().x, P.back().x))
        structural("wrap flag inconsistent with span: " + a.edge.str());
    }
  }

  Drawing d;
  d.n = n;
  d.mode = mode;
  d.vertex_pos = std::move(vertex_pos);
  d.arcs = std::move(arcs);
  return d;
}

std::pair<Rat, Rat> Drawing::arc_span(const EdgeId& e) const {
  const auto& P = arc(e).polyline;
  return {P.front().x, P.back().x};
}

Rat Drawing::arc_radius_at(const EdgeId& e, const Rat& theta) const {
  const auto& P = arc(e).polyline;
  if (theta < P.front().x || theta > P.back().x) throw Error("angle outside arc span");
  auto it = std::upper_bound(P.begin(), P.end(), theta,
                             [](const Rat& t, const Pt& p) { return t < p.x; });
  if (it == P.begin()) return P.front().y;
  if (it == P.end()) return P.back().y;
  const Pt& a = *(it - 1);
  const Pt& b = *it;
  return a.y + (theta - a.x) * (b.y - a.y) / (b.x - a.x);
}

std::vector<Rat> Drawing::span_hits(const EdgeId& e, const Rat& theta01) const {
  auto [lo, hi] = arc_span(e);
  std::vector<Rat> out;
  for (Rat k = (lo - theta01).ceil(); theta01 + k <= hi; k += Rat(1))
    out.push_back(theta01 + k);
  return out;
}

namespace {

// Arc-local location codes for a contact point.
enum Loc { kStart = 0, kEnd = 1, kJoint = 2, kInside = 3 };

struct CanonPos {
  int loc;
  int seg;
  Rat t;
};

CanonPos canon_pos(const std::vector<Pt>& P, int si, const Rat& t) {
  const int last = static_cast<int>(P.size()) - 2;
  if (t.sgn() == 0) {
    if (si == 0) return {kStart, 0, Rat(0)};
    return {kJoint, si - 1, Rat(1)};
  }
  if (t == Rat(1)) {
    if (si == last) return {kEnd, si, Rat(1)};
    return {kJoint, si, Rat(1)};
  }
  return {kInside, si, t};
}

Rat seg_param(const Pt& a, const Pt& b, const Pt& p) {
  if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
  return (p.y - a.y) / (b.y - a.y);
}

// The two local branch directions of a polyline around an interior point.
std::pair<Pt, Pt> local_branches(const std::vector<Pt>& P, const CanonPos& c, const Pt& p) {
  if (c.loc == kInside)
    return {{P[c.seg].x - p.x, P[c.seg].y - p.y}, {P[c.seg + 1].x - p.x, P[c.seg + 1].y - p.y}};
  // Joint at P[seg+1].
  return {{P[c.seg].x - p.x, P[c.seg].y - p.y}, {P[c.seg + 2].x - p.x, P[c.seg + 2].y - p.y}};
}

// True when the a-branches and b-branches alternate around the contact point,
// i.e. the curves genuinely cross there.
bool branches_alternate(const Pt& a1, const Pt& a2, const Pt& b1, const Pt& b2) {
  std::vector<std::pair<Pt, int>> dirs = {{a1, 0}, {a2, 0}, {b1, 1}, {b2, 1}};
  std::sort(dirs.begin(), dirs.end(),
            [](const auto& x, const auto& y) { return dir_ccw_less(x.first, y.first); });
  return dirs[0].second != dirs[1].second && dirs[1].second != dirs[2].second &&
         dirs[2].second != dirs[3].second;
}

struct RawHit {
  int sa, sb;
  SegIntersection is;
};

// All segment-level intersections between polylines P and Q. When `monotone`
// both are strictly x-increasing and a linear merge is used.
void collect_hits(const std::vector<Pt>& P, const std::vector<Pt>& Q, bool monotone,
                  std::vector<RawHit>& out) {
  const int np = static_cast<int>(P.size()) - 1;
  const int nq = static_cast<int>(Q.size()) - 1;
  if (!monotone) {
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < nq; ++j) {
        auto r = seg_intersect(Seg(P[i], P[i + 1]), Seg(Q[j], Q[j + 1]));
        if (r.kind != SegIntersection::Kind::kNone) out.push_back({i, j, r});
      }
    return;
  }
  int i = 0, j = 0;
  while (i < np && j < nq) {
    if (!(Q[j + 1].x < P[i].x) && !(P[i + 1].x < Q[j].x)) {
      auto r = seg_intersect(Seg(P[i], P[i + 1]), Seg(Q[j], Q[j + 1]));
      if (r.kind != SegIntersection::Kind::kNone) out.push_back({i, j, r});
    }
    if (P[i + 1].x < Q[j + 1].x) ++i;
    else ++j;
  }
}

struct PairContact {
  Pt pa, pb;
  CanonPos ca, cb;
  bool plain_interior = false;  // transversal for sure: kPoint strictly inside both segments
  bool overlap = false;
};

struct PairOutcome {
  std::vector<ValidationError> errors;
  std::vector<ArcCrossing> crossings;
};

// Contacts between arc A and arc B, with B's polyline shifted by `shift` in x.
// Results are keyed by the point in A's frame.
void contacts_for_shift(const Arc& A, const Arc& B, const Rat& shift, bool monotone,
                        std::map<Pt, PairContact>& acc, bool& overlap_found) {
  std::vector<Pt> Q = B.polyline;
  if (shift.sgn() != 0)
    for (Pt& p : Q) p.x += shift;
  std::vector<RawHit> hits;
  collect_hits(A.polyline, Q, monotone, hits);
  for (const auto& h : hits) {
    if (h.is.kind == SegIntersection::Kind::kOverlap) {
      overlap_found = true;
      continue;
    }
    const Pt& p = *h.is.point;
    const Rat ta = seg_param(A.polyline[h.sa], A.polyline[h.sa + 1], p);
    const Rat tb = seg_param(Q[h.sb], Q[h.sb + 1], p);
    PairContact c;
    c.pa = p;
    c.pb = {p.x - shift, p.y};
    c.ca = canon_pos(A.polyline, h.sa, ta);
    c.cb = canon_pos(B.polyline, h.sb, tb);
    c.plain_interior = h.is.kind == SegIntersection::Kind::kPoint && c.ca.loc == kInside &&
                       c.cb.loc == kInside;
    auto [it, fresh] = acc.emplace(p, c);
    if (!fresh) it->second.plain_interior = it->second.plain_interior || c.plain_interior;
  }
}

void process_pair(const Drawing& d, const Arc& A, const Arc& B, PairOutcome& out) {
  std::map<Pt, PairContact> contacts;
  bool overlap_found = false;

  if (d.mode == Mode::kPlane) {
    contacts_for_shift(A, B, Rat(0), false, contacts, overlap_found);
  } else {
    const Rat a0 = A.polyline.front().x, a1 = A.polyline.back().x;
    const Rat b0 = B.polyline.front().x, b1 = B.polyline.back().x;
    for (Rat k = (a0 - b1).ceil(); k <= (a1 - b0).floor(); k += Rat(1))
      contacts_for_shift(A, B, k, true, contacts, overlap_found);
  }

  if (overlap_found) {
    out.errors.push_back({ValidationErrorCode::kDegenerateContact, A.edge, B.edge, std::nullopt,
                          {}, "arcs overlap along a positive-length piece"});
  }

  const bool adj = A.edge.adjacent(B.edge);
  std::vector<ArcCrossing> proper;
  for (const auto& [p, c] : contacts) {
    const bool end_a = c.ca.loc == kStart || c.ca.loc == kEnd;
    const bool end_b = c.cb.loc == kStart || c.cb.loc == kEnd;
    if (end_a && end_b) {
      if (!adj)
        out.errors.push_back({ValidationErrorCode::kDegenerateContact, A.edge, B.edge,
                              std::nullopt, {p}, "endpoint contact of independent arcs"});
      continue;  // the shared vertex
    }
    if (end_a || end_b) continue;  // a vertex lying on a foreign arc; reported per vertex
    bool crossing;
    if (c.plain_interior) {
      crossing = true;
    } else {
      auto [x1, x2] = local_branches(A.polyline, c.ca, c.pa);
      std::vector<Pt> Q = B.polyline;
      const Rat shift = c.pa.x - c.pb.x;
      if (shift.sgn() != 0)
        for (Pt& q : Q) q.x += shift;
      auto [y1, y2] = local_branches(Q, c.cb, c.pa);
      const Pt all[4] = {x1, x2, y1, y2};
      bool tie = false;
      for (int i = 0; i < 4 && !tie; ++i)
        for (int j = i + 1; j < 4 && !tie; ++j)
          if (dir_equal(all[i], all[j])) tie = true;
      if (tie) {
        out.errors.push_back({ValidationErrorCode::kDegenerateContact, A.edge, B.edge,
                              std::nullopt, {p}, "tangential contact"});
        continue;
      }
      crossing = branches_alternate(x1, x2, y1, y2);
      if (!crossing) {
        out.errors.push_back({ValidationErrorCode::kDegenerateContact, A.edge, B.edge,
                              std::nullopt, {p}, "touching without crossing"});
        continue;
      }
    }
    if (crossing) {
      ArcCrossing x;
      x.e = A.edge;
      x.f = B.edge;
      x.pos_e = c.pa;
      x.pos_f = c.pb;
      x.seg_e = c.ca.seg;
      x.t_e = c.ca.t;
      x.seg_f = c.cb.seg;
      x.t_f = c.cb.t;
      proper.push_back(std::move(x));
    }
  }

  if (adj) {
    for (const auto& x : proper)
      out.errors.push_back({ValidationErrorCode::kAdjacentCrossing, A.edge, B.edge, std::nullopt,
                            {x.pos_e}, "arcs with a common endpoint cross"});
    return;
  }
  if (proper.size() > 1) {
    ValidationError e{ValidationErrorCode::kDoubleCrossing, A.edge, B.edge, std::nullopt, {},
                      "independent arcs cross " + std::to_string(proper.size()) + " times"};
    for (const auto& x : proper) e.points.push_back(x.pos_e);
    out.errors.push_back(std::move(e));
    return;
  }
  for (auto& x : proper) out.crossings.push_back(std::move(x));
}

void self_check(const Drawing& d, const Arc& A, std::vector<ValidationError>& errors) {
  const auto& P = A.polyline;
  const int np = static_cast<int>(P.size()) - 1;
  if (d.mode == Mode::kPlane) {
    for (int i = 0; i < np; ++i)
      for (int j = i + 1; j < np; ++j) {
        auto r = seg_intersect(Seg(P[i], P[i + 1]), Seg(P[j], P[j + 1]));
        if (r.kind == SegIntersection::Kind::kNone) continue;
        if (j == i + 1) {
          if (r.kind == SegIntersection::Kind::kOverlap)
            errors.push_back({ValidationErrorCode::kDegenerateContact, A.edge, A.edge,
                              std::nullopt, {P[j]}, "polyline backtracks onto itself"});
          continue;  // the shared joint
        }
        ValidationError e{ValidationErrorCode::kDegenerateContact, A.edge, A.edge, std::nullopt,
                          {}, "arc intersects itself"};
        if (r.point) e.points.push_back(*r.point);
        errors.push_back(std::move(e));
      }
    return;
  }
  // Angle-monotone arcs are simple within one period; only overlaps with a
  // shifted copy of themselves are possible, for spans of length >= 1.
  const Rat len = P.back().x - P.front().x;
  for (Rat k = Rat(1); k <= len.floor(); k += Rat(1)) {
    std::vector<Pt> Q = P;
    for (Pt& q : Q) q.x += k;
    std::vector<RawHit> hits;
    collect_hits(P, Q, true, hits);
    for (const auto& h : hits) {
      ValidationError e{ValidationErrorCode::kDegenerateContact, A.edge, A.edge, std::nullopt,
                        {}, "arc meets itself around the cylinder"};
      if (h.is.point) e.points.push_back(*h.is.point);
      errors.push_back(std::move(e));
    }
  }
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
  if (orient(a, b, p) != Orient::kCollinear) return false;
  const Rat t = seg_param(a, b, p);
  return t.sgn() >= 0 && t <= Rat(1);
}

void vertex_on_arc_check(const Drawing& d, std::vector<ValidationError>& errors) {
  for (int w = 1; w <= d.n; ++w) {
    const Pt& pw = d.vpos(w);
    for (const Arc& A : d.arcs) {
      const auto& P = A.polyline;
      std::vector<Pt> offending;
      if (d.mode == Mode::kPlane) {
        std::map<Pt, CanonPos> found;
        for (int i = 0; i + 1 < static_cast<int>(P.size()); ++i)
          if (on_segment(P[i], P[i + 1], pw))
            found.emplace(pw, canon_pos(P, i, seg_param(P[i], P[i + 1], pw)));
        for (const auto& [p, c] : found) {
          const bool legit = (c.loc == kStart && A.from_v == w) ||
                             (c.loc == kEnd && A.edge.other(A.from_v) == w);
          if (!legit) offending.push_back(p);
        }
      } else {
        for (const Rat& th : d.span_hits(A.edge, pw.x)) {
          if (d.arc_radius_at(A.edge, th) != pw.y) continue;
          const bool at_start = th == P.front().x;
          const bool at_end = th == P.back().x;
          const bool legit = (at_start && A.from_v == w) ||
                             (at_end && A.edge.other(A.from_v) == w);
          if (!legit) offending.push_back({th, pw.y});
        }
      }
      for (const Pt& p : offending)
        errors.push_back({ValidationErrorCode::kVertexOnArc, A.edge, std::nullopt, w, {p},
                          "vertex lies on the arc"});
    }
  }
}

void triple_point_check(const Drawing& d, const std::vector<ArcCrossing>& crossings,
                        std::vector<ValidationError>& errors) {
  std::map<Pt, std::vector<int>> by_point;
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
    const Pt key =
        d.mode == Mode::kCylinder ? cyl_canonical(crossings[i].pos_e) : crossings[i].pos_e;
    by_point[key].push_back(i);
  }
  for (const auto& [p, idxs] : by_point) {
    if (idxs.size() < 2) continue;
    std::ostringstream who;
    for (int i : idxs) who << " (" << crossings[i].e.str() << " x " << crossings[i].f.str() << ")";
    errors.push_back({ValidationErrorCode::kTriplePoint, crossings[idxs[0]].e,
                      crossings[idxs[0]].f, std::nullopt, {p},
                      "crossings coincide at one point:" + who.str()});
  }
}

}  // namespace

PairwiseResult pairwise_intersections(const Drawing& d) {
  PairwiseResult res;
  for (const Arc& a : d.arcs) self_check(d, a, res.report.errors);
  const int m = static_cast<int>(d.arcs.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      PairOutcome out;
      process_pair(d, d.arcs[i], d.arcs[j], out);
      for (auto& e : out.errors) res.report.errors.push_back(std::move(e));
      for (auto& x : out.crossings) res.crossings.push_back(std::move(x));
    }
  vertex_on_arc_check(d, res.report.errors);
  triple_point_check(d, res.crossings, res.report.errors);
  return res;
}

ValidationReport validate_simple(const Drawing& d) { return pairwise_intersections(d).report; }

CrossingSet CrossingSet::from_pairs(std::vector<std::pair<EdgeId, EdgeId>> raw) {
  for (auto& pr : raw) {
    if (pr.second < pr.first) std::swap(pr.first, pr.second);
    if (pr.first == pr.second) throw Error("crossing pair repeats an edge");
    if (pr.first.adjacent(pr.second)) throw Error("crossing pair shares an endpoint");
  }
  std::sort(raw.begin(), raw.end());
  if (std::adjacent_find(raw.begin(), raw.end()) != raw.end())
    throw Error("duplicate crossing pair");
  CrossingSet cs;
  cs.pairs = std::move(raw);
  return cs;
}

bool CrossingSet::crosses(const EdgeId& a, const EdgeId& b) const {
  std::pair<EdgeId, EdgeId> key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  return std::binary_search(pairs.begin(), pairs.end(), key);
}

int CrossingSet::count_in_quad(int a, int b, int c, int dd) const {
  int q[4] = {a, b, c, dd};
  std::sort(q, q + 4);
  int total = 0;
  total += crosses(EdgeId(q[0], q[1]), EdgeId(q[2], q[3]));
  total += crosses(EdgeId(q[0], q[2]), EdgeId(q[1], q[3]));
  total += crosses(EdgeId(q[0], q[3]), EdgeId(q[1], q[2]));
  return total;
}

CrossingSet crossing_set(const Drawing& d, const PairwiseResult& pw) {
  if (!pw.report.ok()) throw Error("crossing set of an invalid drawing");
  std::vector<std::pair<EdgeId, EdgeId>> raw;
  raw.reserve(pw.crossings.size());
  for (const auto& x : pw.crossings) raw.emplace_back(x.e, x.f);
  return CrossingSet::from_pairs(std::move(raw));
}

CrossingSet crossing_set(const Drawing& d) { return crossing_set(d, pairwise_intersections(d)); }

RotationSystem rotation_system(const Drawing& d) {
  RotationSystem rs;
  rs.rot.resize(d.n);
  for (int v = 1; v <= d.n; ++v) {
    struct Out {
      int to;
      Pt dir;
    };
    std::vector<Out> outs;
    for (int w = 1; w <= d.n; ++w) {
      if (w == v) continue;
      const Arc& a = d.arc(EdgeId(v, w));
      const auto& P = a.polyline;
      Pt dir = a.from_v == v
                   ? Pt{P[1].x - P[0].x, P[1].y - P[0].y}
                   : Pt{P[P.size() - 2].x - P.back().x, P[P.size() - 2].y - P.back().y};
      outs.push_back({w, std::move(dir)});
    }
    for (size_t i = 0; i < outs.size(); ++i)
      for (size_t j = i + 1; j < outs.size(); ++j)
        if (dir_equal(outs[i].dir, outs[j].dir))
          throw AmbiguousRotationError("arcs " + std::to_string(outs[i].to) + " and " +
                                       std::to_string(outs[j].to) +
                                       " leave vertex " + std::to_string(v) +
                                       " in the same direction");
    std::sort(outs.begin(), outs.end(),
              [](const Out& x, const Out& y) { return dir_ccw_less(x.dir, y.dir); });
    auto& cyc = rs.rot[v - 1];
    for (const auto& o : outs) cyc.push_back(o.to);
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
  }
  return rs;
}

bool RotationSystem::consecutive(int x, int y, int z) const {
  const auto& cyc = rot[x - 1];
  const int len = static_cast<int>(cyc.size());
  int iy = -1, iz = -1;
  for (int i = 0; i < len; ++i) {
    if (cyc[i] == y) iy = i;
    if (cyc[i] == z) iz = i;
  }
  if (iy < 0 || iz < 0) throw Error("vertex not in rotation");
  return (iy + 1) % len == iz || (iz + 1) % len == iy;
}

}  // namespace gtdraw
