#include "gtdraw/sweep.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace gtdraw {

SweepEvent vert_event(int vertex, std::vector<EdgeId> depart, std::optional<int> rank) {
  SweepEvent e;
  e.kind = SweepEvent::Kind::kVert;
  e.vertex = vertex;
  e.depart = std::move(depart);
  e.rank = rank;
  return e;
}

SweepEvent cross_event(EdgeId a, EdgeId b) {
  SweepEvent e;
  e.kind = SweepEvent::Kind::kCross;
  if (b < a) std::swap(a, b);
  e.a = a;
  e.b = b;
  return e;
}

std::string to_string(SweepErrorCode c) {
  switch (c) {
    case SweepErrorCode::kVertOrder: return "VERT_ORDER";
    case SweepErrorCode::kNoncontiguousArrival: return "NONCONTIGUOUS_ARRIVAL";
    case SweepErrorCode::kNonadjacentSwap: return "NONADJACENT_SWAP";
    case SweepErrorCode::kAdjacentPairCrosses: return "ADJACENT_PAIR_CROSSES";
    case SweepErrorCode::kPairCrossesTwice: return "PAIR_CROSSES_TWICE";
    case SweepErrorCode::kClosureMismatch: return "CLOSURE_MISMATCH";
  }
  return "?";
}

namespace {

void structural_check(const SweepWord& w) {
  if (w.n < 3) throw SchemaError("sweep word needs n >= 3");
  {
    auto sorted = w.pi0;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != all_edges(w.n)) throw SchemaError("pi0 must list every edge exactly once");
  }
  std::vector<char> seen(w.n + 1, 0);
  int verts = 0;
  for (const SweepEvent& ev : w.events) {
    if (ev.kind == SweepEvent::Kind::kVert) {
      if (ev.vertex < 1 || ev.vertex > w.n) throw SchemaError("vertex label out of range");
      if (seen[ev.vertex]) throw SchemaError("repeated vertex event: " + std::to_string(ev.vertex));
      seen[ev.vertex] = 1;
      ++verts;
      std::vector<EdgeId> want;
      for (int k = 1; k < ev.vertex; ++k) want.emplace_back(k, ev.vertex);
      auto got = ev.depart;
      std::sort(got.begin(), got.end());
      if (got != want)
        throw SchemaError("departure list of vertex " + std::to_string(ev.vertex) +
                          " must contain exactly its edges to smaller vertices");
      if (ev.vertex == w.n) {
        if (!ev.rank) throw SchemaError("the last vertex event needs an insertion rank");
        if (*ev.rank < 0) throw SchemaError("negative insertion rank");
      } else if (ev.rank) {
        throw SchemaError("insertion rank belongs on the last vertex only");
      }
    } else {
      if (ev.a.v > w.n || ev.b.v > w.n) throw SchemaError("crossing event names an edge out of range");
      if (ev.a == ev.b) throw SchemaError("crossing event repeats an edge");
    }
  }
  if (verts != w.n) throw SchemaError("expected exactly one vertex event per vertex");
}

struct Replay {
  SweepReport report;
  // ranks[k][edge_index]: 0-based radial position after the first k events,
  // innermost = 0; -1 while the edge is not active. Filled when requested.
  std::vector<std::vector<int>> ranks;
  std::vector<int> vert_event_of;  // [v-1] -> event index
  std::vector<int> vert_block;     // [event] -> 0-based block start / insertion point
};

// Pre: structural_check passed.
Replay run_replay(const SweepWord& w, bool want_ranks) {
  Replay r;
  r.vert_event_of.assign(w.n, -1);
  r.vert_block.assign(w.events.size(), -1);
  std::vector<EdgeId> active = w.pi0;
  auto snapshot = [&] {
    if (!want_ranks) return;
    std::vector<int> rk(edge_count(w.n), -1);
    for (int t = 0; t < static_cast<int>(active.size()); ++t) rk[edge_index(active[t], w.n)] = t;
    r.ranks.push_back(std::move(rk));
  };
  snapshot();
  std::set<std::pair<EdgeId, EdgeId>> crossed;
  int expect = 1;
  auto fail = [&](SweepErrorCode c, int idx, std::string detail) {
    r.report.issue = SweepIssue{c, idx, std::move(detail)};
  };
  for (int idx = 0; idx < static_cast<int>(w.events.size()); ++idx) {
    const SweepEvent& ev = w.events[idx];
    if (ev.kind == SweepEvent::Kind::kVert) {
      if (ev.vertex != expect) {
        fail(SweepErrorCode::kVertOrder, idx,
             "vertex " + std::to_string(ev.vertex) + " where vertex " + std::to_string(expect) +
                 " was due");
        return r;
      }
      ++expect;
      int lo = -1, hi = -1, cnt = 0;
      for (int t = 0; t < static_cast<int>(active.size()); ++t) {
        if (active[t].u == ev.vertex) {
          if (lo < 0) lo = t;
          hi = t;
          ++cnt;
        }
      }
      if (cnt != w.n - ev.vertex) throw Error("internal: arriving edge went missing");
      int p;
      if (cnt == 0) {
        p = *ev.rank;
        if (p > static_cast<int>(active.size())) throw SchemaError("insertion rank out of range");
      } else {
        if (hi - lo + 1 != cnt) {
          fail(SweepErrorCode::kNoncontiguousArrival, idx,
               "edges arriving at vertex " + std::to_string(ev.vertex) +
                   " are not radially consecutive");
          return r;
        }
        active.erase(active.begin() + lo, active.begin() + lo + cnt);
        p = lo;
      }
      active.insert(active.begin() + p, ev.depart.begin(), ev.depart.end());
      r.vert_block[idx] = p;
      r.vert_event_of[ev.vertex - 1] = idx;
    } else {
      int ia = -1, ib = -1;
      for (int t = 0; t < static_cast<int>(active.size()); ++t) {
        if (active[t] == ev.a) ia = t;
        if (active[t] == ev.b) ib = t;
      }
      if (ia < 0 || ib < 0) {
        fail(SweepErrorCode::kNonadjacentSwap, idx,
             "edge " + (ia < 0 ? ev.a : ev.b).str() + " is not active here");
        return r;
      }
      if (ev.a.adjacent(ev.b)) {
        fail(SweepErrorCode::kAdjacentPairCrosses, idx,
             "edges " + ev.a.str() + " and " + ev.b.str() + " share an endpoint");
        return r;
      }
      if (ia > ib) std::swap(ia, ib);
      if (ib - ia != 1) {
        fail(SweepErrorCode::kNonadjacentSwap, idx,
             "edges " + ev.a.str() + " and " + ev.b.str() + " are not radially adjacent");
        return r;
      }
      const std::pair<EdgeId, EdgeId> key = std::minmax(ev.a, ev.b);
      if (!crossed.insert(key).second) {
        fail(SweepErrorCode::kPairCrossesTwice, idx,
             "edges " + ev.a.str() + " and " + ev.b.str() + " cross a second time");
        return r;
      }
      std::swap(active[ia], active[ib]);
    }
    snapshot();
  }
  if (active != w.pi0)
    fail(SweepErrorCode::kClosureMismatch, -1,
         "the radial order after a full turn does not match pi0");
  return r;
}

Rat frac(const Rat& x) { return x - x.floor(); }

}  // namespace

SweepReport validate_sweep_word(const SweepWord& w) {
  structural_check(w);
  return run_replay(w, false).report;
}

CrossingSet word_crossing_set(const SweepWord& w) {
  std::vector<std::pair<EdgeId, EdgeId>> raw;
  for (const SweepEvent& ev : w.events)
    if (ev.kind == SweepEvent::Kind::kCross) raw.push_back(std::minmax(ev.a, ev.b));
  return CrossingSet::from_pairs(std::move(raw));
}

Drawing realize(const SweepWord& w) {
  structural_check(w);
  Replay rp = run_replay(w, true);
  if (!rp.report.ok()) {
    const SweepIssue& is = *rp.report.issue;
    throw Error("cannot realize an invalid sweep word: " + to_string(is.code) + " (" + is.detail +
                ")");
  }
  const int m = static_cast<int>(w.events.size());
  const long den = m + 1;
  auto S = [&](int t) { return Rat(t + 1, den); };  // angle of 0-based event t
  const Rat delta(1, 4 * den);

  std::vector<Pt> vpos(w.n);
  std::vector<Rat> vrad(w.n);
  for (int v = 1; v <= w.n; ++v) {
    const int t = rp.vert_event_of[v - 1];
    // Half-integer radius just inside the arriving block; integer radii are
    // taken by the sampled arcs.
    vrad[v - 1] = Rat(rp.vert_block[t]) + Rat(1, 2);
    vpos[v - 1] = Pt{S(t), vrad[v - 1]};
  }

  auto rank_after = [&](int t, const EdgeId& e) {  // t = -1: before any event
    const int rk = rp.ranks[t + 1][edge_index(e, w.n)];
    if (rk < 0) throw Error("internal: sampled an inactive edge");
    return Rat(rk + 1);
  };
  auto put = [](std::vector<Pt>& pl, Pt p) {
    while (pl.size() >= 2 && orient(pl[pl.size() - 2], pl[pl.size() - 1], p) == Orient::kCollinear)
      pl.pop_back();
    pl.push_back(std::move(p));
  };

  std::vector<Arc> arcs;
  arcs.reserve(edge_count(w.n));
  for (const EdgeId& e : all_edges(w.n)) {
    const int birth = rp.vert_event_of[e.v - 1];
    const int death = rp.vert_event_of[e.u - 1];
    std::vector<Pt> pl;
    pl.push_back(Pt{S(birth), vrad[e.v - 1]});
    put(pl, Pt{S(birth) + delta, rank_after(birth, e)});
    for (int t = birth + 1; t < m; ++t) {
      put(pl, Pt{S(t) - delta, rank_after(t - 1, e)});
      put(pl, Pt{S(t) + delta, rank_after(t, e)});
    }
    put(pl, Pt{Rat(1), rank_after(m - 1, e)});
    for (int t = 0; t < death; ++t) {
      put(pl, Pt{Rat(1) + S(t) - delta, rank_after(t - 1, e)});
      put(pl, Pt{Rat(1) + S(t) + delta, rank_after(t, e)});
    }
    put(pl, Pt{Rat(1) + S(death) - delta, rank_after(death - 1, e)});
    put(pl, Pt{Rat(1) + S(death), vrad[e.u - 1]});
    arcs.push_back(Arc{e, std::move(pl), true});
  }
  return Drawing::make(w.n, Mode::kCylinder, std::move(vpos), std::move(arcs));
}

GtVerdict validate_gt(const Drawing& d) {
  if (d.mode != Mode::kCylinder)
    throw ModeMismatchError("generalized-twisted verdict needs a CYLINDER drawing");
  for (const Arc& a : d.arcs) {
    auto [lo, hi] = d.arc_span(a.edge);
    if (!(hi - lo < Rat(1)))
      return {false, "edge " + a.edge.str() + " spans a full turn (not c-monotone)", {}};
  }
  // A common point of finitely many closed angular windows, if any, can be
  // found among the window endpoints.
  std::vector<Rat> cands;
  for (const Arc& a : d.arcs) {
    auto [lo, hi] = d.arc_span(a.edge);
    cands.push_back(frac(lo));
    cands.push_back(frac(hi));
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const Rat& cand : cands) {
    bool all = true;
    for (const Arc& a : d.arcs) {
      auto [lo, hi] = d.arc_span(a.edge);
      if (frac(cand - lo) > hi - lo) {
        all = false;
        break;
      }
    }
    if (all) return {true, "", cand};
  }
  return {false, "no ray from the center meets every edge exactly once", {}};
}

SweepWord extract_sweep_word(const Drawing& d) {
  if (d.mode != Mode::kCylinder)
    throw ModeMismatchError("sweep extraction needs a CYLINDER drawing");
  PairwiseResult pw = pairwise_intersections(d);
  if (!pw.report.ok()) throw Error("sweep extraction needs a valid simple drawing");
  GtVerdict gt = validate_gt(d);
  if (!gt.is_gt) throw Error("not a generalized-twisted drawing: " + gt.reason);

  struct Ev {
    Rat angle;  // canonical, in [0,1)
    bool is_vert;
    int vertex;
    const ArcCrossing* cross;
  };
  std::vector<Ev> evs;
  for (int v = 1; v <= d.n; ++v) evs.push_back({d.vpos(v).x, true, v, nullptr});
  for (const ArcCrossing& c : pw.crossings) evs.push_back({frac(c.pos_e.x), false, 0, &c});
  std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) { return a.angle < b.angle; });
  for (size_t i = 1; i < evs.size(); ++i) {
    if (evs[i - 1].angle == evs[i].angle) {
      auto what = [](const Ev& e) {
        return e.is_vert ? "vertex " + std::to_string(e.vertex)
                         : "crossing " + e.cross->e.str() + " x " + e.cross->f.str();
      };
      throw CoincidentAnglesError("events at the same angle " + evs[i].angle.str() + ": " +
                                  what(evs[i - 1]) + " and " + what(evs[i]));
    }
  }

  // A ray through no event, chosen so the vertex labels come out in sweep
  // order; candidates are midpoints of consecutive event angles.
  const int ne = static_cast<int>(evs.size());
  std::vector<Rat> cands;
  for (int i = 0; i < ne; ++i) {
    const Rat a = evs[i].angle;
    const Rat b = i + 1 < ne ? evs[i + 1].angle : evs[0].angle + Rat(1);
    cands.push_back(frac((a + b) / Rat(2)));
  }
  std::sort(cands.begin(), cands.end());
  auto inside_all = [&](const Rat& cand) {
    for (const Arc& a : d.arcs) {
      auto [lo, hi] = d.arc_span(a.edge);
      const Rat fm = frac(cand - lo);
      if (!(fm.sgn() > 0 && fm < hi - lo)) return false;
    }
    return true;
  };
  std::optional<Rat> ray;
  for (const Rat& cand : cands) {
    if (!inside_all(cand)) continue;
    // Vertex labels met in increasing key order from the candidate ray.
    std::vector<std::pair<Rat, int>> keyed;
    for (const Ev& e : evs)
      if (e.is_vert) keyed.emplace_back(frac(e.angle - cand), e.vertex);
    std::sort(keyed.begin(), keyed.end());
    bool ordered = true;
    for (int i = 0; i < static_cast<int>(keyed.size()); ++i)
      if (keyed[i].second != i + 1) ordered = false;
    if (ordered) {
      ray = cand;
      break;
    }
  }
  if (!ray) throw Error("no ray reads the vertex labels in sweep order");

  SweepWord w;
  w.n = d.n;
  {
    std::vector<std::pair<Rat, EdgeId>> by_radius;
    for (const Arc& a : d.arcs) {
      auto [lo, hi] = d.arc_span(a.edge);
      by_radius.emplace_back(d.arc_radius_at(a.edge, lo + frac(*ray - lo)), a.edge);
    }
    std::sort(by_radius.begin(), by_radius.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < by_radius.size(); ++i)
      if (by_radius[i - 1].first == by_radius[i].first)
        throw Error("two edges at the same radius on the ray");
    for (auto& [r, e] : by_radius) w.pi0.push_back(e);
  }

  std::vector<std::pair<Rat, const Ev*>> sorted;  // (key from the ray, event)
  for (const Ev& e : evs) sorted.emplace_back(frac(e.angle - *ray), &e);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (int i = 0; i < ne; ++i) {
    const Ev& e = *sorted[i].second;
    if (!e.is_vert) {
      w.events.push_back(cross_event(e.cross->e, e.cross->f));
      continue;
    }
    const int v = e.vertex;
    std::vector<EdgeId> departing;
    for (const Arc& a : d.arcs) {
      if (!a.edge.contains(v)) continue;
      auto [lo, hi] = d.arc_span(a.edge);
      if (frac(lo) == e.angle) departing.push_back(a.edge);
    }
    {
      std::vector<EdgeId> want;
      for (int k = 1; k < v; ++k) want.emplace_back(k, v);
      auto got = departing;
      std::sort(got.begin(), got.end());
      if (got != want) throw Error("an edge departs at its smaller endpoint");
    }
    const Rat next_key = i + 1 < ne ? sorted[i + 1].first : Rat(1);
    const Rat half_gap = (next_key - sorted[i].first) / Rat(2);
    std::vector<std::pair<Rat, EdgeId>> by_radius;
    for (const EdgeId& de : departing) {
      auto [lo, hi] = d.arc_span(de);
      by_radius.emplace_back(d.arc_radius_at(de, lo + half_gap), de);
    }
    std::sort(by_radius.begin(), by_radius.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t t = 1; t < by_radius.size(); ++t)
      if (by_radius[t - 1].first == by_radius[t].first)
        throw Error("two departing edges at the same radius");
    std::vector<EdgeId> depart;
    for (auto& [r, de] : by_radius) depart.push_back(de);
    std::optional<int> rank;
    if (v == d.n) {
      int below = 0;
      for (const Arc& a : d.arcs) {
        if (a.edge.contains(v)) continue;
        auto [lo, hi] = d.arc_span(a.edge);
        const Rat fm = frac(e.angle - lo);
        if (!(fm.sgn() > 0 && fm < hi - lo)) continue;
        const Rat r = d.arc_radius_at(a.edge, lo + fm);
        if (r == d.vpos(v).y) throw Error("an edge at the same radius as a vertex");
        if (r < d.vpos(v).y) ++below;
      }
      rank = below;
    }
    w.events.push_back(vert_event(v, std::move(depart), rank));
  }
  return w;
}

RadialSide radial_side(const Drawing& d, const std::array<int, 3>& tri, int w) {
  if (d.mode != Mode::kCylinder)
    throw ModeMismatchError("radial side needs a CYLINDER drawing");
  if (tri[0] == tri[1] || tri[0] == tri[2] || tri[1] == tri[2])
    throw Error("triangle corners must be distinct");
  for (int c : tri)
    if (c < 1 || c > d.n) throw Error("triangle corner out of range");
  if (w < 1 || w > d.n) throw Error("probe vertex out of range");
  if (w == tri[0] || w == tri[1] || w == tri[2])
    throw DegenerateRadiusError("vertex " + std::to_string(w) + " is a corner of the triangle");
  const Rat tw = d.vpos(w).x;
  const Rat rw = d.vpos(w).y;
  int below = 0;
  const EdgeId sides[3] = {EdgeId(tri[0], tri[1]), EdgeId(tri[1], tri[2]),
                           EdgeId(tri[0], tri[2])};
  for (const EdgeId& e : sides) {
    auto [lo, hi] = d.arc_span(e);
    // Half-open span [lo, hi): a corner shared by two sides is counted once.
    for (Rat th = tw + (lo - tw).ceil(); th < hi; th += Rat(1)) {
      const Rat r = d.arc_radius_at(e, th);
      if (r == rw)
        throw DegenerateRadiusError("triangle side " + e.str() + " at the same radius as vertex " +
                                    std::to_string(w));
      if (r < rw) ++below;
    }
  }
  return below % 2 == 0 ? RadialSide::kOSide : RadialSide::kZSide;
}

}  // namespace gtdraw
