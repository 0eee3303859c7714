#pragma once

#include <vector>

#include "gtdraw/drawing.hpp"

namespace testfix {

using gtdraw::all_edges;
using gtdraw::Arc;
using gtdraw::Drawing;
using gtdraw::EdgeId;
using gtdraw::Mode;
using gtdraw::Pt;
using gtdraw::Rat;

// Straight-line plane drawing on the given vertex positions.
inline Drawing straight(int n, const std::vector<Pt>& pts) {
  std::vector<Arc> arcs;
  for (const EdgeId& e : all_edges(n))
    arcs.push_back({e, {pts[e.u - 1], pts[e.v - 1]}, false});
  return Drawing::make(n, Mode::kPlane, pts, arcs);
}

// Cylinder drawing with vertex i at (i/(n+1), i) and edge {i,j} drawn as a
// straight chart segment from vertex j across the ray to vertex i.
inline Drawing twisted_like(int n) {
  std::vector<Pt> vp;
  for (int i = 1; i <= n; ++i) vp.push_back({Rat(i, n + 1), Rat(i)});
  std::vector<Arc> arcs;
  for (const EdgeId& e : all_edges(n)) {
    Pt from{Rat(e.v, n + 1), Rat(e.v)};
    Pt to{Rat(e.u, n + 1) + Rat(1), Rat(e.u)};
    arcs.push_back({e, {from, to}, true});
  }
  return Drawing::make(n, Mode::kCylinder, vp, arcs);
}

// Convex position, counterclockwise.
inline const std::vector<Pt>& pentagon() {
  static const std::vector<Pt> p = {{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(6), Rat(3)},
                                    {Rat(3), Rat(6)}, {Rat(-1), Rat(3)}};
  return p;
}

}  // namespace testfix
