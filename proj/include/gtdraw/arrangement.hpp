#pragma once

#include <array>
#include <utility>
#include <vector>

#include "gtdraw/drawing.hpp"

namespace gtdraw {

// Node of a planarization: a drawing vertex or a crossing point.
struct ArrNode {
  bool is_vertex = false;
  int vertex = 0;                   // 1-based, when is_vertex
  std::pair<EdgeId, EdgeId> cross;  // when a crossing
  Pt pos;                           // canonical coordinates
};

// Maximal piece of an arc between consecutive nodes, oriented along the arc.
struct ArrPiece {
  EdgeId edge;
  int node_a = 0, node_b = 0;
  std::vector<Pt> pts;  // unrolled coordinates, >= 2 points
};

// Planarization of a valid drawing on its closed surface: the plane plus the
// point at infinity, or the cylinder closed off by its two ends O (radius 0)
// and Z (radius infinity). Faces are orbits of "reverse, then rotate"; the
// face of a dart lies to the dart's left in the chart. Darts 2p and 2p+1 are
// piece p traversed forward and backward.
struct Arrangement {
  Mode mode = Mode::kPlane;
  int n = 0;
  std::vector<ArrNode> nodes;  // node v-1 is vertex v; crossings follow
  std::vector<ArrPiece> pieces;
  std::vector<std::vector<int>> node_darts;  // outgoing darts, CCW per node
  std::vector<int> dart_face;
  int num_faces = 0;
  int outer_face = -1;           // PLANE
  int o_face = -1, z_face = -1;  // CYLINDER
  std::vector<Pt> face_rep;      // an interior point of each face

  int piece_count() const { return static_cast<int>(pieces.size()); }
  int dart_count() const { return 2 * piece_count(); }
};

// Pre: validate_simple(d).ok(). Checks Euler's relation internally.
Arrangement planarize(const Drawing& d);
Arrangement planarize(const Drawing& d, const PairwiseResult& pw);

// Two-coloring of the faces across the closed curve formed by the three arcs
// spanned by a vertex triple.
struct SidePartition {
  std::vector<signed char> face_side;    // 0 or 1 per face
  std::vector<signed char> vertex_side;  // [v-1]; -1 for the three corners
  int side_of_outer = -1;                // PLANE
  int side_of_o = -1, side_of_z = -1;    // CYLINDER
};

SidePartition side_partition(const Arrangement& arr, const std::array<int, 3>& tri);

}  // namespace gtdraw
