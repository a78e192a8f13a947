#pragma once

#include <string>

#include "trop/tropical.hpp"

namespace trop {

// Embedded graph of a two-dimensional tropical cycle on the unit sphere.
// Nodes are exact rational rays (stored as primitive integer vectors);
// edge weights are the accumulated multiplicities of the covering arcs.
struct SurfaceGraph {
  struct Node {
    IntVec ray;
    std::string label;
  };
  struct Edge {
    int a, b;
    Int weight;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
};

// Requires d = 2 and a two-dimensional Minkowski sum.  Arc weights follow
// the dimension-two rules: gcd of 2x2 minors of (psi(w), psi(w')) divided
// by det(w, w'); edge lattice length times the gcd of the non-i
// coordinates of psi(w); mixed area.  Arcs are subdivided at all pairwise
// intersections and overlapping weights accumulate; degree-two nodes with
// equal weights on a common great circle are dissolved.
SurfaceGraph surface_graph(const TropicalCycle& cycle);

}  // namespace trop
