#pragma once

#include <map>
#include <random>

#include "trop/tropical.hpp"

namespace trop {

struct RayShootHit {
  RatVec point;                 // intersection of the shifted orthant with the cycle
  std::vector<int> pair_ids;    // covering pairs (indices into cycle.pairs)
  Int intrinsic;                // sum of scaled mixed volumes at the point
  Int extrinsic;                // lattice index of Z^S + (span cap Z^n)
  Int contribution;             // intrinsic * extrinsic
};

struct RayShootReport {
  std::vector<int> subset;      // S (0-based coordinate indices)
  RatVec base;                  // v
  std::vector<RayShootHit> hits;
  Int total = 0;
};

// Counts intersections of the cycle with v + R_{>=0}{e_i : i in S},
// weighted by intrinsic times extrinsic multiplicity.  Returns nullopt on
// a genericity failure (hit on a cone boundary, base point on the cycle,
// non-isolated intersection, or disagreeing spans at a hit).
std::optional<RayShootReport> ray_shoot(const TropicalCycle& cycle, const RatVec& v,
                                        const std::vector<int>& subset);

struct OracleResult {
  bool ok = false;
  std::string failure;
  IntVec vertex;
  std::vector<RayShootReport> reports;
};

// Vertex face_v(Q) of the Newton polytope, coordinate i counted by
// shooting the halfline v + R_{>=0} e_i through the cycle.  Requires the
// hypersurface case and a generic v.
OracleResult vertex_oracle(const TropicalCycle& cycle, const RatVec& v);

// Chow polytope vertex at direction v; for codimension one this is
// exactly vertex_oracle.  Codimension > 1 requires homogeneous supports
// of a common degree.
OracleResult chow_vertex(const TropicalCycle& cycle, const RatVec& v);

struct ReconstructedPolytope {
  LatticePolytope polytope;
  std::map<IntVec, RatVec> provenance;  // vertex -> direction that produced it
};

struct ReconstructOptions {
  unsigned long long seed = 0;
  int max_retries = 64;
};

// Oracle-driven hull exploration: seed with near-coordinate directions,
// then query outer facet normals (and affine-hull normals) until no query
// escapes the current hull.  Deterministic for a fixed seed.
ReconstructedPolytope reconstruct_newton(const TropicalCycle& cycle,
                                         const ReconstructOptions& opts = {});

// Total degree of the image: coordinate sum of the Chow vertex in the
// direction minimizing -(1,...,1), i.e. the vertex of maximal coordinate
// sum.  For homogeneous systems every vertex has this coordinate sum.
Int degree(const TropicalCycle& cycle, unsigned long long seed = 0, int max_retries = 64);

// A priori bound on any coordinate of any vertex produced by the oracle.
Int oracle_coordinate_bound(const TropicalCycle& cycle);

}  // namespace trop
