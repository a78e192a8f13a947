#pragma once

#include "trop/cone.hpp"

namespace trop {

// The combinatorial input: n support sets in Z^d with their Newton
// polytopes and the Minkowski sum P = P_1 + ... + P_n cached.
struct SupportSystem {
  int dim = 0;
  std::vector<std::vector<IntVec>> supports;
  std::vector<LatticePolytope> polytopes;
  LatticePolytope sum_polytope;

  int n() const { return (int)supports.size(); }
};

SupportSystem make_support_system(int dim, const std::vector<std::vector<IntVec>>& supports);

// Tropicalization of the map: coordinate i is the support function of
// P_i at w.  Piecewise linear, linear on every normal-fan cone of P.
RatVec psi(const SupportSystem& sys, const RatVec& w);
IntVec psi_int(const SupportSystem& sys, const IntVec& w);

// True iff for every K subseteq J the face of P_K at w has dimension at
// least |K|; the solvability criterion for the initial system at (w, J).
bool is_solvable(const SupportSystem& sys, const RatVec& w, const std::vector<int>& J);

// A maximal building block of the tropical variety: a normal-fan cone C
// together with an index set J, with dim C + |J| = d and the cone
// psi(C) + R^J_{>=0} of full dimension d in R^n.
struct TropicalPair {
  Cone normal_cone;          // C, a cone of the normal fan of P
  std::vector<int> J;        // 0-based indices into the supports
  RatVec witness;            // a point in relint(C)
  Int index;                 // index(C, J)
  Int mv;                    // mixed volume of the J-faces (1 for empty J)
  Cone cone;                 // psi(C) + R^J_{>=0} in R^n
  IntMat span_basis;         // saturated basis of the cone's span in Z^n
  Int weight() const { return index * mv; }
};

struct TropicalCycle {
  SupportSystem system;
  std::vector<TropicalPair> pairs;

  int ambient() const { return system.n(); }
  int dim() const { return system.dim; }
};

TropicalCycle enumerate_cone_pairs(const SupportSystem& sys);

// Linear extension of psi on the span of a normal-fan cone, evaluated at
// an integer vector of that span.
IntVec psi_linear_on_cone(const SupportSystem& sys, const Cone& c, const IntVec& b);

// index(C, J): index of the lattice generated by psi(C cap Z^d) + Z^J
// inside its saturation in Z^n.
Int pair_index(const SupportSystem& sys, const Cone& c, const std::vector<int>& J);

struct MultiplicityResult {
  enum Status { Ok, NotOnCycle, NonSmooth } status;
  Int value;                 // valid when status == Ok
  std::vector<int> covering; // indices into cycle.pairs
};

// Sum of scaled mixed volumes over the pairs covering gamma.  gamma must
// be a smooth point: in the relative interior of every pair cone that
// contains it, with all covering spans equal.
MultiplicityResult multiplicity_at(const TropicalCycle& cycle, const RatVec& gamma);

// Hypersurface criterion: some choice a_i in A_i gives a d x (d+1)
// matrix of rank d.  Requires n = d + 1.
bool is_hypersurface(const SupportSystem& sys);

}  // namespace trop
