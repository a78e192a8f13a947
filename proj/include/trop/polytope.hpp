#pragma once

#include <memory>
#include <optional>

#include "trop/intlin.hpp"

namespace trop {

// Inequality a.x >= b (inner-normal form) or equation a.x == b.
struct Halfspace {
  IntVec normal;
  Int offset;
};

// Exact lattice polytope with a precomputed hull description.  Immutable
// after construction; safe to share across threads.
class LatticePolytope {
 public:
  LatticePolytope() = default;

  // Convex hull of a nonempty list of lattice points of equal dimension.
  static LatticePolytope hull(const std::vector<IntVec>& points);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const std::vector<IntVec>& vertices() const { return vertices_; }

  // Affine-hull equations (empty for full-dimensional polytopes).
  const std::vector<Halfspace>& equations() const { return equations_; }
  // Facet inequalities lifted to the ambient space; together with the
  // equations these cut out the polytope.  Normals are primitive and lie
  // in the rational span of the polytope's direction space.
  const std::vector<Halfspace>& facets() const { return facets_; }
  // Vertex-index sets per facet, aligned with facets().
  const std::vector<std::vector<int>>& facet_vertex_sets() const { return facet_vertices_; }

  // Lattice-normalized projection data: vertex v corresponds to
  // proj_coords such that v = origin + coords * span_basis.
  const IntVec& origin() const { return origin_; }
  const IntMat& span_basis() const { return span_basis_; }
  const std::vector<IntVec>& proj_vertices() const { return proj_vertices_; }
  const std::vector<Halfspace>& proj_facets() const { return proj_facets_; }

  bool contains(const RatVec& p) const;
  bool contains(const IntVec& p) const { return contains(to_rat(p)); }

  bool operator==(const LatticePolytope& o) const {
    return ambient_dim_ == o.ambient_dim_ && vertices_ == o.vertices_;
  }

 private:
  int ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<IntVec> vertices_;  // lex-sorted; structural equality
  std::vector<Halfspace> equations_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<int>> facet_vertices_;
  IntVec origin_;
  IntMat span_basis_;
  std::vector<IntVec> proj_vertices_;
  std::vector<Halfspace> proj_facets_;
};

// A face of a polytope, tagged with its vertex set.
struct Face {
  std::vector<int> vertex_indices;  // into P.vertices()
  int dim;
};

LatticePolytope conv(const std::vector<IntVec>& points);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& r);
LatticePolytope face_in_direction(const LatticePolytope& p, const RatVec& w);
Rat support_value(const LatticePolytope& p, const RatVec& w);
Int support_value_int(const LatticePolytope& p, const IntVec& w);

// Normalized volume: dim! times the Euclidean volume measured in the
// lattice of the affine span.  Zero for points.
Int normalized_volume(const LatticePolytope& p);

// Normalized mixed volume of k polytopes w.r.t. the saturated lattice of
// the span of their Minkowski sum.  Returns 0 when the sum does not have
// dimension exactly k; the empty list gives 1.
Int mixed_volume(const std::vector<LatticePolytope>& polytopes);

// All points of Z^d in P, lex-sorted.
std::vector<IntVec> lattice_points(const LatticePolytope& p);

// Complete face lattice (all nonempty faces, including P itself),
// sorted by dimension then vertex set.
std::vector<Face> all_faces(const LatticePolytope& p);

// Face counts by dimension 0..dim-1 (vertices, edges, ..., facets).
std::vector<Int> f_vector(const LatticePolytope& p);

// Basis of the lattice generated by the input vectors (integer row span),
// via Hermite normal form.
IntMat hermite_basis(const IntMat& vectors);

}  // namespace trop
