#pragma once

#include "trop/polytope.hpp"

namespace trop {

enum class ConePosition { Outside, Boundary, Interior };

// Polyhedral cone given by primitive ray generators plus a lineality
// basis.  Geometry (span, facets in span coordinates) is computed once at
// construction; instances are immutable.
class Cone {
 public:
  Cone() = default;
  static Cone make(int ambient_dim, const std::vector<IntVec>& rays, const IntMat& lineality);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return (int)span_basis_.size(); }
  const std::vector<IntVec>& rays() const { return rays_; }
  const IntMat& lineality() const { return lineality_; }
  const IntMat& span_basis() const { return span_basis_; }

  // Classifies a point against the cone: outside, on the relative
  // boundary, or in the relative interior.
  ConePosition classify(const RatVec& x) const;
  bool contains(const RatVec& x) const { return classify(x) != ConePosition::Outside; }
  bool contains_ray(const IntVec& r) const { return contains(to_rat(r)); }

  // Coordinates in the span basis, if the point lies in the span.
  std::optional<RatVec> span_coords(const RatVec& x) const;
  const std::vector<IntVec>& proj_facets() const { return facet_normals_proj_; }

 private:
  int ambient_dim_ = 0;
  std::vector<IntVec> rays_;       // primitive, sorted
  IntMat lineality_;               // canonical HNF basis
  IntMat span_basis_;              // saturated basis of the linear span
  std::vector<IntVec> facet_normals_proj_;  // a . xi >= 0 in span coords
};

struct FanCone {
  std::vector<int> face_vertex_indices;  // face of the polytope (indices)
  int face_dim;
  Cone cone;
};

// Complete (inner) normal fan: one cone per nonempty face, the cone of
// face F being all w minimized exactly on F.
struct NormalFan {
  LatticePolytope polytope;
  std::vector<FanCone> cones;
};

NormalFan normal_fan(const LatticePolytope& p);

}  // namespace trop
