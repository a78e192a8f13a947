#include "trop/cone.hpp"

#include <algorithm>
#include <set>

namespace trop {

Cone Cone::make(int ambient_dim, const std::vector<IntVec>& rays, const IntMat& lineality) {
  Cone c;
  c.ambient_dim_ = ambient_dim;
  std::set<IntVec> rset;
  for (const auto& r : rays) {
    IntVec p = primitive(r);
    if (!is_zero(p)) rset.insert(p);
  }
  c.rays_.assign(rset.begin(), rset.end());
  c.lineality_ = hnf_rows(lineality);

  IntMat gens = c.lineality_;
  for (const auto& r : c.rays_) gens.push_back(r);
  c.span_basis_ = saturated_basis(gens, ambient_dim);
  int k = (int)c.span_basis_.size();
  if (k == 0) return c;

  // Span coordinates of the generators.
  auto coords = [&](const IntVec& v) {
    RatMat a((size_t)ambient_dim, RatVec((size_t)k));
    for (int i = 0; i < ambient_dim; ++i)
      for (int j = 0; j < k; ++j) a[(size_t)i][(size_t)j] = Rat(c.span_basis_[(size_t)j][(size_t)i]);
    LinearSolve s = solve_rational(a, to_rat(v));
    return rat_to_int(s.solution);
  };
  std::vector<IntVec> ray_xi, lin_xi;
  for (const auto& r : c.rays_) ray_xi.push_back(coords(r));
  for (const auto& l : c.lineality_) lin_xi.push_back(coords(l));

  // Facets: hyperplanes through 0 spanned by dim-1 generators with all
  // rays on one side and the lineality contained.
  std::vector<IntVec> all_gens = ray_xi;
  for (const auto& l : lin_xi) all_gens.push_back(l);
  std::set<IntVec> facets;
  size_t m = all_gens.size();
  int need = k - 1;
  std::vector<int> comb((size_t)std::max(need, 0));
  for (int i = 0; i < need; ++i) comb[(size_t)i] = i;
  bool any = need == 0 || (int)m >= need;
  while (any) {
    IntMat dirs;
    for (int i = 0; i < need; ++i) dirs.push_back(all_gens[(size_t)comb[(size_t)i]]);
    if (need == 0 || rank_rational(dirs) == need) {
      IntMat kern = integer_kernel(dirs, k);
      if (kern.size() == 1) {
        IntVec a = primitive(kern[0]);
        bool above = false, below = false;
        for (const auto& g : ray_xi) {
          Int s = dot(a, g);
          if (s > 0) above = true;
          if (s < 0) below = true;
        }
        for (const auto& g : lin_xi) {
          if (dot(a, g) != 0) {  // lineality must lie on every facet
            above = below = true;
            break;
          }
        }
        if (!(above && below)) {
          if (below) a = neg(a);
          facets.insert(a);
        }
      }
    }
    if (need == 0) break;
    int i = need - 1;
    while (i >= 0 && comb[(size_t)i] == (int)m - need + i) --i;
    if (i < 0) break;
    ++comb[(size_t)i];
    for (int j = i + 1; j < need; ++j) comb[(size_t)j] = comb[(size_t)j - 1] + 1;
  }
  c.facet_normals_proj_.assign(facets.begin(), facets.end());
  return c;
}

std::optional<RatVec> Cone::span_coords(const RatVec& x) const {
  int k = dim();
  RatMat a((size_t)ambient_dim_, RatVec((size_t)k));
  for (int i = 0; i < ambient_dim_; ++i)
    for (int j = 0; j < k; ++j) a[(size_t)i][(size_t)j] = Rat(span_basis_[(size_t)j][(size_t)i]);
  LinearSolve s = solve_rational(a, x);
  if (s.kind == LinearSolve::Inconsistent) return std::nullopt;
  return s.solution;
}

ConePosition Cone::classify(const RatVec& x) const {
  if ((int)x.size() != ambient_dim_) throw std::invalid_argument("Cone::classify: dimension");
  if (dim() == 0) {
    return is_zero(x) ? ConePosition::Interior : ConePosition::Outside;
  }
  auto xi = span_coords(x);
  if (!xi) return ConePosition::Outside;
  bool boundary = false;
  for (const auto& a : facet_normals_proj_) {
    Rat s = dot(to_rat(a), *xi);
    if (s < 0) return ConePosition::Outside;
    if (s == 0) boundary = true;
  }
  return boundary ? ConePosition::Boundary : ConePosition::Interior;
}

NormalFan normal_fan(const LatticePolytope& p) {
  NormalFan fan;
  fan.polytope = p;
  int d = p.ambient_dim();

  IntMat lineality;
  for (const auto& e : p.equations()) lineality.push_back(e.normal);
  lineality = hnf_rows(lineality);

  for (const auto& face : all_faces(p)) {
    std::vector<IntVec> rays;
    for (size_t fi = 0; fi < p.facets().size(); ++fi) {
      const auto& fv = p.facet_vertex_sets()[fi];
      bool contains_face = std::includes(fv.begin(), fv.end(), face.vertex_indices.begin(),
                                         face.vertex_indices.end());
      if (contains_face) rays.push_back(p.facets()[fi].normal);
    }
    Cone c = Cone::make(d, rays, lineality);
    if (c.dim() != d - face.dim) throw std::logic_error("normal_fan: cone dimension mismatch");
    fan.cones.push_back({face.vertex_indices, face.dim, std::move(c)});
  }
  return fan;
}

}  // namespace trop
