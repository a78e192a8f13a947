#include "trop/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

namespace {

// Enumerates the facet-defining halfspaces of a full-dimensional point
// configuration in Z^k by checking every k-subset that spans a
// hyperplane.  Every facet contains k affinely independent input points,
// so this finds them all.  Fine at the scale of this library.
std::vector<Halfspace> brute_force_facets(const std::vector<IntVec>& pts, int k) {
  std::set<std::pair<IntVec, Int>> seen;
  std::vector<Halfspace> out;
  size_t m = pts.size();
  std::vector<int> idx((size_t)k);
  // iterate k-subsets
  std::vector<int> c((size_t)k);
  for (int i = 0; i < k; ++i) c[(size_t)i] = i;
  if ((int)m < k) return out;
  while (true) {
    IntMat dirs;
    for (int i = 1; i < k; ++i) dirs.push_back(sub(pts[(size_t)c[(size_t)i]], pts[(size_t)c[0]]));
    bool spans = k == 1 || rank_rational(dirs) == k - 1;
    if (spans) {
      IntMat kern = integer_kernel(dirs, k);
      if (kern.size() == 1) {
        IntVec a = primitive(kern[0]);
        Int b = dot(a, pts[(size_t)c[0]]);
        bool above = false, below = false;
        for (const auto& p : pts) {
          Int s = dot(a, p) - b;
          if (s > 0) above = true;
          if (s < 0) below = true;
          if (above && below) break;
        }
        if (!(above && below)) {
          if (below) {
            a = neg(a);
            b = -b;
          }
          if (seen.insert({a, b}).second) out.push_back({a, b});
        }
      }
    }
    // next combination
    int i = k - 1;
    while (i >= 0 && c[(size_t)i] == (int)m - k + i) --i;
    if (i < 0) break;
    ++c[(size_t)i];
    for (int j = i + 1; j < k; ++j) c[(size_t)j] = c[(size_t)j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [](const Halfspace& x, const Halfspace& y) {
    return x.normal != y.normal ? x.normal < y.normal : x.offset < y.offset;
  });
  return out;
}

// Solves coords * basis = target exactly; asserts integrality.
IntVec lattice_coords(const IntMat& basis, const IntVec& target) {
  size_t k = basis.size();
  size_t d = target.size();
  RatMat a(d, RatVec(k));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < k; ++j) a[i][j] = Rat(basis[j][i]);
  RatVec b = to_rat(target);
  LinearSolve s = solve_rational(a, b);
  if (s.kind == LinearSolve::Inconsistent)
    throw std::logic_error("lattice_coords: point outside span");
  return rat_to_int(s.solution);
}

}  // namespace

LatticePolytope LatticePolytope::hull(const std::vector<IntVec>& points) {
  if (points.empty()) throw std::invalid_argument("hull: empty point list");
  size_t d = points[0].size();
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("hull: dimension mismatch");

  std::vector<IntVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope P;
  P.ambient_dim_ = (int)d;
  P.origin_ = pts[0];

  IntMat dirs;
  for (const auto& p : pts) {
    IntVec v = sub(p, pts[0]);
    if (!is_zero(v)) dirs.push_back(v);
  }
  IntMat eq_normals = integer_kernel(dirs, (int)d);
  for (const auto& a : eq_normals) P.equations_.push_back({a, dot(a, pts[0])});
  P.span_basis_ = saturated_basis(dirs, (int)d);
  int k = (int)P.span_basis_.size();
  P.dim_ = k;

  if (k == 0) {
    P.vertices_ = {pts[0]};
    P.proj_vertices_ = {IntVec{}};
    return P;
  }

  // Work in lattice coordinates of the affine span; the saturated basis
  // makes the projection unimodular onto Z^k, so normalized volumes and
  // lattice lengths are preserved.
  std::vector<IntVec> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) proj.push_back(lattice_coords(P.span_basis_, sub(p, pts[0])));

  std::vector<Halfspace> pfacets = brute_force_facets(proj, k);

  // A point is a vertex iff its active facet normals span R^k.
  std::vector<int> vert_idx;
  for (size_t i = 0; i < proj.size(); ++i) {
    IntMat active;
    for (const auto& f : pfacets)
      if (dot(f.normal, proj[i]) == f.offset) active.push_back(f.normal);
    if ((int)active.size() >= k && rank_rational(active) == k) vert_idx.push_back((int)i);
  }

  std::vector<std::pair<IntVec, IntVec>> vp;  // (ambient vertex, proj)
  for (int i : vert_idx) vp.push_back({pts[(size_t)i], proj[(size_t)i]});
  std::sort(vp.begin(), vp.end());
  for (auto& [v, c] : vp) {
    P.vertices_.push_back(v);
    P.proj_vertices_.push_back(c);
  }
  P.proj_facets_ = pfacets;

  // Lift each facet functional back to the ambient space: the unique
  // (up to scale) functional in the rational row space of the basis whose
  // values on the polytope reproduce the projected functional.
  size_t kk = (size_t)k;
  RatMat gram(kk, RatVec(kk));
  for (size_t i = 0; i < kk; ++i)
    for (size_t j = 0; j < kk; ++j) gram[i][j] = Rat(dot(P.span_basis_[i], P.span_basis_[j]));
  for (const auto& f : pfacets) {
    LinearSolve s = solve_rational(gram, to_rat(f.normal));
    if (s.kind != LinearSolve::Unique) throw std::logic_error("hull: gram solve failed");
    RatVec u(d, Rat(0));
    for (size_t i = 0; i < kk; ++i)
      for (size_t j = 0; j < d; ++j) u[j] += s.solution[i] * Rat(P.span_basis_[i][j]);
    IntVec a = rat_to_primitive_int(u);
    Int b = dot(a, P.vertices_[0]);
    for (const auto& v : P.vertices_) b = std::min(b, dot(a, v));
    P.facets_.push_back({a, b});
    std::vector<int> on;
    for (size_t i = 0; i < P.vertices_.size(); ++i)
      if (dot(f.normal, P.proj_vertices_[i]) == f.offset) on.push_back((int)i);
    P.facet_vertices_.push_back(on);
  }
  return P;
}

bool LatticePolytope::contains(const RatVec& p) const {
  if ((int)p.size() != ambient_dim_) throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(p, e.normal) != Rat(e.offset)) return false;
  for (const auto& f : facets_)
    if (dot(p, f.normal) < Rat(f.offset)) return false;
  if (dim_ == 0) {
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] != Rat(vertices_[0][i])) return false;
  }
  return true;
}

LatticePolytope conv(const std::vector<IntVec>& points) { return LatticePolytope::hull(points); }

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& r) {
  if (p.ambient_dim() != r.ambient_dim())
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<IntVec> sums;
  sums.reserve(p.vertices().size() * r.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : r.vertices()) sums.push_back(add(a, b));
  return conv(sums);
}

LatticePolytope face_in_direction(const LatticePolytope& p, const RatVec& w) {
  if ((int)w.size() != p.ambient_dim())
    throw std::invalid_argument("face_in_direction: dimension mismatch");
  Rat best;
  bool first = true;
  for (const auto& v : p.vertices()) {
    Rat s = dot(w, v);
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  std::vector<IntVec> argmin;
  for (const auto& v : p.vertices())
    if (dot(w, v) == best) argmin.push_back(v);
  return conv(argmin);
}

Rat support_value(const LatticePolytope& p, const RatVec& w) {
  if ((int)w.size() != p.ambient_dim())
    throw std::invalid_argument("support_value: dimension mismatch");
  Rat best;
  bool first = true;
  for (const auto& v : p.vertices()) {
    Rat s = dot(w, v);
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  return best;
}

Int support_value_int(const LatticePolytope& p, const IntVec& w) {
  Int best;
  bool first = true;
  for (const auto& v : p.vertices()) {
    Int s = dot(w, v);
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  return best;
}

namespace {

// Fan triangulation of a full-dimensional polytope given by projected
// vertices; returns index tuples (dim+1 each).
std::vector<std::vector<int>> triangulate(const std::vector<IntVec>& verts, int k) {
  std::vector<std::vector<int>> simplices;
  if (k == 1) {
    int lo = 0, hi = 0;
    for (size_t i = 1; i < verts.size(); ++i) {
      if (verts[i][0] < verts[(size_t)lo][0]) lo = (int)i;
      if (verts[i][0] > verts[(size_t)hi][0]) hi = (int)i;
    }
    simplices.push_back({lo, hi});
    return simplices;
  }
  std::vector<Halfspace> facets = brute_force_facets(verts, k);
  int apex = 0;
  for (size_t i = 1; i < verts.size(); ++i)
    if (verts[i] < verts[(size_t)apex]) apex = (int)i;
  for (const auto& f : facets) {
    if (dot(f.normal, verts[(size_t)apex]) == f.offset) continue;
    std::vector<int> on;
    for (size_t i = 0; i < verts.size(); ++i)
      if (dot(f.normal, verts[i]) == f.offset) on.push_back((int)i);
    // Triangulate the facet in its own lattice coordinates.
    IntMat fdirs;
    for (size_t i = 1; i < on.size(); ++i)
      fdirs.push_back(sub(verts[(size_t)on[i]], verts[(size_t)on[0]]));
    IntMat fbasis = saturated_basis(fdirs, k);
    std::vector<IntVec> fproj;
    for (int i : on) fproj.push_back(lattice_coords(fbasis, sub(verts[(size_t)i], verts[(size_t)on[0]])));
    for (const auto& s : triangulate(fproj, k - 1)) {
      std::vector<int> simplex;
      simplex.push_back(apex);
      for (int local : s) simplex.push_back(on[(size_t)local]);
      simplices.push_back(std::move(simplex));
    }
  }
  return simplices;
}

// dim! * Euclidean volume of a full-dimensional polytope in Z^k.
Int normalized_volume_proj(const std::vector<IntVec>& verts, int k) {
  Int total = 0;
  for (const auto& s : triangulate(verts, k)) {
    IntMat m;
    for (size_t i = 1; i < s.size(); ++i) m.push_back(sub(verts[(size_t)s[i]], verts[(size_t)s[0]]));
    total += boost::multiprecision::abs(det_int(m));
  }
  return total;
}

}  // namespace

Int normalized_volume(const LatticePolytope& p) {
  if (p.dim() <= 0) return 0;
  return normalized_volume_proj(p.proj_vertices(), p.dim());
}

Int mixed_volume(const std::vector<LatticePolytope>& polytopes) {
  size_t k = polytopes.size();
  if (k == 0) return 1;
  int d = polytopes[0].ambient_dim();
  for (const auto& p : polytopes)
    if (p.ambient_dim() != d) throw std::invalid_argument("mixed_volume: dimension mismatch");

  // Subset Minkowski sums, built incrementally over the bitmask lattice.
  std::vector<LatticePolytope> sums((size_t)1 << k);
  for (size_t i = 0; i < k; ++i) sums[(size_t)1 << i] = polytopes[i];
  for (size_t mask = 1; mask < sums.size(); ++mask) {
    size_t low = mask & (~mask + 1);
    if (mask == low) continue;
    sums[mask] = minkowski_sum(sums[mask ^ low], sums[low]);
  }
  const LatticePolytope& total = sums[sums.size() - 1];
  if (total.dim() != (int)k) return 0;

  // Project every subset sum to the lattice coordinates of the full sum's
  // span; translations do not change the mixed volume.
  const IntMat& basis = total.span_basis();
  Rat acc = 0;
  Int factorial = 1;
  for (size_t i = 2; i <= k; ++i) factorial *= (Int)i;
  for (size_t mask = 1; mask < sums.size(); ++mask) {
    const auto& vs = sums[mask].vertices();
    std::vector<IntVec> proj;
    proj.reserve(vs.size());
    for (const auto& v : vs) proj.push_back(lattice_coords(basis, sub(v, vs[0])));
    IntMat dirs;
    for (size_t i = 1; i < proj.size(); ++i) dirs.push_back(sub(proj[i], proj[0]));
    if (dirs.empty() || rank_rational(dirs) < (int)k) continue;  // volume 0
    Int nvol = normalized_volume_proj(proj, (int)k);
    int sign = (k - (size_t)__builtin_popcountll((unsigned long long)mask)) % 2 == 0 ? 1 : -1;
    acc += Rat(sign * nvol) / Rat(factorial);
  }
  if (boost::multiprecision::denominator(acc) != 1)
    throw std::logic_error("mixed_volume: non-integral result");
  return boost::multiprecision::numerator(acc);
}

std::vector<IntVec> lattice_points(const LatticePolytope& p) {
  std::vector<IntVec> out;
  if (p.dim() == 0) {
    out.push_back(p.vertices()[0]);
    return out;
  }
  int k = p.dim();
  const auto& proj = p.proj_vertices();
  IntVec lo = proj[0], hi = proj[0];
  for (const auto& c : proj)
    for (int j = 0; j < k; ++j) {
      lo[(size_t)j] = std::min(lo[(size_t)j], c[(size_t)j]);
      hi[(size_t)j] = std::max(hi[(size_t)j], c[(size_t)j]);
    }
  Int box = 1;
  for (int j = 0; j < k; ++j) box *= hi[(size_t)j] - lo[(size_t)j] + 1;
  if (box > 10000000) throw std::invalid_argument("lattice_points: bounding box too large");

  IntVec cur = lo;
  while (true) {
    bool inside = true;
    for (const auto& f : p.proj_facets())
      if (dot(f.normal, cur) < f.offset) {
        inside = false;
        break;
      }
    if (inside) {
      IntVec pt = p.origin();
      for (int j = 0; j < k; ++j)
        for (size_t c = 0; c < pt.size(); ++c) pt[c] += cur[(size_t)j] * p.span_basis()[(size_t)j][c];
      out.push_back(pt);
    }
    int j = 0;
    while (j < k) {
      if (cur[(size_t)j] < hi[(size_t)j]) {
        ++cur[(size_t)j];
        break;
      }
      cur[(size_t)j] = lo[(size_t)j];
      ++j;
    }
    if (j == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> all_faces(const LatticePolytope& p) {
  size_t nv = p.vertices().size();
  std::vector<int> full(nv);
  for (size_t i = 0; i < nv; ++i) full[i] = (int)i;

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work = {full};
  seen.insert(full);
  // Faces are the nonempty intersections of facet vertex sets.
  while (!work.empty()) {
    std::vector<int> cur = work.back();
    work.pop_back();
    for (const auto& fv : p.facet_vertex_sets()) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), fv.begin(), fv.end(),
                            std::back_inserter(inter));
      if (inter.empty() || inter == cur) continue;
      if (seen.insert(inter).second) work.push_back(inter);
    }
  }
  std::vector<Face> faces;
  for (const auto& s : seen) {
    IntMat dirs;
    for (size_t i = 1; i < s.size(); ++i)
      dirs.push_back(sub(p.vertices()[(size_t)s[i]], p.vertices()[(size_t)s[0]]));
    int dim = dirs.empty() ? 0 : rank_rational(dirs);
    faces.push_back({s, dim});
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertex_indices < b.vertex_indices;
  });
  return faces;
}

std::vector<Int> f_vector(const LatticePolytope& p) {
  std::vector<Int> f((size_t)std::max(p.dim(), 0), 0);
  for (const auto& face : all_faces(p))
    if (face.dim < p.dim()) ++f[(size_t)face.dim];
  return f;
}

IntMat hermite_basis(const IntMat& vectors) { return hnf_rows(vectors); }

}  // namespace trop
