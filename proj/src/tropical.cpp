#include "trop/tropical.hpp"

#include <algorithm>

namespace trop {

SupportSystem make_support_system(int dim, const std::vector<std::vector<IntVec>>& supports) {
  if (supports.empty()) throw std::invalid_argument("support system: need at least one support");
  SupportSystem sys;
  sys.dim = dim;
  sys.supports = supports;
  for (const auto& a : supports) {
    if (a.empty()) throw std::invalid_argument("support system: empty support");
    for (const auto& pt : a)
      if ((int)pt.size() != dim) throw std::invalid_argument("support system: dimension mismatch");
    sys.polytopes.push_back(conv(a));
  }
  sys.sum_polytope = sys.polytopes[0];
  for (size_t i = 1; i < sys.polytopes.size(); ++i)
    sys.sum_polytope = minkowski_sum(sys.sum_polytope, sys.polytopes[i]);
  return sys;
}

RatVec psi(const SupportSystem& sys, const RatVec& w) {
  if ((int)w.size() != sys.dim) throw std::invalid_argument("psi: dimension mismatch");
  RatVec out;
  out.reserve(sys.polytopes.size());
  for (const auto& p : sys.polytopes) out.push_back(support_value(p, w));
  return out;
}

IntVec psi_int(const SupportSystem& sys, const IntVec& w) {
  if ((int)w.size() != sys.dim) throw std::invalid_argument("psi: dimension mismatch");
  IntVec out;
  out.reserve(sys.polytopes.size());
  for (const auto& p : sys.polytopes) out.push_back(support_value_int(p, w));
  return out;
}

namespace {

// Direction vectors of face_w(P): differences of the minimizing vertices.
IntMat face_directions(const LatticePolytope& p, const RatVec& w) {
  Rat best;
  bool first = true;
  for (const auto& v : p.vertices()) {
    Rat s = dot(w, v);
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  std::vector<const IntVec*> argmin;
  for (const auto& v : p.vertices())
    if (dot(w, v) == best) argmin.push_back(&v);
  IntMat dirs;
  for (size_t i = 1; i < argmin.size(); ++i) dirs.push_back(sub(*argmin[i], *argmin[0]));
  return dirs;
}

}  // namespace

bool is_solvable(const SupportSystem& sys, const RatVec& w, const std::vector<int>& J) {
  for (int j : J)
    if (j < 0 || j >= sys.n()) throw std::invalid_argument("is_solvable: J out of range");
  size_t r = J.size();
  std::vector<IntMat> dirs(r);
  for (size_t i = 0; i < r; ++i) dirs[i] = face_directions(sys.polytopes[(size_t)J[i]], w);
  // Check dim face_w(P_K) >= |K| for all nonempty K; by Minkowski-sum
  // face decomposition the dimension is the rank of the pooled directions.
  for (size_t mask = 1; mask < ((size_t)1 << r); ++mask) {
    IntMat pool;
    int size = 0;
    for (size_t i = 0; i < r; ++i)
      if (mask & ((size_t)1 << i)) {
        ++size;
        pool.insert(pool.end(), dirs[i].begin(), dirs[i].end());
      }
    if (pool.empty() || rank_rational(pool) < size) return false;
  }
  return true;
}

IntVec psi_linear_on_cone(const SupportSystem& sys, const Cone& c, const IntVec& b) {
  // An integer point deep in relint(C): the sum of the primitive rays and
  // the lineality basis vectors.
  IntVec w(b.size(), 0);
  for (const auto& r : c.rays()) w = add(w, r);
  for (const auto& l : c.lineality()) w = add(w, l);
  if (c.classify(to_rat(w)) != ConePosition::Interior)
    throw std::logic_error("psi_linear_on_cone: witness not interior");
  // psi is linear on C, so psi_C(b) = psi(t w + b) - t psi(w) once
  // t w + b lands in C.
  Int t = 1;
  while (c.classify(to_rat(add(scale(w, t), b))) == ConePosition::Outside) t *= 2;
  IntVec lhs = psi_int(sys, add(scale(w, t), b));
  IntVec pw = psi_int(sys, w);
  IntVec out(lhs.size());
  for (size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] - t * pw[i];
  return out;
}

Int pair_index(const SupportSystem& sys, const Cone& c, const std::vector<int>& J) {
  int n = sys.n();
  IntMat gens;
  IntMat cgens = c.lineality();
  for (const auto& r : c.rays()) cgens.push_back(r);
  // The group generated by psi(C cap Z^d) is the image of the saturated
  // span lattice under the linear extension of psi on C.
  IntMat lat = saturated_basis(cgens, sys.dim);
  for (const auto& b : lat) gens.push_back(psi_linear_on_cone(sys, c, b));
  for (int j : J) gens.push_back(unit_vector(n, j));
  if (gens.empty()) throw std::invalid_argument("pair_index: trivial pair");
  return sublattice_index(gens);
}

namespace {

RatVec cone_witness(const Cone& c) {
  IntVec w((size_t)c.ambient_dim(), 0);
  for (const auto& r : c.rays()) w = add(w, r);
  for (const auto& l : c.lineality()) w = add(w, l);
  return to_rat(w);
}

}  // namespace

TropicalCycle enumerate_cone_pairs(const SupportSystem& sys) {
  TropicalCycle cycle;
  cycle.system = sys;
  int d = sys.dim;
  int n = sys.n();
  NormalFan fan = normal_fan(sys.sum_polytope);

  for (const auto& fc : fan.cones) {
    const Cone& c = fc.cone;
    int want = d - c.dim();
    if (want < 0 || want > n) continue;
    RatVec w = cone_witness(c);

    // All J of size d - dim C, in lexicographic order.
    std::vector<int> comb((size_t)want);
    for (int i = 0; i < want; ++i) comb[(size_t)i] = i;
    bool more = want <= n;
    while (more) {
      std::vector<int> J(comb.begin(), comb.end());
      if (is_solvable(sys, w, J)) {
        // Generators of psi(C) + R^J in R^n.
        std::vector<IntVec> rays;
        for (const auto& r : c.rays()) {
          IntVec pr = psi_int(sys, r);
          if (!is_zero(pr)) rays.push_back(pr);
        }
        for (int j : J) rays.push_back(unit_vector(n, j));
        IntMat lin;
        for (const auto& l : c.lineality()) {
          IntVec pl = psi_int(sys, l);
          if (!is_zero(pl)) lin.push_back(pl);
        }
        Cone pair_cone = Cone::make(n, rays, lin);
        if (pair_cone.dim() == d) {
          TropicalPair pair;
          pair.normal_cone = c;
          pair.J = J;
          pair.witness = w;
          pair.mv = 1;
          if (!J.empty()) {
            std::vector<LatticePolytope> faces;
            for (int j : J) faces.push_back(face_in_direction(sys.polytopes[(size_t)j], w));
            pair.mv = mixed_volume(faces);
          }
          pair.index = pair_index(sys, c, J);
          pair.span_basis = pair_cone.span_basis();
          pair.cone = std::move(pair_cone);
          cycle.pairs.push_back(std::move(pair));
        }
      }
      if (want == 0) break;
      int i = want - 1;
      while (i >= 0 && comb[(size_t)i] == n - want + i) --i;
      if (i < 0) break;
      ++comb[(size_t)i];
      for (int j = i + 1; j < want; ++j) comb[(size_t)j] = comb[(size_t)j - 1] + 1;
    }
  }
  return cycle;
}

MultiplicityResult multiplicity_at(const TropicalCycle& cycle, const RatVec& gamma) {
  MultiplicityResult res{MultiplicityResult::NotOnCycle, 0, {}};
  const IntMat* common_span = nullptr;
  Int total = 0;
  for (size_t i = 0; i < cycle.pairs.size(); ++i) {
    const TropicalPair& pair = cycle.pairs[i];
    ConePosition pos = pair.cone.classify(gamma);
    if (pos == ConePosition::Outside) continue;
    if (pos == ConePosition::Boundary) return {MultiplicityResult::NonSmooth, 0, {}};
    if (common_span && pair.span_basis != *common_span)
      return {MultiplicityResult::NonSmooth, 0, {}};
    common_span = &pair.span_basis;
    total += pair.weight();
    res.covering.push_back((int)i);
  }
  if (res.covering.empty()) return res;
  res.status = MultiplicityResult::Ok;
  res.value = total;
  return res;
}

bool is_hypersurface(const SupportSystem& sys) {
  int d = sys.dim;
  int n = sys.n();
  if (n != d + 1) throw std::invalid_argument("is_hypersurface: requires n = d + 1");
  // Rado's criterion: an independent transversal of (A_i)_{i in I} exists
  // for some d-subset I iff every K inside I has rank(union A_i) >= |K|.
  std::vector<int> idx((size_t)d);
  for (int i = 0; i < d; ++i) idx[(size_t)i] = i;
  while (true) {
    bool ok = true;
    for (size_t mask = 1; mask < ((size_t)1 << d) && ok; ++mask) {
      IntMat pool;
      int size = 0;
      for (int i = 0; i < d; ++i)
        if (mask & ((size_t)1 << i)) {
          ++size;
          const auto& a = sys.supports[(size_t)idx[(size_t)i]];
          pool.insert(pool.end(), a.begin(), a.end());
        }
      if (rank_rational(pool) < size) ok = false;
    }
    if (ok) return true;
    int i = d - 1;
    while (i >= 0 && idx[(size_t)i] == n - d + i) --i;
    if (i < 0) break;
    ++idx[(size_t)i];
    for (int j = i + 1; j < d; ++j) idx[(size_t)j] = idx[(size_t)j - 1] + 1;
  }
  return false;
}

}  // namespace trop
