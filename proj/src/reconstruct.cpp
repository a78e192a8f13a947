#include "trop/reconstruct.hpp"

#include <algorithm>
#include <set>

#include "trop/lp.hpp"

namespace trop {

namespace {

Int abs_det(const IntMat& m) { return boost::multiprecision::abs(det_int(m)); }

// Extrinsic multiplicity: [Z^n : Z^S + (span cap Z^n)].
Int extrinsic_index(const IntMat& span_basis, const std::vector<int>& subset, int n) {
  IntMat m = span_basis;
  for (int j : subset) m.push_back(unit_vector(n, j));
  if ((int)m.size() != n) throw std::logic_error("extrinsic_index: rank mismatch");
  return abs_det(m);
}

bool is_homogeneous_common_degree(const SupportSystem& sys) {
  std::optional<Int> deg;
  for (const auto& a : sys.supports)
    for (const auto& pt : a) {
      Int s = 0;
      for (const auto& c : pt) s += c;
      if (!deg)
        deg = s;
      else if (*deg != s)
        return false;
    }
  return true;
}

}  // namespace

std::optional<RayShootReport> ray_shoot(const TropicalCycle& cycle, const RatVec& v,
                                        const std::vector<int>& subset) {
  int n = cycle.ambient();
  int d = cycle.dim();
  int c = (int)subset.size();
  RayShootReport report;
  report.subset = subset;
  report.base = v;

  std::map<RatVec, RayShootHit> hits;
  for (size_t pid = 0; pid < cycle.pairs.size(); ++pid) {
    const TropicalPair& pair = cycle.pairs[pid];
    // Solve v + sum_j sigma_j e_j in span(pair): B^T alpha - E_S sigma = v.
    RatMat m((size_t)n, RatVec((size_t)(d + c), Rat(0)));
    for (int r = 0; r < n; ++r) {
      for (int k = 0; k < d; ++k) m[(size_t)r][(size_t)k] = Rat(pair.span_basis[(size_t)k][(size_t)r]);
      for (int k = 0; k < c; ++k)
        if (subset[(size_t)k] == r) m[(size_t)r][(size_t)(d + k)] = Rat(-1);
    }
    LinearSolve sol = solve_rational(m, v);
    if (sol.kind == LinearSolve::Inconsistent) continue;  // orthant flat misses the span
    if (sol.kind == LinearSolve::Underdetermined) {
      // Degenerate configuration: the flat meets the span in positive
      // dimension.  Genericity fails only if cone and shifted orthant
      // actually intersect; decide exactly with an LP.
      size_t nrays = pair.cone.rays().size();
      size_t nlin = pair.cone.lineality().size();
      RatMat a((size_t)n, RatVec(nrays + 2 * nlin + (size_t)c));
      for (int r = 0; r < n; ++r) {
        size_t col = 0;
        for (size_t k = 0; k < nrays; ++k) a[(size_t)r][col++] = Rat(pair.cone.rays()[k][(size_t)r]);
        for (size_t k = 0; k < nlin; ++k) {
          a[(size_t)r][col++] = Rat(pair.cone.lineality()[k][(size_t)r]);
          a[(size_t)r][col++] = Rat(-pair.cone.lineality()[k][(size_t)r]);
        }
        for (int k = 0; k < c; ++k)
          a[(size_t)r][col++] = Rat(subset[(size_t)k] == r ? -1 : 0);
      }
      if (lp_feasible_point(a, v)) return std::nullopt;
      continue;
    }
    RatVec sigma(sol.solution.begin() + d, sol.solution.end());
    bool miss = false, touching = false;
    for (const auto& s : sigma) {
      if (s < 0) miss = true;
      if (s == 0) touching = true;
    }
    if (miss) continue;
    if (touching) return std::nullopt;  // base point (or a face of the orthant) on the cycle
    RatVec x = v;
    for (int k = 0; k < c; ++k) x[(size_t)subset[(size_t)k]] += sigma[(size_t)k];
    ConePosition pos = pair.cone.classify(x);
    if (pos == ConePosition::Outside) continue;
    if (pos == ConePosition::Boundary) return std::nullopt;
    auto [it, fresh] = hits.try_emplace(x);
    RayShootHit& h = it->second;
    if (fresh) {
      h.point = x;
      h.intrinsic = 0;
      h.extrinsic = extrinsic_index(pair.span_basis, subset, n);
    } else {
      // All pairs covering one smooth point must span the same space.
      if (cycle.pairs[(size_t)h.pair_ids[0]].span_basis != pair.span_basis) return std::nullopt;
    }
    h.pair_ids.push_back((int)pid);
    h.intrinsic += pair.weight();
  }
  for (auto& [x, h] : hits) {
    h.contribution = h.intrinsic * h.extrinsic;
    report.total += h.contribution;
    report.hits.push_back(h);
  }
  return report;
}

OracleResult chow_vertex(const TropicalCycle& cycle, const RatVec& v) {
  int n = cycle.ambient();
  int d = cycle.dim();
  int c = n - d;
  if (c < 1) throw std::invalid_argument("chow_vertex: codimension must be at least 1");
  if ((int)v.size() != n) throw std::invalid_argument("chow_vertex: direction dimension");
  if (c > 1 && !is_homogeneous_common_degree(cycle.system))
    throw std::invalid_argument("chow_vertex: codimension > 1 requires homogeneous supports of one degree");

  OracleResult res;
  IntVec vertex((size_t)n, 0);
  std::vector<int> subset((size_t)c);
  for (int i = 0; i < c; ++i) subset[(size_t)i] = i;
  while (true) {
    auto rep = ray_shoot(cycle, v, subset);
    if (!rep) {
      res.failure = "genericity failure on subset";
      return res;
    }
    for (int i : subset) vertex[(size_t)i] += rep->total;
    res.reports.push_back(std::move(*rep));
    int i = c - 1;
    while (i >= 0 && subset[(size_t)i] == n - c + i) --i;
    if (i < 0) break;
    ++subset[(size_t)i];
    for (int j = i + 1; j < c; ++j) subset[(size_t)j] = subset[(size_t)j - 1] + 1;
  }
  res.ok = true;
  res.vertex = vertex;
  return res;
}

OracleResult vertex_oracle(const TropicalCycle& cycle, const RatVec& v) {
  int n = cycle.ambient();
  int d = cycle.dim();
  if (n != d + 1) throw std::invalid_argument("vertex_oracle: requires n = d + 1");
  if (!is_hypersurface(cycle.system))
    throw std::invalid_argument("vertex_oracle: system is not a hypersurface");
  return chow_vertex(cycle, v);
}

Int oracle_coordinate_bound(const TropicalCycle& cycle) {
  int n = cycle.ambient();
  Int bound = 0;
  for (const auto& pair : cycle.pairs) {
    Int emax = 0;
    for (int i = 0; i < n; ++i) {
      IntMat m = pair.span_basis;
      m.push_back(unit_vector(n, i));
      if ((int)m.size() != n) continue;
      emax = std::max(emax, abs_det(m));
    }
    bound += pair.weight() * emax;
  }
  return bound;
}

namespace {

// Deterministic small integers from the engine (avoids distribution
// portability concerns).
long long rnd_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + (long long)(rng() % (unsigned long long)(hi - lo + 1));
}

// Direction N * base + r with |r| small: for N beyond the coordinate
// bound the oracle's answer is a vertex of face_base(Q), with r breaking
// ties inside the face.
RatVec perturbed_direction(const IntVec& base, std::mt19937_64& rng, const Int& ncoef, int n) {
  RatVec v((size_t)n);
  for (int i = 0; i < n; ++i) {
    Int r = rnd_range(rng, -1000, 1000);
    v[(size_t)i] = Rat(base[(size_t)i] * ncoef + r);
  }
  return v;
}

}  // namespace

ReconstructedPolytope reconstruct_newton(const TropicalCycle& cycle, const ReconstructOptions& opts) {
  int n = cycle.ambient();
  int d = cycle.dim();
  if (n != d + 1) throw std::invalid_argument("reconstruct_newton: requires n = d + 1");
  if (!is_hypersurface(cycle.system))
    throw std::invalid_argument("reconstruct_newton: system is not a hypersurface");

  std::mt19937_64 rng(opts.seed);
  Int bound = oracle_coordinate_bound(cycle);
  // N large enough that the perturbation cannot overturn the base
  // direction: N > 2 * 1000 * n * bound.
  Int ncoef = 2000 * Int(n) * (bound + 1) + 1;

  std::map<IntVec, RatVec> provenance;
  auto query = [&](const IntVec& base) -> std::optional<IntVec> {
    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
      RatVec v = perturbed_direction(base, rng, ncoef, n);
      OracleResult r = chow_vertex(cycle, v);
      if (r.ok) {
        provenance.emplace(r.vertex, v);
        return r.vertex;
      }
    }
    throw std::runtime_error("reconstruct_newton: oracle genericity retries exhausted");
  };

  std::set<IntVec> verts;
  for (int i = 0; i < n; ++i) {
    for (int sgn : {1, -1}) {
      IntVec base((size_t)n, 0);
      base[(size_t)i] = sgn;
      verts.insert(*query(base));
    }
  }

  while (true) {
    LatticePolytope hull = conv(std::vector<IntVec>(verts.begin(), verts.end()));
    bool grew = false;
    // Facet probes: a new vertex exists iff some point of Q lies on the
    // far side of a current facet.
    for (const auto& f : hull.facets()) {
      IntVec u = *query(f.normal);
      if (dot(f.normal, u) < f.offset) {
        verts.insert(u);
        grew = true;
      }
    }
    // Affine-hull probes catch vertices off the current span.
    for (const auto& e : hull.equations()) {
      for (const IntVec& base : {e.normal, neg(e.normal)}) {
        IntVec u = *query(base);
        if (dot(base, u) < (base == e.normal ? e.offset : -e.offset)) {
          verts.insert(u);
          grew = true;
        }
      }
    }
    if (!grew) {
      ReconstructedPolytope out;
      out.polytope = hull;
      for (const auto& v : hull.vertices()) {
        auto it = provenance.find(v);
        if (it != provenance.end()) out.provenance.emplace(v, it->second);
      }
      // Sanity: Q sits in the non-negative orthant and touches every
      // coordinate hyperplane.
      for (int i = 0; i < n; ++i) {
        Int mn = hull.vertices()[0][(size_t)i];
        for (const auto& v : hull.vertices()) mn = std::min(mn, v[(size_t)i]);
        if (mn != 0) throw std::logic_error("reconstruct_newton: polytope misses a coordinate hyperplane");
      }
      return out;
    }
  }
}

Int degree(const TropicalCycle& cycle, unsigned long long seed, int max_retries) {
  int n = cycle.ambient();
  std::mt19937_64 rng(seed);
  Int bound = oracle_coordinate_bound(cycle);
  Int ncoef = 2000 * Int(n) * (bound + 1) + 1;
  IntVec base((size_t)n, -1);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    RatVec v = perturbed_direction(base, rng, ncoef, n);
    OracleResult r = chow_vertex(cycle, v);
    if (!r.ok) continue;
    Int s = 0;
    for (const auto& x : r.vertex) s += x;
    return s;
  }
  throw std::runtime_error("degree: genericity retries exhausted");
}

}  // namespace trop
