#include "trop/surface_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

namespace {

struct Arc {
  IntVec u, v;  // primitive endpoint rays
  Int weight;
  Cone cone;    // the two-dimensional cone R>=0 u + R>=0 v
};

Int gcd_2x2_minors(const IntVec& a, const IntVec& b) {
  Int g = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      g = boost::multiprecision::gcd(g, a[i] * b[j] - a[j] * b[i]);
  return g;
}

// Angular order of rays inside a pointed two-dimensional cone, via the
// cross product of their span coordinates.
struct PlanePoint {
  Rat a, b;  // coefficients in (u, v)
};

}  // namespace

SurfaceGraph surface_graph(const TropicalCycle& cycle) {
  const SupportSystem& sys = cycle.system;
  if (sys.dim != 2) throw std::invalid_argument("surface_graph: requires d = 2");
  if (sys.sum_polytope.dim() != 2)
    throw std::invalid_argument("surface_graph: Minkowski sum is not two-dimensional");
  int n = sys.n();

  // Build one arc per maximal pair, weighted by the d = 2 rules.
  std::vector<Arc> arcs;
  for (const auto& pair : cycle.pairs) {
    const auto& crays = pair.normal_cone.rays();
    IntVec u, v;
    Int weight;
    if (pair.J.size() == 2) {
      u = unit_vector(n, pair.J[0]);
      v = unit_vector(n, pair.J[1]);
      weight = mixed_volume({sys.polytopes[(size_t)pair.J[0]], sys.polytopes[(size_t)pair.J[1]]});
    } else if (pair.J.size() == 1) {
      const IntVec& w = crays[0];
      IntVec pw = psi_int(sys, w);
      u = primitive(pw);
      v = unit_vector(n, pair.J[0]);
      Int g = 0;
      for (int k = 0; k < n; ++k)
        if (k != pair.J[0]) g = boost::multiprecision::gcd(g, pw[(size_t)k]);
      weight = normalized_volume(face_in_direction(sys.polytopes[(size_t)pair.J[0]], pair.witness)) * g;
    } else {
      const IntVec& w1 = crays[0];
      const IntVec& w2 = crays[1];
      IntVec p1 = psi_int(sys, w1), p2 = psi_int(sys, w2);
      u = primitive(p1);
      v = primitive(p2);
      Int minors = gcd_2x2_minors(p1, p2);
      Int det = boost::multiprecision::abs(w1[0] * w2[1] - w1[1] * w2[0]);
      if (minors % det != 0) throw std::logic_error("surface_graph: weight rule not integral");
      weight = minors / det;
    }
    arcs.push_back({u, v, weight, Cone::make(n, {u, v}, {})});
  }

  // Global node set: endpoints plus every pairwise arc intersection.
  std::set<IntVec> node_set;
  for (const auto& a : arcs) {
    node_set.insert(a.u);
    node_set.insert(a.v);
  }
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      const Arc& A = arcs[i];
      const Arc& B = arcs[j];
      IntMat ka = integer_kernel({A.u, A.v}, n);
      IntMat kb = integer_kernel({B.u, B.v}, n);
      IntMat both = ka;
      both.insert(both.end(), kb.begin(), kb.end());
      IntMat inter = integer_kernel(both, n);  // span(A) cap span(B)
      if (inter.size() == 1) {
        IntVec r = primitive(inter[0]);
        if (A.cone.contains_ray(r) && B.cone.contains_ray(r))
          node_set.insert(r);
        else if (A.cone.contains_ray(neg(r)) && B.cone.contains_ray(neg(r)))
          node_set.insert(neg(r));
      } else if (inter.size() == 2) {
        // Coplanar arcs: the intersection cone is generated by the
        // endpoints of one arc lying in the other.
        std::vector<IntVec> gens;
        for (const IntVec* g : {&A.u, &A.v})
          if (B.cone.contains_ray(*g)) gens.push_back(*g);
        for (const IntVec* g : {&B.u, &B.v})
          if (A.cone.contains_ray(*g)) gens.push_back(*g);
        for (const auto& g : gens) node_set.insert(g);
      }
    }

  std::vector<IntVec> nodes(node_set.begin(), node_set.end());
  auto node_id = [&](const IntVec& r) {
    return (int)(std::lower_bound(nodes.begin(), nodes.end(), r) - nodes.begin());
  };

  // Subdivide each arc at the nodes it contains and accumulate weights on
  // the minimal sub-arcs.
  std::map<std::pair<int, int>, Int> weight_of;
  for (const auto& arc : arcs) {
    std::vector<std::pair<PlanePoint, int>> on_arc;
    for (size_t k = 0; k < nodes.size(); ++k) {
      if (!arc.cone.contains_ray(nodes[k])) continue;
      // nodes[k] = a*u + b*v with a, b >= 0
      RatMat m((size_t)n, RatVec(2));
      for (int r = 0; r < n; ++r) {
        m[(size_t)r][0] = Rat(arc.u[(size_t)r]);
        m[(size_t)r][1] = Rat(arc.v[(size_t)r]);
      }
      LinearSolve s = solve_rational(m, to_rat(nodes[k]));
      on_arc.push_back({{s.solution[0], s.solution[1]}, (int)k});
    }
    std::sort(on_arc.begin(), on_arc.end(), [](const auto& x, const auto& y) {
      // compare b/a projectively, a, b >= 0
      return x.first.b * y.first.a < y.first.b * x.first.a;
    });
    for (size_t k = 0; k + 1 < on_arc.size(); ++k) {
      int a = on_arc[k].second, b = on_arc[k + 1].second;
      weight_of[{std::min(a, b), std::max(a, b)}] += arc.weight;
    }
  }

  // Dissolve degree-two nodes whose two incident arcs continue the same
  // great circle with equal weight.
  std::map<std::pair<int, int>, Int> edges(weight_of.begin(), weight_of.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, std::vector<std::pair<int, Int>>> adj;
    for (const auto& [key, w] : edges) {
      adj[key.first].push_back({key.second, w});
      adj[key.second].push_back({key.first, w});
    }
    for (const auto& [x, nb] : adj) {
      if (nb.size() != 2 || nb[0].second != nb[1].second) continue;
      int p = nb[0].first, q = nb[1].first;
      if (p == q) continue;
      Cone through = Cone::make(n, {nodes[(size_t)p], nodes[(size_t)q]}, {});
      if (through.dim() != 2) continue;
      if (through.classify(to_rat(nodes[(size_t)x])) != ConePosition::Interior) continue;
      Int w = nb[0].second;
      edges.erase({std::min(x, p), std::max(x, p)});
      edges.erase({std::min(x, q), std::max(x, q)});
      edges[{std::min(p, q), std::max(p, q)}] += w;
      changed = true;
      break;
    }
  }

  // Assemble, dropping nodes that lost all incident edges.
  std::set<int> used;
  for (const auto& [key, w] : edges) {
    used.insert(key.first);
    used.insert(key.second);
  }
  // Labels: unit vectors and psi images of the edge normals of P.
  std::map<IntVec, std::string> labels;
  for (int i = 0; i < n; ++i) labels[unit_vector(n, i)] = "e_" + std::to_string(i + 1);
  NormalFan fan = normal_fan(sys.sum_polytope);
  for (const auto& fc : fan.cones)
    if (fc.cone.dim() == 1 && fc.cone.rays().size() == 1) {
      const IntVec& w = fc.cone.rays()[0];
      IntVec pw = primitive(psi_int(sys, w));
      if (!is_zero(pw) && !labels.count(pw)) labels[pw] = "Psi" + vec_str(w);
    }

  SurfaceGraph g;
  std::map<int, int> remap;
  for (int id : used) {
    const IntVec& ray = nodes[(size_t)id];
    std::string label = labels.count(ray) ? labels[ray] : "x" + vec_str(ray);
    remap[id] = (int)g.nodes.size();
    g.nodes.push_back({ray, label});
  }
  for (const auto& [key, w] : edges) g.edges.push_back({remap[key.first], remap[key.second], w});
  return g;
}

}  // namespace trop
