#include <iostream>
#include "trop/tropical.hpp"
using namespace trop;

int main() {
  // Example 5.3 supports (bicubic surface)
  std::vector<IntVec> a1 = {{0,3},{0,2},{0,1},{3,0},{2,0},{1,0},{0,0}};
  std::vector<IntVec> a2 = {{3,0},{2,0},{1,0},{0,3},{0,1}};
  std::vector<IntVec> a3 = {{3,3},{2,3},{1,3},{3,2},{2,2},{1,2},{0,2},{3,1},{2,1},{1,1},{0,1},{2,0},{1,0}};
  auto sys = make_support_system(2, {a1, a2, a3});
  std::cout << "P1 verts " << sys.polytopes[0].vertices().size()
            << " P2 " << sys.polytopes[1].vertices().size()
            << " P3 " << sys.polytopes[2].vertices().size()
            << " P " << sys.sum_polytope.vertices().size() << "\n";
  auto fan = normal_fan(sys.sum_polytope);
  int rays = 0;
  for (auto& fc : fan.cones) if (fc.cone.dim() == 1) { rays++; std::cout << "ray " << vec_str(fc.cone.rays()[0]) << " psi " << vec_str(psi_int(sys, fc.cone.rays()[0])) << "\n"; }
  std::cout << "rays: " << rays << "\n";
  auto cycle = enumerate_cone_pairs(sys);
  std::cout << "pairs: " << cycle.pairs.size() << "\n";
  for (auto& p : cycle.pairs) {
    std::cout << "J={";
    for (int j : p.J) std::cout << j+1 << ",";
    std::cout << "} dimC=" << p.normal_cone.dim() << " index=" << p.index << " mv=" << p.mv << "\n";
  }
  return 0;
}
