#include <iostream>
#include "trop/reconstruct.hpp"
using namespace trop;

int main() {
  std::vector<IntVec> a1 = {{0,3},{0,2},{0,1},{3,0},{2,0},{1,0},{0,0}};
  std::vector<IntVec> a2 = {{3,0},{2,0},{1,0},{0,3},{0,1}};
  std::vector<IntVec> a3 = {{3,3},{2,3},{1,3},{3,2},{2,2},{1,2},{0,2},{3,1},{2,1},{1,1},{0,1},{2,0},{1,0}};
  auto sys = make_support_system(2, {a1, a2, a3});
  auto cycle = enumerate_cone_pairs(sys);
  auto r1 = vertex_oracle(cycle, {Rat(100), Rat(101), Rat(103)});
  std::cout << "oracle(+1,+1,+1)-ish: ok=" << r1.ok << " v=" << (r1.ok ? vec_str(r1.vertex) : r1.failure) << "\n";
  auto r2 = vertex_oracle(cycle, {Rat(-1000000), Rat(101), Rat(103)});
  std::cout << "oracle(-1,+eps,+eps): ok=" << r2.ok << " v=" << (r2.ok ? vec_str(r2.vertex) : r2.failure) << "\n";
  auto q = reconstruct_newton(cycle, {});
  std::cout << "Q vertices:";
  for (auto& v : q.polytope.vertices()) std::cout << " " << vec_str(v);
  std::cout << "\nlattice points: " << lattice_points(q.polytope).size() << "\n";
  std::cout << "degree: " << degree(cycle) << "\n";
  auto mult = multiplicity_at(cycle, {Rat(5), Rat(7), Rat(0)});
  std::cout << "mult at relint cone(e1,e2) sample: status=" << mult.status << " value=" << mult.value << "\n";
  return 0;
}
