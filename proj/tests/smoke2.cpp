#include <iostream>
#include "trop/surface_graph.hpp"
using namespace trop;

int main() {
  std::vector<IntVec> a1 = {{0,3},{0,2},{0,1},{3,0},{2,0},{1,0},{0,0}};
  std::vector<IntVec> a2 = {{3,0},{2,0},{1,0},{0,3},{0,1}};
  std::vector<IntVec> a3 = {{3,3},{2,3},{1,3},{3,2},{2,2},{1,2},{0,2},{3,1},{2,1},{1,1},{0,1},{2,0},{1,0}};
  auto sys = make_support_system(2, {a1, a2, a3});
  auto cycle = enumerate_cone_pairs(sys);
  auto g = surface_graph(cycle);
  std::cout << "nodes " << g.nodes.size() << " edges " << g.edges.size() << "\n";
  for (auto& nd : g.nodes) std::cout << "  node " << nd.label << " " << vec_str(nd.ray) << "\n";
  for (auto& e : g.edges) std::cout << "  edge " << g.nodes[e.a].label << " -- " << g.nodes[e.b].label << " w=" << e.weight << "\n";
  return 0;
}
