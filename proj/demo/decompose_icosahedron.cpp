// Maximum induced forest of the icosahedron plus a residue with Δ <= 3 and
// disjoint triangles.
#include <iostream>

#include "vpart/decomposer.hpp"
#include "vpart/generators.hpp"

int main() {
  using namespace vpart;
  const Graph g = gen::icosahedron();
  auto r = decompose_two(g, FreenessSpec::min_degree_core(2), 3, 3);
  const auto& parts = r.decomposition.parts;
  std::cout << "forest part:";
  for (Vertex v : parts[0]) std::cout << ' ' << v;
  std::cout << "\nresidue:";
  for (Vertex v : parts[1]) std::cout << ' ' << v;
  std::cout << "\nswaps: " << r.refine.trace.size() << "\n";
  for (auto& c : r.report.checks) std::cout << c.id << (c.passed ? " ok" : " FAILED") << '\n';
  return r.report.passed() ? 0 : 1;
}
