// Independent set plus forest on the Petersen graph, two ways.
#include <iostream>

#include "vpart/decomposer.hpp"
#include "vpart/generators.hpp"

namespace {

void show(const char* name, const vpart::Decomposition& d, const vpart::Report& r) {
  std::cout << name << ": |V1| = " << d.parts[0].size() << ", |V2| = " << d.parts[1].size()
            << (r.passed() ? ", verified\n" : ", NOT verified\n");
}

}  // namespace

int main() {
  using namespace vpart;
  const Graph g = gen::petersen();
  auto local = degenerate_split(g, 1, 2);
  show("local search", local.decomposition, local.report);
  auto exact = degenerate_max_split(g, 1, 2);
  show("maximum independent part", exact.decomposition, exact.report);
  return local.report.passed() && exact.report.passed() ? 0 : 1;
}
