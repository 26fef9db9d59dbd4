#pragma once

#include <optional>
#include <vector>

#include "vpart/graph.hpp"

namespace vpart {

/// Ordered disjoint cover of V(H); parts may be empty.
struct Decomposition {
  std::vector<VertexSet> parts;

  bool operator==(const Decomposition&) const = default;
};

/// Why `d` fails to be a partition of V(g), or nullopt if it is one.
inline std::optional<Witness> partition_violation(const Graph& g, const Decomposition& d) {
  VertexSet seen(g.n());
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& part = d.parts[i];
    if (part.universe() != g.n()) return Witness{"unbound-part", {}, "part " + std::to_string(i + 1)};
    if (part.intersects(seen)) return Witness{"overlap", (part & seen).to_vector(), "part " + std::to_string(i + 1)};
    seen |= part;
  }
  if (seen.size() != g.n()) return Witness{"uncovered", seen.complement().to_vector(), ""};
  return std::nullopt;
}

}  // namespace vpart
