#pragma once

#include <cstdint>
#include <optional>

#include "cutbat/network.hpp"

namespace cutbat {

/// Recipe for a seeded random instance.
struct GenSpec {
  int node_count = 0;
  int arc_count = 0;
  std::uint64_t seed = 0;
  /// Working probability assigned to every arc; nullopt emits a network
  /// without a probability table.
  std::optional<double> arc_probability = 0.9;
};

/// Deterministic for a given seed: builds a random spanning tree, adds the
/// remaining arcs uniformly without loops or parallels, picks source and
/// sink as a most-distant pair in layer terms, and relabels into layer
/// order. The result always passes validate with connected = true.
Network generate_network(const GenSpec& spec);

}  // namespace cutbat
