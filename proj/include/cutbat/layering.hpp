#pragma once

#include <utility>
#include <vector>

#include "cutbat/network.hpp"

namespace cutbat {

/// Breadth-first layer decomposition. layers[i-1] holds L(i); layer_of[v]
/// is 1-based, with 0 marking nodes unreachable from the root.
struct Layering {
  std::vector<int> layer_of;  // size node_count+1, index 0 unused
  std::vector<std::vector<NodeId>> layers;

  int depth() const { return static_cast<int>(layers.size()); }
};

/// Runs the layer expansion to exhaustion (no early halt), labeling every
/// reachable node.
Layering plsa_layers(const Network& net, NodeId root);

struct ReachResult {
  NodeMask reached = 0;
  bool all = false;
};

/// Breadth-first search restricted to `allowed`; all is true iff the whole
/// allowed set was reached. Each allowed node enters at most one layer, so
/// the cost is proportional to |allowed| plus incident arcs.
ReachResult plsa_connected(const Network& net, NodeMask allowed, NodeId root);

/// Node relabeling; forward[old] = new, backward[new] = old.
struct Renumbering {
  std::vector<NodeId> forward;
  std::vector<NodeId> backward;
};

/// Relabels nodes so layer indices are non-decreasing in id order, keeping
/// ascending original ids within each layer. The sink is forced to id n even
/// when it does not sit in the final layer; id monotonicity then holds for
/// all non-sink nodes. Arc ids are preserved.
std::pair<Network, Renumbering> renumber(const Network& net);

}  // namespace cutbat
