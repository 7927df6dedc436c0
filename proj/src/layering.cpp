#include "cutbat/layering.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cutbat {

Layering plsa_layers(const Network& net, NodeId root) {
  if (root < 1 || root > net.node_count())
    throw std::invalid_argument("root out of range");

  Layering out;
  out.layer_of.assign(net.node_count() + 1, 0);
  out.layer_of[root] = 1;
  out.layers.push_back({root});

  while (true) {
    const std::vector<NodeId>& last = out.layers.back();
    std::vector<NodeId> next;
    for (NodeId v : last) {
      for (const auto& [w, a] : net.adjacency(v)) {
        if (out.layer_of[w] == 0) {
          out.layer_of[w] = static_cast<int>(out.layers.size()) + 1;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.layers.push_back(std::move(next));
  }
  return out;
}

ReachResult plsa_connected(const Network& net, NodeMask allowed, NodeId root) {
  if (root < 1 || root > net.node_count())
    throw std::invalid_argument("root out of range");
  if (!mask_contains(allowed, root))
    throw std::invalid_argument("root must be in the allowed set");

  NodeMask reached = node_bit(root);
  NodeMask frontier = reached;
  while (frontier != 0) {
    NodeMask next = 0;
    NodeMask scan = frontier;
    while (scan != 0) {
      NodeId v = std::countr_zero(scan);
      scan &= scan - 1;
      next |= net.neighbor_mask(v);
    }
    frontier = next & allowed & ~reached;
    reached |= frontier;
  }
  return {reached, reached == allowed};
}

std::pair<Network, Renumbering> renumber(const Network& net) {
  Layering layering = plsa_layers(net, net.source());
  for (NodeId v = 1; v <= net.node_count(); ++v)
    if (layering.layer_of[v] == 0)
      throw std::invalid_argument("renumber requires a connected network");

  const int n = net.node_count();
  Renumbering perm;
  perm.forward.assign(n + 1, 0);
  perm.backward.assign(n + 1, 0);

  NodeId next = 1;
  for (const std::vector<NodeId>& layer : layering.layers)
    for (NodeId v : layer) perm.forward[v] = next++;

  if (perm.forward[net.sink()] != n) {
    NodeId displaced = 0;
    for (NodeId v = 1; v <= n; ++v)
      if (perm.forward[v] == n) displaced = v;
    perm.forward[displaced] = perm.forward[net.sink()];
    perm.forward[net.sink()] = n;
  }
  for (NodeId v = 1; v <= n; ++v) perm.backward[perm.forward[v]] = v;

  std::vector<Arc> arcs;
  arcs.reserve(net.arc_count());
  for (const Arc& a : net.arcs()) {
    NodeId u = perm.forward[a.u];
    NodeId v = perm.forward[a.v];
    if (u > v) std::swap(u, v);
    arcs.push_back({a.id, u, v});
  }
  std::vector<double> probs(net.probabilities().begin(),
                            net.probabilities().end());
  std::vector<NodeId> labels(n + 1, 0);
  for (NodeId v = 1; v <= n; ++v)
    labels[v] = net.original_label(perm.backward[v]);

  return {Network(n, std::move(arcs), std::move(probs), std::move(labels)),
          std::move(perm)};
}

}  // namespace cutbat
