#include "cutbat/oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cutbat {

namespace {

// Flat adjacency tuned for the 2^m sweep: for each node, (arc index, other
// endpoint) pairs. Arc indices are 0-based here.
struct MaskGraph {
  int node_count;
  std::vector<std::vector<std::pair<int, int>>> adj;

  explicit MaskGraph(const Network& net) : node_count(net.node_count()) {
    adj.assign(node_count + 1, {});
    for (const Arc& a : net.arcs()) {
      adj[a.u].push_back({a.id - 1, a.v});
      adj[a.v].push_back({a.id - 1, a.u});
    }
  }

  // True iff node 1 reaches node n using only arcs outside `removed`.
  bool connects(std::uint64_t removed) const {
    std::uint64_t visited = 2;  // node 1
    int stack[64];
    int top = 0;
    stack[top++] = 1;
    while (top > 0) {
      const int v = stack[--top];
      for (const auto& [arc, w] : adj[v]) {
        if ((removed >> arc) & 1u) continue;
        if ((visited >> w) & 1u) continue;
        if (w == node_count) return true;
        visited |= std::uint64_t{1} << w;
        stack[top++] = w;
      }
    }
    return false;
  }
};

}  // namespace

McCatalog mc_oracle(const Network& net, int max_arcs) {
  const int m = net.arc_count();
  if (m > max_arcs || m > 26)
    throw GuardError("mc_oracle: too many arcs for an exhaustive sweep");
  if (net.node_count() > kMaxMaskNodes)
    throw GuardError("mc_oracle: too many nodes");

  MaskGraph graph(net);
  if (!graph.connects(0))
    throw std::invalid_argument(
        "mc_oracle: source and sink are not connected");

  const std::uint64_t limit = std::uint64_t{1} << m;
  std::vector<bool> connects(limit);
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    connects[mask] = graph.connects(mask);

  McCatalog catalog;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (connects[mask]) continue;
    bool minimal = true;
    std::uint64_t bits = mask;
    while (bits != 0) {
      const std::uint64_t low = bits & (~bits + 1);
      bits ^= low;
      if (!connects[mask ^ low]) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    CutSet cut;
    for (int a = 0; a < m; ++a)
      if ((mask >> a) & 1u) cut.arc_ids.push_back(a + 1);
    catalog.insert(std::move(cut));
  }
  return catalog;
}

bool is_minimal_cut(const Network& net, const CutSet& cut) {
  if (net.arc_count() > 63) throw GuardError("is_minimal_cut: too many arcs");
  if (cut.arc_ids.empty()) return false;
  MaskGraph graph(net);
  std::uint64_t mask = 0;
  for (ArcId a : cut.arc_ids) {
    if (a < 1 || a > net.arc_count())
      throw std::invalid_argument("is_minimal_cut: arc id out of range");
    mask |= std::uint64_t{1} << (a - 1);
  }
  if (graph.connects(mask)) return false;
  for (ArcId a : cut.arc_ids)
    if (!graph.connects(mask ^ (std::uint64_t{1} << (a - 1)))) return false;
  return true;
}

}  // namespace cutbat
