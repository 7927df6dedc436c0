#include "cutbat/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cutbat/layering.hpp"

namespace cutbat {

namespace {

NodeId farthest_node(const Layering& layering) {
  // Deepest layer, smallest id within it.
  return layering.layers.back().front();
}

}  // namespace

Network generate_network(const GenSpec& spec) {
  const int n = spec.node_count;
  const long max_arcs = static_cast<long>(n) * (n - 1) / 2;
  if (n < 2) throw std::invalid_argument("need at least two nodes");
  if (spec.arc_count < n - 1 || spec.arc_count > max_arcs)
    throw std::invalid_argument("arc count must be in [n-1, n(n-1)/2]");
  if (spec.arc_probability &&
      !(*spec.arc_probability >= 0.0 && *spec.arc_probability <= 1.0))
    throw std::invalid_argument("probability outside [0,1]");

  std::mt19937_64 rng(spec.seed);

  // Random spanning tree over a shuffled label order, then uniform extra
  // arcs from the remaining candidate pairs.
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::pair<NodeId, NodeId>> chosen;
  std::vector<std::vector<bool>> used(n + 1, std::vector<bool>(n + 1, false));
  auto add_pair = [&](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    used[a][b] = true;
    chosen.push_back({a, b});
  };
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    add_pair(order[i], order[pick(rng)]);
  }
  std::vector<std::pair<NodeId, NodeId>> candidates;
  for (NodeId a = 1; a <= n; ++a)
    for (NodeId b = a + 1; b <= n; ++b)
      if (!used[a][b]) candidates.push_back({a, b});
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (int i = 0; i < spec.arc_count - (n - 1); ++i)
    chosen.push_back(candidates[i]);

  std::sort(chosen.begin(), chosen.end());
  std::vector<Arc> arcs;
  arcs.reserve(chosen.size());
  for (std::size_t i = 0; i < chosen.size(); ++i)
    arcs.push_back(
        {static_cast<ArcId>(i) + 1, chosen[i].first, chosen[i].second});
  Network raw(n, std::move(arcs));

  // Most-distant pair in layer terms via a double sweep.
  const NodeId endpoint_a = farthest_node(plsa_layers(raw, 1));
  const NodeId endpoint_b = farthest_node(plsa_layers(raw, endpoint_a));
  NodeId source = endpoint_b;
  NodeId sink = endpoint_a;
  if (source == sink) {  // n == 2 or degenerate tie
    source = 1;
    sink = n;
  }

  // Relabel source -> 1, sink -> n, then renumber into layer order and
  // reassign arc ids canonically by endpoint pair.
  std::vector<NodeId> forward(n + 1, 0);
  forward[source] = 1;
  forward[sink] = n;
  NodeId next = 2;
  for (NodeId v = 1; v <= n; ++v)
    if (v != source && v != sink) forward[v] = next++;

  std::vector<std::pair<NodeId, NodeId>> relabeled;
  for (const auto& [a, b] : chosen) {
    NodeId u = forward[a];
    NodeId v = forward[b];
    if (u > v) std::swap(u, v);
    relabeled.push_back({u, v});
  }
  std::sort(relabeled.begin(), relabeled.end());
  std::vector<Arc> normalized;
  for (std::size_t i = 0; i < relabeled.size(); ++i)
    normalized.push_back(
        {static_cast<ArcId>(i) + 1, relabeled[i].first, relabeled[i].second});

  auto [ordered, renumbering] = renumber(Network(n, std::move(normalized)));

  std::vector<std::pair<NodeId, NodeId>> final_pairs;
  for (const Arc& a : ordered.arcs()) final_pairs.push_back({a.u, a.v});
  std::sort(final_pairs.begin(), final_pairs.end());
  std::vector<Arc> final_arcs;
  for (std::size_t i = 0; i < final_pairs.size(); ++i)
    final_arcs.push_back({static_cast<ArcId>(i) + 1, final_pairs[i].first,
                          final_pairs[i].second});
  std::vector<double> probs;
  if (spec.arc_probability)
    probs.assign(final_arcs.size(), *spec.arc_probability);
  return Network(n, std::move(final_arcs), std::move(probs));
}

}  // namespace cutbat
