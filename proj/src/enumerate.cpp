#include "cutbat/enumerate.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace cutbat {

namespace {

using Clock = std::chrono::steady_clock;

void check_enumerable(const Network& net) {
  if (net.node_count() > kMaxMaskNodes)
    throw GuardError("enumeration supports at most 63 nodes");
  if (!plsa_connected(net, net.all_nodes_mask(), net.source()).all)
    throw std::invalid_argument("enumeration requires a connected network");
}

// Interior nodes with ids strictly between `limit` and the sink; these are
// the coordinates a state spawned at iteration `limit - 1` can still set.
NodeMask future_mask(NodeId limit, int node_count) {
  const NodeMask below_sink = node_bit(node_count) - 1;
  const NodeMask at_most_limit = (node_bit(limit) << 1) - 1;
  return below_sink & ~at_most_limit;
}

// Nodes 2..v-1: the prefix that is permanently decided for a son adding v.
NodeMask prefix_mask(NodeId v) { return node_bit(v) - 2; }

IsolationVerdict classify_impl(const Network& net, const Layering& layering,
                               const std::vector<NodeMask>& layer_masks,
                               const EnumState& parent, NodeId added,
                               const ReachResult* precomputed_t) {
  const NodeMask all = net.all_nodes_mask();
  const NodeMask s = parent.s_side | node_bit(added);
  const NodeMask t = all & ~s;
  const NodeId sink = net.sink();

  const bool s_ok = parent.feasible
                        ? mask_contains(parent.edge_nodes, added)
                        : plsa_connected(net, s, net.source()).all;

  if (s_ok) {
    ReachResult reach = precomputed_t
                            ? *precomputed_t
                            : plsa_connected(net, t, sink);
    if (reach.all) return {IsolationKind::none, std::nullopt};
    NodeMask stranded = t & ~reach.reached & prefix_mask(added);
    if (stranded != 0)
      return {IsolationKind::son_and_offspring_infeasible,
              std::countr_zero(stranded)};
    return {IsolationKind::none, std::nullopt};
  }

  // The added node cannot attach to S now. If a whole earlier layer sits on
  // the T side, no later son of this parent can attach either: every path
  // from the source to a deeper node passes through that layer.
  const int lambda = layering.layer_of[added];
  for (int level = 2; level < lambda; ++level) {
    if ((layer_masks[level] & s) == 0)
      return {IsolationKind::parent_removable, added};
  }

  // A permanently decided T-side node that cannot reach the sink condemns
  // the son and all offspring: offspring only shrink the T side.
  ReachResult reach = plsa_connected(net, t, sink);
  NodeMask stranded = t & ~reach.reached & prefix_mask(added);
  if (stranded != 0)
    return {IsolationKind::son_and_offspring_infeasible,
            std::countr_zero(stranded)};

  // If even setting every remaining coordinate cannot connect the S side,
  // the whole subtree is infeasible.
  ReachResult best = plsa_connected(net, s | future_mask(added, net.node_count()),
                                    net.source());
  NodeMask s_stranded = s & ~best.reached;
  if (s_stranded != 0)
    return {IsolationKind::son_and_offspring_infeasible,
            std::countr_zero(s_stranded)};

  return {IsolationKind::son_infeasible, added};
}

std::vector<NodeMask> layer_masks_of(const Layering& layering) {
  std::vector<NodeMask> masks(layering.layers.size() + 1, 0);
  for (std::size_t i = 0; i < layering.layers.size(); ++i)
    for (NodeId v : layering.layers[i]) masks[i + 1] |= node_bit(v);
  return masks;
}

bool edge_node_claim(const Network& net, const EnumState& son,
                     const EnumState& parent) {
  const NodeMask t = net.all_nodes_mask() & ~son.s_side;
  if (t == node_bit(net.sink())) return true;
  const NodeId added = son.spawn_iteration + 1;
  const NodeMask reduced = parent.edge_nodes & ~node_bit(added);
  if (reduced == 0) return false;
  const NodeId root = std::countr_zero(reduced);
  return plsa_connected(net, reduced, root).all;
}

class RecursiveEnumerator {
 public:
  RecursiveEnumerator(const Network& net, const EnumOptions& options)
      : net_(net),
        options_(options),
        layering_(plsa_layers(net, net.source())),
        layer_masks_(layer_masks_of(layering_)),
        all_(net.all_nodes_mask()),
        width_(net.node_count() - 2) {}

  void run() {
    if (width_ == 0) {
      EnumState state;
      state.vector = NodeVector(0);
      state.s_side = node_bit(1);
      state.edge_nodes = net_.neighbor_mask(1);
      state.spawn_iteration = 0;
      ++stats.vectors_generated;
      if (plsa_connected(net_, all_ & ~state.s_side, net_.sink()).all)
        emit(state);
      return;
    }

    seed();
    for (int i = 2; i <= width_; ++i) {
      frontier_.iteration = i;
      frontier_.snapshot_count = frontier_.states.size();
      for (std::size_t j = 0; j < frontier_.snapshot_count; ++j) {
        if (!frontier_.states[j].alive) continue;
        process_son(j, i);
      }
    }
  }

  McCatalog catalog;
  EnumStats stats;

 private:
  void emit(EnumState& state) {
    state.feasible = true;
    ++stats.vectors_feasible;
    CutSet cut = cut_of(net_, state.s_side);
    if (options_.observer && options_.observer->on_emit)
      options_.observer->on_emit(state, cut);
    catalog.insert(std::move(cut));
  }

  void fathom(const EnumState& son, IsolationKind kind,
              const EnumState& parent) {
    if (options_.observer && options_.observer->on_fathom)
      options_.observer->on_fathom(son, kind, parent);
  }

  void seed() {
    EnumState x1;
    x1.vector = NodeVector(width_);
    x1.s_side = node_bit(1);
    x1.edge_nodes = net_.neighbor_mask(1);
    x1.spawn_iteration = 1;
    admit_seed(std::move(x1));

    EnumState x2;
    x2.vector = NodeVector(width_);
    x2.vector.set(1);
    x2.s_side = node_bit(1) | node_bit(2);
    x2.edge_nodes =
        (net_.neighbor_mask(1) | net_.neighbor_mask(2)) & ~x2.s_side;
    x2.spawn_iteration = 1;
    admit_seed(std::move(x2));
  }

  void admit_seed(EnumState state) {
    ++stats.vectors_generated;
    const bool s_ok = plsa_connected(net_, state.s_side, net_.source()).all;
    const NodeMask t = all_ & ~state.s_side;
    const ReachResult reach = plsa_connected(net_, t, net_.sink());
    if (s_ok && reach.all) {
      emit(state);
      frontier_.states.push_back(std::move(state));
      return;
    }
    // Node 2 is decided for both seeds; if it is stranded (on either side)
    // no completion of this prefix is feasible.
    if (options_.prune_isolated) {
      if ((t & ~reach.reached & node_bit(2)) != 0) {
        fathom(state, IsolationKind::son_and_offspring_infeasible, state);
        return;
      }
      if (!s_ok) {
        ReachResult best = plsa_connected(
            net_, state.s_side | future_mask(2, net_.node_count()),
            net_.source());
        if ((state.s_side & ~best.reached) != 0) {
          fathom(state, IsolationKind::son_and_offspring_infeasible, state);
          return;
        }
      }
    }
    frontier_.states.push_back(std::move(state));
  }

  void process_son(std::size_t parent_index, int iteration) {
    const EnumState parent = frontier_.states[parent_index];
    EnumState son = spawn_son(parent, iteration, net_);
    ++stats.vectors_generated;
    const NodeId added = iteration + 1;

    ReachResult t_reach{0, false};
    bool t_computed = false;
    const bool s_ok = parent.feasible
                          ? mask_contains(parent.edge_nodes, added)
                          : plsa_connected(net_, son.s_side, 1).all;
    if (s_ok) {
      t_reach = plsa_connected(net_, all_ & ~son.s_side, net_.sink());
      t_computed = true;
      if (options_.t_side_mode == TSideMode::edge_node && parent.feasible) {
        const bool fast = edge_node_claim(net_, son, parent);
        if (fast != t_reach.all) {
          ++stats.t_side_divergences;
          if (options_.observer && options_.observer->on_divergence)
            options_.observer->on_divergence(
                {son.s_side, added, fast, t_reach.all});
        }
      }
      if (t_reach.all) {
        emit(son);
        frontier_.states.push_back(std::move(son));
        return;
      }
    }

    IsolationVerdict verdict =
        classify_impl(net_, layering_, layer_masks_, parent, added,
                      t_computed ? &t_reach : nullptr);

    if (verdict.kind == IsolationKind::parent_removable) {
      if (options_.prune_parent) {
        frontier_.states[parent_index].alive = false;
        ++stats.parents_removed;
        if (options_.prune_isolated) {
          fathom(son, IsolationKind::parent_removable, parent);
          return;
        }
        fathom(son, IsolationKind::parent_removable, parent);
      } else if (options_.prune_isolated) {
        fathom(son, IsolationKind::son_and_offspring_infeasible, parent);
        return;
      }
    } else if (verdict.kind == IsolationKind::son_and_offspring_infeasible) {
      if (options_.prune_isolated) {
        fathom(son, verdict.kind, parent);
        return;
      }
    }

    son.feasible = false;
    frontier_.states.push_back(std::move(son));
  }

  const Network& net_;
  const EnumOptions& options_;
  Layering layering_;
  std::vector<NodeMask> layer_masks_;
  NodeMask all_;
  int width_;
  RecursiveFrontier frontier_;
};

}  // namespace

bool is_feasible(const Network& net, const NodeVector& x) {
  if (x.width != net.node_count() - 2)
    throw std::invalid_argument("vector width must be node_count - 2");
  const NodeMask s = x.s_side_mask();
  return plsa_connected(net, s, net.source()).all &&
         plsa_connected(net, net.all_nodes_mask() & ~s, net.sink()).all;
}

IsolationVerdict classify_isolation(const Network& net,
                                    const Layering& layering,
                                    const EnumState& parent, NodeId added) {
  return classify_impl(net, layering, layer_masks_of(layering), parent, added,
                       nullptr);
}

bool t_side_check(const Network& net, const EnumState& son, TSideMode mode,
                  const EnumState* parent, TSideDivergence* divergence) {
  const NodeMask t = net.all_nodes_mask() & ~son.s_side;
  const bool exact = plsa_connected(net, t, net.sink()).all;
  if (mode == TSideMode::edge_node && parent != nullptr && parent->feasible) {
    const bool fast = edge_node_claim(net, son, *parent);
    if (fast != exact && divergence != nullptr)
      *divergence = {son.s_side, static_cast<NodeId>(son.spawn_iteration + 1),
                     fast, exact};
  }
  return exact;
}

std::pair<McCatalog, EnumStats> enumerate_baseline(const Network& net) {
  check_enumerable(net);
  const auto start = Clock::now();

  McCatalog catalog;
  EnumStats stats;
  const NodeMask all = net.all_nodes_mask();
  NodeVector x(net.node_count() - 2);
  while (true) {
    ++stats.vectors_generated;
    const NodeMask s = x.s_side_mask();
    if (plsa_connected(net, s, net.source()).all &&
        plsa_connected(net, all & ~s, net.sink()).all) {
      ++stats.vectors_feasible;
      catalog.insert(cut_of(net, s));
    }
    if (bat_next(x)) break;
  }

  stats.wall_time = Clock::now() - start;
  return {std::move(catalog), stats};
}

std::pair<McCatalog, EnumStats> enumerate_recursive(const Network& net,
                                                    const EnumOptions& options) {
  check_enumerable(net);
  const auto start = Clock::now();

  auto [ordered, renumbering] = renumber(net);
  RecursiveEnumerator enumerator(ordered, options);
  enumerator.run();
  enumerator.stats.wall_time = Clock::now() - start;
  return {std::move(enumerator.catalog), enumerator.stats};
}

}  // namespace cutbat
