#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "cutbat/bat.hpp"
#include "cutbat/layering.hpp"
#include "cutbat/mc_catalog.hpp"
#include "cutbat/network.hpp"

namespace cutbat {

struct EnumStats {
  std::uint64_t vectors_generated = 0;
  std::uint64_t vectors_feasible = 0;
  std::uint64_t parents_removed = 0;
  std::uint64_t t_side_divergences = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Outcome of judging a candidate son against its parent's frontier record.
///
///   none                          feasible, or infeasible in a way later
///                                 coordinates may still repair
///   son_infeasible                the added node cannot attach to the S
///                                 side now, but offspring may attach it
///                                 through higher-numbered nodes
///   son_and_offspring_infeasible  a permanently decided node is stranded;
///                                 no completion of this prefix recovers it
///   parent_removable              an entire earlier layer sits on the T
///                                 side of the fixed prefix, so every later
///                                 son of this parent is stranded as well
enum class IsolationKind {
  none,
  son_infeasible,
  son_and_offspring_infeasible,
  parent_removable,
};

struct IsolationVerdict {
  IsolationKind kind = IsolationKind::none;
  std::optional<NodeId> witness;  // present iff kind != none
};

enum class TSideMode { plsa, edge_node };

/// One disagreement between the reduced edge-node connectivity test and the
/// exact T-side search. The exact result always drives the enumeration.
struct TSideDivergence {
  NodeMask son_s_side = 0;
  NodeId added = 0;
  bool fast_result = false;
  bool exact_result = false;
};

struct EnumObserver {
  /// A son (or a seed) was suppressed together with its offspring; for
  /// parent_removable the parent's future sons are suppressed as well.
  std::function<void(const EnumState& son, IsolationKind kind,
                     const EnumState& parent)>
      on_fathom;
  /// A feasible state was appended and its cut emitted, in discovery order.
  std::function<void(const EnumState& state, const CutSet& cut)> on_emit;
  std::function<void(const TSideDivergence&)> on_divergence;
};

struct EnumOptions {
  TSideMode t_side_mode = TSideMode::plsa;
  bool prune_isolated = true;  // drop sons condemned with their offspring
  bool prune_parent = true;    // remove parents condemned by layer isolation
  const EnumObserver* observer = nullptr;
};

/// True iff both G(S(X)) and G(T(X)) are connected (source side from node 1,
/// sink side from node n). Requires x.width == node_count - 2.
bool is_feasible(const Network& net, const NodeVector& x);

/// Judges the candidate son of `parent` that adds node `added`. `layering`
/// must belong to `net`, which must already be layer-ordered (renumbered).
/// Returns the strongest applicable verdict.
IsolationVerdict classify_isolation(const Network& net,
                                    const Layering& layering,
                                    const EnumState& parent, NodeId added);

/// Exact T-side connectivity of a son's bipartition. In edge_node mode the
/// reduced test on U(parent) minus the added node is evaluated as well and
/// any disagreement is reported through `divergence`; the exact result is
/// returned either way.
bool t_side_check(const Network& net, const EnumState& son, TSideMode mode,
                  const EnumState* parent = nullptr,
                  TSideDivergence* divergence = nullptr);

/// Sweeps all 2^(n-2) node vectors in binary-increment order, emitting the
/// cut of every feasible bipartition.
std::pair<McCatalog, EnumStats> enumerate_baseline(const Network& net);

/// Recursive enumeration: renumbers the nodes into layer order, seeds the
/// two one-coordinate states, then per iteration derives each frontier
/// state's son in O(1) and prunes infeasible subtrees. The catalog equals
/// enumerate_baseline's as a set.
std::pair<McCatalog, EnumStats> enumerate_recursive(
    const Network& net, const EnumOptions& options = {});

}  // namespace cutbat
