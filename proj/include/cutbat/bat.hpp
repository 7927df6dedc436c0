#pragma once

#include <cstdint>
#include <vector>

#include "cutbat/network.hpp"

namespace cutbat {

/// Fixed-width binary vector over the interior nodes. Coordinate k (1-based)
/// stands for node k+1; coordinate 1 is the least significant / first
/// incremented one. S(X) = {1} plus the marked nodes, T(X) the complement,
/// so the sink is always on the T side.
struct NodeVector {
  std::uint64_t bits = 0;  // coordinate k stored at bit k; bit 0 unused
  int width = 0;

  explicit NodeVector(int width_ = 0) : width(width_) {}

  bool get(int k) const { return (bits >> k) & 1u; }
  void set(int k) { bits |= std::uint64_t{1} << k; }
  void clear(int k) { bits &= ~(std::uint64_t{1} << k); }

  std::uint64_t coordinate_mask() const {
    return ((std::uint64_t{1} << width) - 1) << 1;
  }
  bool all_ones() const { return bits == coordinate_mask(); }

  /// Node-id mask of S(X): the marked interior nodes plus node 1.
  NodeMask s_side_mask() const { return (bits << 1) | node_bit(1); }

  bool operator==(const NodeVector&) const = default;
};

/// Advances x to its successor: the lowest zero coordinate flips to one and
/// all coordinates below it reset to zero. Returns true when x was already
/// all-ones (sweep exhausted; x is left unchanged). Starting from all-zeros
/// this visits all 2^width vectors exactly once.
bool bat_next(NodeVector& x);

/// A recursive-enumeration record: vector prefix (coordinates above the
/// spawning iteration are implicitly zero), its S side, its edge-node set
/// U(X) = {u in T(X) adjacent to S(X)}, and bookkeeping flags. `alive` goes
/// false once the state is fathomed as a parent; `feasible` records whether
/// the state's own bipartition passed both connectivity checks.
struct EnumState {
  NodeVector vector;
  NodeMask s_side = 0;
  NodeMask edge_nodes = 0;
  bool alive = true;
  bool feasible = false;
  int spawn_iteration = 1;
};

/// Derives the candidate son that adds node v = iteration + 1: the parent
/// vector with coordinate `iteration` set, s_side extended by v, and
/// U updated as (U(parent) - {v}) union (neighbors(v) - S(son)). No
/// feasibility judgment is made here.
EnumState spawn_son(const EnumState& parent, int iteration,
                    const Network& net);

/// Append-only frontier of a recursive run. snapshot_count (N*) freezes the
/// number of states at the start of an iteration; sons spawned during the
/// iteration are appended behind it.
struct RecursiveFrontier {
  std::vector<EnumState> states;
  int iteration = 1;
  std::size_t snapshot_count = 0;

  std::size_t total_count() const { return states.size(); }
};

}  // namespace cutbat
