#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cutbat {

using NodeId = int;  // 1-based; node 1 is the source, node n the sink
using ArcId = int;   // 1-based; arc k is named "a<k>" in network files

// Node subsets are passed around as bitmasks whenever the node count allows
// it: bit v (1-based) marks node v, bit 0 stays clear. Operations that sweep
// the 2^(n-2) vector space refuse networks beyond kMaxMaskNodes anyway.
using NodeMask = std::uint64_t;

inline constexpr int kMaxMaskNodes = 63;

constexpr NodeMask node_bit(NodeId v) { return NodeMask{1} << v; }

constexpr bool mask_contains(NodeMask mask, NodeId v) {
  return (mask >> v) & 1u;
}

std::vector<NodeId> mask_to_nodes(NodeMask mask);
NodeMask nodes_to_mask(std::span<const NodeId> nodes);

/// Undirected arc with endpoints normalized so that u < v.
struct Arc {
  ArcId id;
  NodeId u;
  NodeId v;

  bool operator==(const Arc&) const = default;
};

/// Raised by parse_network; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Raised when a desk-scale resource guard trips (exhaustive sweeps, term
/// limits). Mapped to exit code 3 by the CLI.
class GuardError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonically sorted set of arc ids. No minimality claim by itself.
struct CutSet {
  std::vector<ArcId> arc_ids;  // strictly ascending

  CutSet() = default;
  explicit CutSet(std::vector<ArcId> ids);

  std::size_t size() const { return arc_ids.size(); }
  bool contains(ArcId a) const;

  bool operator==(const CutSet&) const = default;
  bool operator<(const CutSet& other) const { return arc_ids < other.arc_ids; }
};

std::string to_string(const CutSet& cut);

/// Immutable two-terminal network. Nodes are normalized at construction so
/// the source is 1 and the sink is n; the original labels survive in a side
/// map for display. Safe to share across threads.
class Network {
 public:
  /// `probabilities` is either empty or holds one working probability per
  /// arc, indexed by arc id - 1. `original_labels` maps normalized id ->
  /// original label and may be empty for identity.
  Network(int node_count, std::vector<Arc> arcs,
          std::vector<double> probabilities = {},
          std::vector<NodeId> original_labels = {});

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  NodeId source() const { return 1; }
  NodeId sink() const { return node_count_; }

  std::span<const Arc> arcs() const { return arcs_; }
  const Arc& arc(ArcId id) const;

  bool has_probabilities() const { return !probabilities_.empty(); }
  double probability(ArcId id) const;
  std::span<const double> probabilities() const { return probabilities_; }

  /// (neighbor, arc id) pairs sorted by neighbor id.
  std::span<const std::pair<NodeId, ArcId>> adjacency(NodeId v) const;

  /// All nodes adjacent to v, lower-numbered ones included.
  std::vector<NodeId> neighbors(NodeId v) const;

  /// Bitmask of neighbors(v); requires node_count() <= kMaxMaskNodes.
  NodeMask neighbor_mask(NodeId v) const;

  NodeMask all_nodes_mask() const;

  NodeId original_label(NodeId v) const;

  bool structurally_equal(const Network& other) const;

 private:
  void check_node(NodeId v) const;

  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<double> probabilities_;
  std::vector<NodeId> original_labels_;
  std::vector<std::vector<std::pair<NodeId, ArcId>>> adjacency_;
  std::vector<NodeMask> neighbor_masks_;  // empty when n > kMaxMaskNodes
};

/// Parses the line-based network file format:
///
///   nodes <n>
///   source <id>
///   sink <id>
///   arc a1 <u> <v> [<p>]
///   ...
///
/// `#` starts a comment. Arc names must be a1..am in order; probabilities
/// are all-or-nothing. Parsing is all-or-nothing and reports the first
/// offending line.
Network parse_network(std::string_view text);

/// Reads and parses a network file from disk.
Network load_network(const std::string& path);

/// Emits the normalized form (source 1, sink n, endpoints u < v).
/// parse(serialize(parse(x))) is structurally identical to parse(x).
std::string serialize(const Network& net);

struct ValidationReport {
  bool connected = false;
  std::vector<NodeId> nodes_off_all_paths;
  std::vector<std::string> warnings;
};

/// Report-only diagnostics: breadth-first connectivity from the source and,
/// at desk scale (n <= 16), exhaustive simple-path enumeration to find nodes
/// that lie on no source-sink path.
ValidationReport validate(const Network& net);

/// Every arc with exactly one endpoint in s_side, canonically sorted.
/// Requires 1 in s_side and n not in s_side. No minimality claim.
CutSet cut_of(const Network& net, NodeMask s_side);

}  // namespace cutbat
