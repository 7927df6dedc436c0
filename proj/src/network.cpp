#include "cutbat/network.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace cutbat {

std::vector<NodeId> mask_to_nodes(NodeMask mask) {
  std::vector<NodeId> out;
  while (mask != 0) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

NodeMask nodes_to_mask(std::span<const NodeId> nodes) {
  NodeMask mask = 0;
  for (NodeId v : nodes) mask |= node_bit(v);
  return mask;
}

CutSet::CutSet(std::vector<ArcId> ids) : arc_ids(std::move(ids)) {
  std::sort(arc_ids.begin(), arc_ids.end());
  arc_ids.erase(std::unique(arc_ids.begin(), arc_ids.end()), arc_ids.end());
}

bool CutSet::contains(ArcId a) const {
  return std::binary_search(arc_ids.begin(), arc_ids.end(), a);
}

std::string to_string(const CutSet& cut) {
  std::string out;
  for (std::size_t i = 0; i < cut.arc_ids.size(); ++i) {
    if (i > 0) out += ' ';
    out += 'a';
    out += std::to_string(cut.arc_ids[i]);
  }
  return out;
}

Network::Network(int node_count, std::vector<Arc> arcs,
                 std::vector<double> probabilities,
                 std::vector<NodeId> original_labels)
    : node_count_(node_count),
      arcs_(std::move(arcs)),
      probabilities_(std::move(probabilities)),
      original_labels_(std::move(original_labels)) {
  if (node_count_ < 2) throw std::invalid_argument("need at least two nodes");
  if (!probabilities_.empty() && probabilities_.size() != arcs_.size())
    throw std::invalid_argument("probability table size mismatch");
  if (!original_labels_.empty() &&
      original_labels_.size() != static_cast<std::size_t>(node_count_) + 1)
    throw std::invalid_argument("label table size mismatch");

  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    Arc& a = arcs_[i];
    if (a.id != static_cast<ArcId>(i) + 1)
      throw std::invalid_argument("arc ids must be 1..m in order");
    if (a.u > a.v) std::swap(a.u, a.v);
    if (a.u < 1 || a.v > node_count_)
      throw std::invalid_argument("arc endpoint out of range");
    if (a.u == a.v) throw std::invalid_argument("self-loop");
    if (!seen.insert({a.u, a.v}).second)
      throw std::invalid_argument("parallel arc");
  }
  for (double p : probabilities_) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("probability outside [0,1]");
  }

  adjacency_.assign(node_count_ + 1, {});
  for (const Arc& a : arcs_) {
    adjacency_[a.u].push_back({a.v, a.id});
    adjacency_[a.v].push_back({a.u, a.id});
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  if (node_count_ <= kMaxMaskNodes) {
    neighbor_masks_.assign(node_count_ + 1, 0);
    for (const Arc& a : arcs_) {
      neighbor_masks_[a.u] |= node_bit(a.v);
      neighbor_masks_[a.v] |= node_bit(a.u);
    }
  }
}

void Network::check_node(NodeId v) const {
  if (v < 1 || v > node_count_)
    throw std::invalid_argument("node index out of range: " +
                                std::to_string(v));
}

const Arc& Network::arc(ArcId id) const {
  if (id < 1 || id > arc_count())
    throw std::invalid_argument("arc id out of range: " + std::to_string(id));
  return arcs_[id - 1];
}

double Network::probability(ArcId id) const {
  if (!has_probabilities())
    throw std::invalid_argument("network carries no probabilities");
  arc(id);
  return probabilities_[id - 1];
}

std::span<const std::pair<NodeId, ArcId>> Network::adjacency(NodeId v) const {
  check_node(v);
  return adjacency_[v];
}

std::vector<NodeId> Network::neighbors(NodeId v) const {
  check_node(v);
  std::vector<NodeId> out;
  out.reserve(adjacency_[v].size());
  for (const auto& [w, a] : adjacency_[v]) out.push_back(w);
  return out;
}

NodeMask Network::neighbor_mask(NodeId v) const {
  check_node(v);
  if (neighbor_masks_.empty())
    throw GuardError("neighbor masks need node_count <= 63");
  return neighbor_masks_[v];
}

NodeMask Network::all_nodes_mask() const {
  if (node_count_ > kMaxMaskNodes)
    throw GuardError("node masks need node_count <= 63");
  return (node_bit(node_count_) << 1) - 2;  // bits 1..n
}

NodeId Network::original_label(NodeId v) const {
  check_node(v);
  return original_labels_.empty() ? v : original_labels_[v];
}

bool Network::structurally_equal(const Network& other) const {
  return node_count_ == other.node_count_ && arcs_ == other.arcs_ &&
         probabilities_ == other.probabilities_;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    ++number;
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line{number, {}};
    std::istringstream stream{std::string(raw)};
    std::string token;
    while (stream >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

long parse_int(const Line& line, const std::string& token,
               const char* what) {
  long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line.number, std::string("bad ") + what + " '" + token +
                                      "'");
  return value;
}

double parse_prob(const Line& line, const std::string& token) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line.number, "bad probability '" + token + "'");
  return value;
}

}  // namespace

Network parse_network(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.size() < 3) throw ParseError(1, "missing header lines");

  auto expect_header = [](const Line& line, const std::string& keyword) {
    if (line.tokens.size() != 2 || line.tokens[0] != keyword)
      throw ParseError(line.number, "expected '" + keyword + " <value>'");
  };

  expect_header(lines[0], "nodes");
  long n = parse_int(lines[0], lines[0].tokens[1], "node count");
  if (n < 2) throw ParseError(lines[0].number, "need at least two nodes");

  expect_header(lines[1], "source");
  long source = parse_int(lines[1], lines[1].tokens[1], "source");
  expect_header(lines[2], "sink");
  long sink = parse_int(lines[2], lines[2].tokens[1], "sink");
  if (source < 1 || source > n)
    throw ParseError(lines[1].number, "source out of range");
  if (sink < 1 || sink > n) throw ParseError(lines[2].number, "sink out of range");
  if (source == sink) throw ParseError(lines[2].number, "source equals sink");

  struct RawArc {
    int line;
    NodeId u, v;
    bool has_p;
    double p;
  };
  std::vector<RawArc> raw;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "arc")
      throw ParseError(line.number, "expected 'arc ...'");
    if (line.tokens.size() != 4 && line.tokens.size() != 5)
      throw ParseError(line.number, "expected 'arc <name> <u> <v> [<p>]'");
    std::string expected = "a" + std::to_string(raw.size() + 1);
    if (line.tokens[1] != expected)
      throw ParseError(line.number, "arc name '" + line.tokens[1] +
                                        "' out of order, expected '" +
                                        expected + "'");
    long u = parse_int(line, line.tokens[2], "endpoint");
    long v = parse_int(line, line.tokens[3], "endpoint");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line.number, "endpoint out of range");
    if (u == v) throw ParseError(line.number, "self-loop");
    RawArc arc{line.number, static_cast<NodeId>(u), static_cast<NodeId>(v),
               false, 0.0};
    if (line.tokens.size() == 5) {
      arc.has_p = true;
      arc.p = parse_prob(line, line.tokens[4]);
      if (!(arc.p >= 0.0 && arc.p <= 1.0))
        throw ParseError(line.number, "probability outside [0,1]");
    }
    raw.push_back(arc);
  }
  if (!raw.empty()) {
    bool first = raw.front().has_p;
    for (const RawArc& a : raw)
      if (a.has_p != first)
        throw ParseError(a.line,
                         "probabilities must be present on all arcs or none");
  }

  // Normalize: source -> 1, sink -> n, remaining labels keep ascending order.
  std::vector<NodeId> forward(n + 1, 0);  // original -> normalized
  forward[source] = 1;
  forward[sink] = static_cast<NodeId>(n);
  NodeId next = 2;
  for (NodeId v = 1; v <= n; ++v) {
    if (v == source || v == sink) continue;
    forward[v] = next++;
  }
  std::vector<NodeId> labels(n + 1, 0);  // normalized -> original
  for (NodeId v = 1; v <= n; ++v) labels[forward[v]] = v;

  std::vector<Arc> arcs;
  std::vector<double> probs;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    NodeId u = forward[raw[i].u];
    NodeId v = forward[raw[i].v];
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ParseError(raw[i].line, "parallel arc");
    arcs.push_back({static_cast<ArcId>(i) + 1, u, v});
    if (raw[i].has_p) probs.push_back(raw[i].p);
  }

  return Network(static_cast<int>(n), std::move(arcs), std::move(probs),
                 std::move(labels));
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str());
}

namespace {

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

std::string serialize(const Network& net) {
  std::string out;
  out += "nodes " + std::to_string(net.node_count()) + "\n";
  out += "source 1\n";
  out += "sink " + std::to_string(net.node_count()) + "\n";
  for (const Arc& a : net.arcs()) {
    out += "arc a" + std::to_string(a.id) + " " + std::to_string(a.u) + " " +
           std::to_string(a.v);
    if (net.has_probabilities())
      out += " " + format_double(net.probability(a.id));
    out += "\n";
  }
  return out;
}

namespace {

// Depth-first enumeration of simple source-sink paths, marking every node
// that appears on at least one of them. Aborts past a step budget so a dense
// n=16 instance cannot hang the advisory check.
bool mark_path_nodes(const Network& net, std::vector<bool>& on_path,
                     std::int64_t budget) {
  const NodeId sink = net.sink();
  std::vector<bool> in_stack(net.node_count() + 1, false);
  std::vector<NodeId> stack;
  std::int64_t steps = 0;
  bool complete = true;

  auto dfs = [&](auto&& self, NodeId v) -> void {
    if (!complete) return;
    if (++steps > budget) {
      complete = false;
      return;
    }
    if (v == sink) {
      for (NodeId w : stack) on_path[w] = true;
      return;
    }
    for (const auto& [w, a] : net.adjacency(v)) {
      if (in_stack[w]) continue;
      in_stack[w] = true;
      stack.push_back(w);
      self(self, w);
      stack.pop_back();
      in_stack[w] = false;
    }
  };

  in_stack[net.source()] = true;
  stack.push_back(net.source());
  dfs(dfs, net.source());
  return complete;
}

}  // namespace

ValidationReport validate(const Network& net) {
  ValidationReport report;

  std::vector<bool> reached(net.node_count() + 1, false);
  std::vector<NodeId> queue{net.source()};
  reached[net.source()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& [w, a] : net.adjacency(queue[head])) {
      if (!reached[w]) {
        reached[w] = true;
        queue.push_back(w);
      }
    }
  }
  report.connected = queue.size() == static_cast<std::size_t>(net.node_count());
  if (!report.connected)
    report.warnings.push_back("network is not connected from the source");

  if (net.node_count() <= 16) {
    std::vector<bool> on_path(net.node_count() + 1, false);
    bool complete = mark_path_nodes(net, on_path, 20'000'000);
    if (!complete) {
      report.warnings.push_back(
          "simple-path check truncated; node coverage may be incomplete");
    }
    for (NodeId v = 1; v <= net.node_count(); ++v)
      if (!on_path[v]) report.nodes_off_all_paths.push_back(v);
  } else {
    report.warnings.push_back(
        "simple-path check skipped (more than 16 nodes)");
  }
  return report;
}

CutSet cut_of(const Network& net, NodeMask s_side) {
  if (!mask_contains(s_side, net.source()))
    throw std::invalid_argument("cut_of: source must be on the S side");
  if (mask_contains(s_side, net.sink()))
    throw std::invalid_argument("cut_of: sink must not be on the S side");
  CutSet cut;
  for (const Arc& a : net.arcs()) {
    if (mask_contains(s_side, a.u) != mask_contains(s_side, a.v))
      cut.arc_ids.push_back(a.id);
  }
  return cut;
}

}  // namespace cutbat
