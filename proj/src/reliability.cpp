#include "cutbat/reliability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cutbat {

namespace {

// Neumaier-compensated accumulator; inclusion-exclusion alternates signs of
// near-cancelling terms, so naive summation would eat the 1e-12 tolerance.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value))
      compensation += (sum - t) + value;
    else
      compensation += (value - t) + sum;
    sum = t;
  }

  double value() const { return sum + compensation; }
};

}  // namespace

FailureModel FailureModel::from_network(const Network& net) {
  if (!net.has_probabilities())
    throw std::invalid_argument(
        "network carries no per-arc probabilities; supply a uniform one");
  FailureModel model;
  model.q.reserve(net.arc_count());
  for (double p : net.probabilities()) model.q.push_back(1.0 - p);
  return model;
}

FailureModel FailureModel::uniform(int arc_count, double working_probability) {
  if (!(working_probability >= 0.0 && working_probability <= 1.0))
    throw std::invalid_argument("working probability outside [0,1]");
  FailureModel model;
  model.q.assign(arc_count, 1.0 - working_probability);
  return model;
}

double event_union_prob(std::span<const CutSet> cuts,
                        const FailureModel& model) {
  if (cuts.empty()) throw std::invalid_argument("empty cut list");
  std::set<ArcId> arcs;
  for (const CutSet& cut : cuts)
    arcs.insert(cut.arc_ids.begin(), cut.arc_ids.end());
  double product = 1.0;
  for (ArcId a : arcs) product *= model.failure(a);
  return product;
}

ReliabilityResult unreliability_iet(const McCatalog& catalog,
                                    const FailureModel& model, int max_cuts) {
  const int c = static_cast<int>(catalog.count());
  if (c == 0) throw std::invalid_argument("empty catalog");
  if (c > max_cuts || c > 26)
    throw GuardError("unreliability_iet: catalog too large for 2^c terms");

  std::vector<std::uint64_t> cut_masks(c, 0);
  std::vector<double> q_by_index;
  {
    // Arcs outside every cut never matter; reindex the ones that do.
    std::vector<ArcId> arcs;
    for (const CutSet& cut : catalog.cuts())
      arcs.insert(arcs.end(), cut.arc_ids.begin(), cut.arc_ids.end());
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    if (arcs.size() > 63)
      throw GuardError("unreliability_iet: more than 63 distinct arcs");
    for (ArcId a : arcs) q_by_index.push_back(model.failure(a));
    for (int i = 0; i < c; ++i) {
      for (ArcId a : catalog.cuts()[i].arc_ids) {
        const auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
        cut_masks[i] |= std::uint64_t{1} << (it - arcs.begin());
      }
    }
  }

  CompensatedSum total;
  const std::uint64_t limit = std::uint64_t{1} << c;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::uint64_t arc_union = 0;
    std::uint64_t bits = mask;
    while (bits != 0) {
      arc_union |= cut_masks[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    double product = 1.0;
    while (arc_union != 0) {
      product *= q_by_index[std::countr_zero(arc_union)];
      arc_union &= arc_union - 1;
    }
    total.add(std::popcount(mask) % 2 == 1 ? product : -product);
  }

  ReliabilityResult result;
  result.unreliability = total.value();
  if (result.unreliability < 0.0 && result.unreliability > -1e-9)
    result.unreliability = 0.0;
  if (result.unreliability > 1.0 && result.unreliability < 1.0 + 1e-9)
    result.unreliability = 1.0;
  result.reliability = 1.0 - result.unreliability;
  result.terms_evaluated = limit - 1;
  result.method = "iet";
  return result;
}

ReliabilityResult reliability_brute(const Network& net,
                                    const FailureModel& model, int max_arcs) {
  const int m = net.arc_count();
  if (static_cast<int>(model.q.size()) != m)
    throw std::invalid_argument("model domain must equal the arc set");
  if (m > max_arcs || m > 26)
    throw GuardError("reliability_brute: too many arcs for a 2^m sweep");
  if (net.node_count() > kMaxMaskNodes)
    throw GuardError("reliability_brute: too many nodes");

  // (arc index, other endpoint) pairs per node, for the per-state search.
  std::vector<std::vector<std::pair<int, int>>> adj(net.node_count() + 1);
  for (const Arc& a : net.arcs()) {
    adj[a.u].push_back({a.id - 1, a.v});
    adj[a.v].push_back({a.id - 1, a.u});
  }
  const int sink = net.sink();

  CompensatedSum reliable;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t working = 0; working < limit; ++working) {
    double probability = 1.0;
    for (int a = 0; a < m; ++a)
      probability *= ((working >> a) & 1u) ? (1.0 - model.q[a]) : model.q[a];

    std::uint64_t visited = 2;  // node 1
    int stack[64];
    int top = 0;
    stack[top++] = 1;
    bool connected = false;
    while (top > 0 && !connected) {
      const int v = stack[--top];
      for (const auto& [arc, w] : adj[v]) {
        if (!((working >> arc) & 1u)) continue;
        if ((visited >> w) & 1u) continue;
        if (w == sink) {
          connected = true;
          break;
        }
        visited |= std::uint64_t{1} << w;
        stack[top++] = w;
      }
    }
    if (connected) reliable.add(probability);
  }

  ReliabilityResult result;
  result.reliability = reliable.value();
  result.unreliability = 1.0 - result.reliability;
  result.terms_evaluated = limit;
  result.method = "brute";
  return result;
}

}  // namespace cutbat
