#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cutbat/mc_catalog.hpp"
#include "cutbat/network.hpp"

namespace cutbat {

/// Per-arc failure probabilities q = 1 - working probability, indexed by
/// arc id - 1. Arcs fail independently.
struct FailureModel {
  std::vector<double> q;

  static FailureModel from_network(const Network& net);
  static FailureModel uniform(int arc_count, double working_probability);

  double failure(ArcId id) const { return q.at(id - 1); }
  double working(ArcId id) const { return 1.0 - q.at(id - 1); }
};

struct ReliabilityResult {
  double reliability = 0.0;
  double unreliability = 0.0;
  std::uint64_t terms_evaluated = 0;
  std::string method;
};

/// Probability that every arc in the union of the given cut sets fails
/// simultaneously.
double event_union_prob(std::span<const CutSet> cuts,
                        const FailureModel& model);

/// Exact unreliability by inclusion-exclusion over the catalog: the
/// alternating-sign sum over all non-empty cut subsets of the probability
/// that the subset's arc union fails entirely. Subsets are enumerated by
/// increasing integer mask and accumulated with compensated summation.
/// Evaluates 2^c - 1 terms; guarded by max_cuts (default 20).
ReliabilityResult unreliability_iet(const McCatalog& catalog,
                                    const FailureModel& model,
                                    int max_cuts = 20);

/// Ground-truth reliability: sums the probability of every arc-state vector
/// whose surviving subgraph connects source to sink. Guarded by max_arcs.
ReliabilityResult reliability_brute(const Network& net,
                                    const FailureModel& model,
                                    int max_arcs = 24);

}  // namespace cutbat
