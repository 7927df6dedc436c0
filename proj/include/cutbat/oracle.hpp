#pragma once

#include "cutbat/mc_catalog.hpp"
#include "cutbat/network.hpp"

namespace cutbat {

/// Exhaustive ground truth: enumerates all 2^m arc subsets and keeps C iff
/// removing C disconnects the source from the sink and restoring any single
/// arc of C reconnects them. Deliberately independent of the node-vector
/// enumeration path. Guarded to desk scale via max_arcs.
McCatalog mc_oracle(const Network& net, int max_arcs = 24);

/// Single-set form of the oracle's predicate: removing `cut` disconnects
/// source from sink and no proper subset does. Requires m <= 63.
bool is_minimal_cut(const Network& net, const CutSet& cut);

}  // namespace cutbat
