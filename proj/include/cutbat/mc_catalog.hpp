#pragma once

#include <set>
#include <vector>

#include "cutbat/network.hpp"

namespace cutbat {

/// Ordered set of distinct cuts; insertion order is discovery order.
class McCatalog {
 public:
  /// Returns false (and keeps the catalog unchanged) for duplicates.
  bool insert(CutSet cut) {
    if (!seen_.insert(cut).second) return false;
    cuts_.push_back(std::move(cut));
    return true;
  }

  bool contains(const CutSet& cut) const { return seen_.count(cut) > 0; }

  std::size_t count() const { return cuts_.size(); }
  const std::vector<CutSet>& cuts() const { return cuts_; }

  std::set<CutSet> as_set() const { return seen_; }

  bool same_cuts(const McCatalog& other) const {
    return seen_ == other.seen_;
  }

 private:
  std::vector<CutSet> cuts_;
  std::set<CutSet> seen_;
};

}  // namespace cutbat
