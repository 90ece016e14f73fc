#pragma once

// Mutable membership over the pair indices of a universe: a byte map for
// universes up to kDenseLimit pairs, a hash set beyond that.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "netmed/netcore.hpp"

namespace netmed::detail {

class PairMask {
 public:
  static constexpr PairIndex kDenseLimit = PairIndex{1} << 26;

  explicit PairMask(const EdgeSet& initial) : dense_(initial.universe().pair_count() <= kDenseLimit) {
    if (dense_) {
      bytes_.assign(initial.universe().pair_count(), 0);
      for (PairIndex k : initial) bytes_[k] = 1;
    } else {
      sparse_.reserve(initial.size() * 2);
      sparse_.insert(initial.begin(), initial.end());
    }
  }

  bool contains(PairIndex k) const {
    return dense_ ? bytes_[k] != 0 : sparse_.count(k) != 0;
  }

  void insert(PairIndex k) {
    if (dense_) {
      bytes_[k] = 1;
    } else {
      sparse_.insert(k);
    }
  }

  void erase(PairIndex k) {
    if (dense_) {
      bytes_[k] = 0;
    } else {
      sparse_.erase(k);
    }
  }

 private:
  bool dense_;
  std::vector<std::uint8_t> bytes_;
  std::unordered_set<PairIndex> sparse_;
};

}  // namespace netmed::detail
