#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace lattower {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// A finite partial order on 0..n-1, stored as up-set and down-set bit rows.
/// Knows nothing about groups; everything it exposes is order-theoretic.
class Poset {
 public:
  Poset() = default;

  /// leq(i, j) must be a partial order; it is called n^2 times.
  static Poset from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return up_[i][j]; }
  const Bitset& up(std::size_t i) const { return up_[i]; }
  const Bitset& down(std::size_t i) const { return down_[i]; }

  /// Covering pairs (lower, upper), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_covers_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_covers_[i]; }

  /// Length of the longest chain from a minimal element up to i.
  int height(std::size_t i) const { return height_[i]; }
  /// Length of the longest chain from i up to a maximal element.
  int depth(std::size_t i) const { return depth_[i]; }

  /// Unique minimum / maximum; throws if absent.
  std::size_t bottom() const;
  std::size_t top() const;

  /// Greatest lower bound / least upper bound read off the order; throws if
  /// the pair has none (i.e. the poset is not a lattice).
  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;

  /// Length of the longest chain in [lo, hi].
  int interval_length(std::size_t lo, std::size_t hi) const;

 private:
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<int> height_;
  std::vector<int> depth_;
};

}  // namespace lattower
