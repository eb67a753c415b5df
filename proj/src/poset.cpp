#include "lattower/poset.hpp"

#include <algorithm>
#include <numeric>

#include "lattower/error.hpp"

namespace lattower {

Poset Poset::from_relation(std::size_t n,
                           const std::function<bool(std::size_t, std::size_t)>& leq) {
  Poset p;
  p.up_.assign(n, Bitset(n));
  p.down_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (leq(i, j)) {
        p.up_[i].set(j);
        p.down_[j].set(i);
      }
    }
  }
  p.upper_covers_.assign(n, {});
  p.lower_covers_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    Bitset strict_up = p.up_[i];
    strict_up.reset(i);
    for (auto j = strict_up.find_first(); j != Bitset::npos; j = strict_up.find_next(j)) {
      Bitset strict_down = p.down_[j];
      strict_down.reset(j);
      if (!strict_up.intersects(strict_down)) {
        p.covers_.emplace_back(i, j);
        p.upper_covers_[i].push_back(j);
        p.lower_covers_[j].push_back(i);
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());

  // Longest chains: process in order of down-set size, which is a linear
  // extension.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.down_[a].count() < p.down_[b].count();
  });
  p.height_.assign(n, 0);
  p.depth_.assign(n, 0);
  for (std::size_t v : order) {
    for (std::size_t lo : p.lower_covers_[v]) p.height_[v] = std::max(p.height_[v], p.height_[lo] + 1);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t hi : p.upper_covers_[*it]) p.depth_[*it] = std::max(p.depth_[*it], p.depth_[hi] + 1);
  }
  return p;
}

std::size_t Poset::bottom() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i].all()) return i;
  }
  throw Error(ErrorKind::Mismatch, "poset has no minimum");
}

std::size_t Poset::top() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i].all()) return i;
  }
  throw Error(ErrorKind::Mismatch, "poset has no maximum");
}

std::size_t Poset::meet(std::size_t i, std::size_t j) const {
  const Bitset lower = down_[i] & down_[j];
  const std::size_t want = lower.count();
  for (auto z = lower.find_first(); z != Bitset::npos; z = lower.find_next(z)) {
    if (down_[z].count() == want) return z;
  }
  throw Error(ErrorKind::Mismatch, "pair has no meet");
}

std::size_t Poset::join(std::size_t i, std::size_t j) const {
  const Bitset upper = up_[i] & up_[j];
  const std::size_t want = upper.count();
  for (auto z = upper.find_first(); z != Bitset::npos; z = upper.find_next(z)) {
    if (up_[z].count() == want) return z;
  }
  throw Error(ErrorKind::Mismatch, "pair has no join");
}

int Poset::interval_length(std::size_t lo, std::size_t hi) const {
  if (!leq(lo, hi)) return -1;
  // Longest path lo -> hi along covers, restricted to the interval.
  const Bitset inside = up_[lo] & down_[hi];
  std::vector<std::size_t> members;
  for (auto z = inside.find_first(); z != Bitset::npos; z = inside.find_next(z)) members.push_back(z);
  std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
    return down_[a].count() < down_[b].count();
  });
  std::vector<int> best(size(), -1);
  best[lo] = 0;
  for (std::size_t v : members) {
    for (std::size_t w : lower_covers_[v]) {
      if (inside[w] && best[w] >= 0) best[v] = std::max(best[v], best[w] + 1);
    }
  }
  return best[hi];
}

}  // namespace lattower
