#pragma once

// Template definitions for gf2.hpp.

namespace lattower::gf2 {

namespace detail {

// pivots: strictly increasing pivot columns chosen so far. For each row,
// bits at pivot columns other than its own are 0 and bits left of its pivot
// are 0; remaining non-pivot columns right of the pivot are free.
template <typename Visit>
void enumerate_rref(int width, int next_col, std::vector<int>& pivots, Visit& visit) {
  // Emit the family of echelon forms for the current pivot set.
  const int rows = static_cast<int>(pivots.size());
  std::vector<std::vector<int>> free_cols(static_cast<std::size_t>(rows));
  int total_free = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < width; ++c) {
      bool is_pivot = false;
      for (int p : pivots) is_pivot = is_pivot || p == c;
      if (!is_pivot) free_cols[static_cast<std::size_t>(r)].push_back(c);
    }
    total_free += static_cast<int>(free_cols[static_cast<std::size_t>(r)].size());
  }
  const std::uint64_t combos = std::uint64_t{1} << total_free;
  std::vector<SignVector> rowsv(static_cast<std::size_t>(rows));
  for (std::uint64_t m = 0; m < combos; ++m) {
    int bit = 0;
    for (int r = 0; r < rows; ++r) {
      std::uint64_t v = std::uint64_t{1} << pivots[static_cast<std::size_t>(r)];
      for (int c : free_cols[static_cast<std::size_t>(r)]) {
        if ((m >> bit) & 1u) v |= std::uint64_t{1} << c;
        ++bit;
      }
      rowsv[static_cast<std::size_t>(r)] = SignVector(width, v);
    }
    visit(Subspace::span(width, rowsv));
  }
  for (int c = next_col; c < width; ++c) {
    pivots.push_back(c);
    enumerate_rref(width, c + 1, pivots, visit);
    pivots.pop_back();
  }
}

}  // namespace detail

template <typename Visit>
void for_each_subspace(int width, Visit&& visit) {
  std::vector<int> pivots;
  detail::enumerate_rref(width, 0, pivots, visit);
}

}  // namespace lattower::gf2
