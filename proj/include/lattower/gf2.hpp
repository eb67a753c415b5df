#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lattower::gf2 {

inline constexpr int kMaxWidth = 64;

/// A vector in F_2^width; bit i is coordinate i (sign -1 <-> bit 1).
class SignVector {
 public:
  SignVector() = default;
  SignVector(int width, std::uint64_t bits);

  static SignVector zero(int width) { return SignVector(width, 0); }
  static SignVector unit(int width, int coord);
  static SignVector ones(int width);
  /// "101" -> coordinates 0 and 2 set.
  static SignVector from_string(std::string_view bits);

  int width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  bool get(int coord) const { return (bits_ >> coord) & 1u; }
  bool is_zero() const { return bits_ == 0; }
  int weight() const;
  /// Lowest set coordinate, -1 for the zero vector.
  int pivot() const;

  SignVector operator+(const SignVector& other) const;
  bool operator==(const SignVector&) const = default;
  auto operator<=>(const SignVector&) const = default;

  std::string to_string() const;

 private:
  int width_ = 0;
  std::uint64_t bits_ = 0;
};

/// A subspace of F_2^width held in reduced row-echelon form. Two equal
/// subspaces always hold identical bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int width) : width_(width) {}

  static Subspace zero(int width) { return Subspace(width); }
  static Subspace full(int width);
  static Subspace span(int width, std::span<const SignVector> vectors);
  static Subspace span(int width, std::initializer_list<SignVector> vectors) {
    return span(width, std::span<const SignVector>(vectors.begin(), vectors.size()));
  }
  static Subspace from_strings(int width, const std::vector<std::string>& rows);

  int width() const { return width_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  /// Basis vectors sorted by pivot.
  const std::vector<SignVector>& basis() const { return basis_; }

  bool contains(const SignVector& v) const;
  bool is_subspace_of(const Subspace& other) const;
  /// True iff some vector in the subspace has bit 1 at coord.
  bool active(int coord) const;

  /// All 2^dim vectors, in Gray-free lexicographic combination order.
  std::vector<SignVector> elements() const;

  std::vector<std::string> to_strings() const;

  bool operator==(const Subspace&) const = default;
  auto operator<=>(const Subspace&) const = default;

 private:
  void insert(SignVector v);

  int width_ = 0;
  std::vector<SignVector> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace annihilator(const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Image of s under keeping only coords (in the given order).
Subspace project(const Subspace& s, std::span<const int> coords);

/// Calls visit(subspace) for every subspace of F_2^width, by recursion over
/// reduced echelon forms. Each subspace is produced exactly once.
template <typename Visit>
void for_each_subspace(int width, Visit&& visit);

/// The product-one kernel {v : sum of coordinates = 0}.
Subspace even_weight(int width);

}  // namespace lattower::gf2

#include "lattower/gf2_impl.hpp"
