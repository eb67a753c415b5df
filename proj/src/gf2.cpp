#include "lattower/gf2.hpp"

#include <algorithm>
#include <bit>

#include "lattower/error.hpp"

namespace lattower::gf2 {

namespace {

std::uint64_t mask(int width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

void check_width(int width) {
  if (width < 0 || width > kMaxWidth) {
    throw Error(ErrorKind::WidthMismatch, "width " + std::to_string(width) + " out of range");
  }
}

void same_width(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::WidthMismatch,
                "width " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

SignVector::SignVector(int width, std::uint64_t bits) : width_(width), bits_(bits) {
  check_width(width);
  if ((bits & ~mask(width)) != 0) {
    throw Error(ErrorKind::WidthMismatch, "bits set beyond width " + std::to_string(width));
  }
}

SignVector SignVector::unit(int width, int coord) {
  if (coord < 0 || coord >= width) {
    throw Error(ErrorKind::BadCoordinate, "coordinate " + std::to_string(coord));
  }
  return SignVector(width, std::uint64_t{1} << coord);
}

SignVector SignVector::ones(int width) { return SignVector(width, mask(width)); }

SignVector SignVector::from_string(std::string_view bits) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw Error(ErrorKind::ParseError, "bad bit character in \"" + std::string(bits) + "\"");
    }
  }
  return SignVector(static_cast<int>(bits.size()), v);
}

int SignVector::weight() const { return std::popcount(bits_); }

int SignVector::pivot() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

SignVector SignVector::operator+(const SignVector& other) const {
  same_width(width_, other.width_);
  return SignVector(width_, bits_ ^ other.bits_);
}

std::string SignVector::to_string() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i) {
    if (get(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

void Subspace::insert(SignVector v) {
  same_width(width_, v.width());
  std::uint64_t b = v.bits();
  for (const auto& row : basis_) {
    if ((b >> row.pivot()) & 1u) b ^= row.bits();
  }
  if (b == 0) return;
  SignVector reduced(width_, b);
  const int p = reduced.pivot();
  for (auto& row : basis_) {
    if ((row.bits() >> p) & 1u) row = SignVector(width_, row.bits() ^ b);
  }
  auto pos = std::find_if(basis_.begin(), basis_.end(),
                          [&](const SignVector& r) { return r.pivot() > p; });
  basis_.insert(pos, reduced);
}

Subspace Subspace::full(int width) {
  Subspace s(width);
  check_width(width);
  for (int i = 0; i < width; ++i) s.basis_.push_back(SignVector::unit(width, i));
  return s;
}

Subspace Subspace::span(int width, std::span<const SignVector> vectors) {
  check_width(width);
  Subspace s(width);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::from_strings(int width, const std::vector<std::string>& rows) {
  std::vector<SignVector> vs;
  for (const auto& r : rows) vs.push_back(SignVector::from_string(r));
  return span(width, vs);
}

bool Subspace::contains(const SignVector& v) const {
  same_width(width_, v.width());
  std::uint64_t b = v.bits();
  for (const auto& row : basis_) {
    if ((b >> row.pivot()) & 1u) b ^= row.bits();
  }
  return b == 0;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  same_width(width_, other.width_);
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const SignVector& v) { return other.contains(v); });
}

bool Subspace::active(int coord) const {
  if (coord < 0 || coord >= width_) {
    throw Error(ErrorKind::BadCoordinate, "coordinate " + std::to_string(coord));
  }
  return std::any_of(basis_.begin(), basis_.end(),
                     [&](const SignVector& v) { return v.get(coord); });
}

std::vector<SignVector> Subspace::elements() const {
  std::vector<SignVector> out;
  const std::uint64_t n = std::uint64_t{1} << basis_.size();
  out.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) {
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if ((m >> i) & 1u) b ^= basis_[i].bits();
    }
    out.emplace_back(width_, b);
  }
  return out;
}

std::vector<std::string> Subspace::to_strings() const {
  std::vector<std::string> out;
  for (const auto& v : basis_) out.push_back(v.to_string());
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  same_width(a.width(), b.width());
  std::vector<SignVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.width(), all);
}

Subspace annihilator(const Subspace& s) {
  // For RREF rows r_i with pivots p_i, each non-pivot column f gives the
  // annihilator vector e_f + sum_i r_i[f] e_{p_i}.
  const int w = s.width();
  std::uint64_t pivot_mask = 0;
  for (const auto& r : s.basis()) pivot_mask |= std::uint64_t{1} << r.pivot();
  std::vector<SignVector> out;
  for (int f = 0; f < w; ++f) {
    if ((pivot_mask >> f) & 1u) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (const auto& r : s.basis()) {
      if (r.get(f)) v |= std::uint64_t{1} << r.pivot();
    }
    out.emplace_back(w, v);
  }
  return Subspace::span(w, out);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace project(const Subspace& s, std::span<const int> coords) {
  const int w = static_cast<int>(coords.size());
  for (int c : coords) {
    if (c < 0 || c >= s.width()) {
      throw Error(ErrorKind::BadCoordinate, "coordinate " + std::to_string(c) +
                                                " outside width " + std::to_string(s.width()));
    }
  }
  std::vector<SignVector> images;
  for (const auto& r : s.basis()) {
    std::uint64_t v = 0;
    for (int j = 0; j < w; ++j) {
      if (r.get(coords[static_cast<std::size_t>(j)])) v |= std::uint64_t{1} << j;
    }
    images.emplace_back(w, v);
  }
  return Subspace::span(w, images);
}

Subspace even_weight(int width) {
  if (width == 0) return Subspace::zero(0);
  return annihilator(Subspace::span(width, {SignVector::ones(width)}));
}

}  // namespace lattower::gf2
