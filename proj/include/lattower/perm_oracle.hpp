#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lattower/lattice.hpp"
#include "lattower/poset.hpp"

namespace lattower::oracle {

/// A permutation of 0..degree-1.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  /// (a * b)(x) = a(b(x)).
  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  /// +1 or -1, by counting inversions.
  int sign() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<std::uint8_t> images_;
};

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 5000;

/// prod_j S_{d_j} with every element materialized as a global id (mixed-radix
/// over per-factor ranks). Degree 2 factors are allowed here.
class ConcreteGroup {
 public:
  static ConcreteGroup direct_product(const std::vector<int>& degrees, std::size_t max_order = kDefaultMaxOrder);
  static ConcreteGroup from_spec(const TowerGroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t factors() const { return degrees_.size(); }
  std::size_t order() const { return order_; }

  ElementId identity() const { return 0; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;

  /// Rank of the component in factor j (index into permutations(j)).
  std::size_t component(ElementId g, std::size_t j) const;
  const Perm& component_perm(ElementId g, std::size_t j) const;
  std::vector<Perm> element(ElementId g) const;
  ElementId encode(const std::vector<std::size_t>& ranks) const;
  /// Embeds a single component into factor j.
  ElementId embed(std::size_t j, std::size_t rank) const;
  const std::vector<Perm>& permutations(std::size_t j) const;

  /// A transposition and a full cycle per factor.
  const std::vector<ElementId>& generators() const { return generators_; }

 private:
  struct Factor {
    int degree = 0;
    std::vector<Perm> perms;  // lexicographic
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> inv;
  };

  std::vector<int> degrees_;
  std::vector<std::size_t> table_of_;  // factor j -> index into tables_
  std::vector<Factor> tables_;
  std::vector<std::size_t> radix_;     // place value of factor j
  std::size_t order_ = 0;
  std::vector<ElementId> generators_;
};

/// A subgroup as a membership bitset over element ids, with a small
/// generating set.
struct ConcreteSubgroup {
  Bitset members;
  std::vector<ElementId> generators;

  std::size_t size() const { return members.count(); }
  bool contains(ElementId g) const { return members[g]; }
  /// Sorted element ids.
  std::vector<ElementId> ids() const;

  bool operator==(const ConcreteSubgroup& other) const { return members == other.members; }
};

ConcreteSubgroup generated_subgroup(const ConcreteGroup& G, const std::vector<ElementId>& gens);
ConcreteSubgroup normal_closure(const ConcreteGroup& G, ElementId g);
/// Subgroup generated by a and b.
ConcreteSubgroup join(const ConcreteGroup& G, const ConcreteSubgroup& a, const ConcreteSubgroup& b);
ConcreteSubgroup meet(const ConcreteGroup& G, const ConcreteSubgroup& a, const ConcreteSubgroup& b);
bool is_normal(const ConcreteGroup& G, const ConcreteSubgroup& N);

/// Every normal subgroup, sorted by (order, smallest differing element id).
std::vector<ConcreteSubgroup> all_normal_subgroups(const ConcreteGroup& G, std::size_t max_order = kDefaultMaxOrder);

/// Inclusion poset over a list of subgroups.
Poset inclusion_poset(const std::vector<ConcreteSubgroup>& subgroups);

/// Membership test of a single permutation in a chain position of N(S_k).
bool in_chain_position(const Perm& p, ChainPos pos);

/// Reads eff and W straight off the elements of N, then checks that the
/// profile's membership predicate reproduces N on all of G.
Profile extract_profile(const ConcreteGroup& G, const ConcreteSubgroup& N);

/// Whether g satisfies the membership predicate of p.
bool profile_admits(const ConcreteGroup& G, const Profile& p, ElementId g);

/// Goursat data for G = H x K, H the factors flagged in h_factors: checks
/// |H0/H1| = |K0/K1|, H1 <= H0, and the normality criterion [H, H0] <= H1,
/// [K, K0] <= K1 by explicit commutators.
bool goursat_consistent(const ConcreteGroup& G, const ConcreteSubgroup& N, const std::vector<bool>& h_factors);

struct OracleReport {
  std::string spec;
  bool ok = false;
  std::size_t oracle_count = 0;
  std::size_t lattice_count = 0;
  std::size_t pairs_checked = 0;
  std::string first_mismatch;
};

/// Compares lattice_core against the concrete group: counts, an element-wise
/// profile bijection, and inclusion/meet/join on every unordered pair.
OracleReport differential_validate(const TowerGroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);

struct LemmaLattice {
  std::string name;
  std::vector<int> degrees;
  std::vector<std::size_t> orders;  // |N| per element
  Poset poset;
};

/// N(C2), N(C2^2), N(C2 x S3), N(C2 x S4), N(C2 x S5), keyed by "C2", "C2^2",
/// "C2*S3", "C2*S4", "C2*S5".
std::map<std::string, LemmaLattice> lemma_lattices();

/// Lattice of normal subgroups for an arbitrary product of S_d (d >= 2).
LemmaLattice concrete_lattice(const std::string& name, const std::vector<int>& degrees,
                              std::size_t max_order = kDefaultMaxOrder);

}  // namespace lattower::oracle
