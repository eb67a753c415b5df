#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lattower/lattice.hpp"
#include "lattower/poset.hpp"

namespace lattower {

/// A permutation of slot indices; mapping[s] is the image of slot s.
struct SlotPermutation {
  std::vector<int> mapping;

  static SlotPermutation identity(int T);
  bool is_identity() const;
  /// Cycle notation over slot indices, "()" for the identity: "(0 1)(2 3)".
  std::string to_cycles() const;

  bool operator==(const SlotPermutation&) const = default;
  auto operator<=>(const SlotPermutation&) const = default;
};

/// (a * b)(s) = a(b(s)).
SlotPermutation operator*(const SlotPermutation& a, const SlotPermutation& b);

bool class_preserving(const TowerGroupSpec& spec, const SlotPermutation& sigma);

/// Every element of Sym(A) x Sym(B), in lexicographic order of mapping.
std::vector<SlotPermutation> class_permutations(const TowerGroupSpec& spec);

/// Adjacent transpositions inside each class.
std::vector<SlotPermutation> class_generators(const TowerGroupSpec& spec);

/// A bijection on element indices of one lattice; mapping[i] is the image of i.
struct LatticeAutomorphism {
  std::vector<std::size_t> mapping;

  bool operator==(const LatticeAutomorphism&) const = default;
  auto operator<=>(const LatticeAutomorphism&) const = default;
};

LatticeAutomorphism operator*(const LatticeAutomorphism& a, const LatticeAutomorphism& b);

bool is_automorphism(const Poset& poset, const LatticeAutomorphism& phi);

/// Elements N with some C such that N meet C = bottom and N join C = top.
std::vector<std::size_t> complemented_elements(const Poset& poset);

/// Complemented elements other than bottom with no complemented element
/// strictly between bottom and them. Sorted by index.
std::vector<std::size_t> factor_atoms(const Poset& poset);

/// factor_atoms of a tower-group lattice, reordered so entry s is the
/// singleton sub-product at slot s. Throws Mismatch if the order-theoretic
/// atoms are not exactly those.
std::vector<std::size_t> factor_atoms(const Lattice& lattice);

/// Moves slot s to sigma(s), transporting chain positions along chain_iso.
AdmissibleTriple tau_sigma(const TowerGroupSpec& spec, const SlotPermutation& sigma,
                           const AdmissibleTriple& t);

/// tau_sigma applied to every element of an enumerated lattice.
LatticeAutomorphism tau_sigma(const Lattice& lattice, const SlotPermutation& sigma);

inline constexpr std::size_t kDefaultMaxLattice = 2000;

/// All automorphisms of a finite poset by backtracking over Hasse-diagram
/// invariants. Uses nothing but the order. The identity comes first.
std::vector<LatticeAutomorphism> brute_force_automorphisms(const Poset& poset,
                                                           std::size_t max_size = kDefaultMaxLattice);

/// The permutation of factor slots induced by phi.
SlotPermutation induced_permutation(const LatticeAutomorphism& phi, const Lattice& lattice);
/// Same, with factor_atoms(lattice) already in hand.
SlotPermutation induced_permutation(const LatticeAutomorphism& phi, const Lattice& lattice,
                                    const std::vector<std::size_t>& atoms_by_slot);

struct ProductFormulaReport {
  TowerGroupSpec spec;
  Order predicted_order;
  std::size_t lattice_size = 0;
  std::size_t brute_force_order = 0;
  std::size_t constructive_order = 0;
  bool constructive_in_brute_force = false;  // every tau_sigma was found by the search
  bool constructive_bijective = false;       // sigma -> tau_sigma is onto the search result
  bool induced_inverts_tau = false;          // pi_{tau_sigma} = sigma for every sigma
  bool invariants_preserved = false;         // family kept by every automorphism, |N| too
                                             // when each class has a single degree
  bool match = false;
  std::vector<SlotPermutation> generators;
};

ProductFormulaReport verify_product_formula(const TowerGroupSpec& spec, int max_T = kDefaultMaxT,
                                            std::size_t max_lattice = kDefaultMaxLattice);

}  // namespace lattower
