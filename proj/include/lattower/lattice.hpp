#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "lattower/gf2.hpp"
#include "lattower/group_spec.hpp"
#include "lattower/poset.hpp"

namespace lattower {

/// Canonical coordinates (J, P, H) of a normal subgroup.
///
/// J lists the sign-coupled slots in increasing order. P has one entry per
/// slot; entries at slots in J are not meaningful and are held at Full so
/// that equal triples compare equal. H has width |J|, coordinate j standing
/// for slot J[j].
struct AdmissibleTriple {
  std::vector<int> J;
  std::vector<ChainPos> P;
  gf2::Subspace H;

  bool operator==(const AdmissibleTriple&) const = default;
  auto operator<=>(const AdmissibleTriple&) const = default;
};

/// Per-slot projections plus the full sign image W <= F_2^T. Membership of g
/// is: g_s lies in eff[s] for every slot, and the sign vector of g lies in W.
struct Profile {
  std::vector<ChainPos> eff;
  gf2::Subspace W;

  bool operator==(const Profile&) const = default;
  auto operator<=>(const Profile&) const = default;
};

enum class Family { SubProduct, SignParity, Mixed };

std::string_view to_string(Family family);

struct LatticeElement {
  AdmissibleTriple triple;
  Profile profile;
  Family family = Family::SubProduct;
  Order order;
};

/// Checks shapes and admissibility (i) and (ii). J must be strictly
/// increasing; P must have one entry per slot.
AdmissibleTriple validate(const TowerGroupSpec& spec, std::vector<int> J, std::vector<ChainPos> P,
                          gf2::Subspace H);

/// Sub-product prod_s P[s].
AdmissibleTriple sub_product(const TowerGroupSpec& spec, std::vector<ChainPos> P);

/// D_I: elements whose sign product over I is +1; |I| >= 2.
AdmissibleTriple sign_parity(const TowerGroupSpec& spec, std::vector<int> I);

Profile triple_to_profile(const TowerGroupSpec& spec, const AdmissibleTriple& t);
AdmissibleTriple profile_to_triple(const TowerGroupSpec& spec, const Profile& p);

/// Throws InvalidProfile unless the support and activity conditions hold.
void check_profile(const TowerGroupSpec& spec, const Profile& p);

Family classify(const TowerGroupSpec& spec, const AdmissibleTriple& t);
Order order_of(const TowerGroupSpec& spec, const AdmissibleTriple& t);
LatticeElement make_element(const TowerGroupSpec& spec, const AdmissibleTriple& t);

/// Inclusion read off the triples: effective components compare slotwise and
/// every combined sign pattern lands in H2.
bool leq_triples(const TowerGroupSpec& spec, const AdmissibleTriple& a, const AdmissibleTriple& b);
/// Inclusion read off the profiles: eff slotwise and W1 <= W2.
bool leq_profiles(const Profile& a, const Profile& b);

Profile meet_profiles(const TowerGroupSpec& spec, const Profile& a, const Profile& b);
Profile join_profiles(const TowerGroupSpec& spec, const Profile& a, const Profile& b);

struct Census {
  std::size_t sub_products = 0;
  std::size_t sign_parity = 0;
  std::size_t mixed = 0;
  std::size_t total = 0;

  bool operator==(const Census&) const = default;
};

inline constexpr int kDefaultMaxT = 8;

/// N(G) with every element, its inclusion order, and lookups by triple and
/// profile.
class Lattice {
 public:
  const TowerGroupSpec& spec() const { return spec_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<LatticeElement>& elements() const { return elements_; }
  const LatticeElement& at(std::size_t i) const { return elements_.at(i); }
  const Poset& poset() const { return poset_; }
  const Census& census() const { return census_; }

  bool leq(std::size_t i, std::size_t j) const { return poset_.leq(i, j); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  /// Meet and join computed by profile arithmetic.
  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;

  /// Throws Mismatch if absent.
  std::size_t index_of(const AdmissibleTriple& t) const;
  std::size_t index_of(const Profile& p) const;

 private:
  friend Lattice enumerate_lattice(const TowerGroupSpec&, int);

  TowerGroupSpec spec_;
  std::vector<LatticeElement> elements_;
  std::map<AdmissibleTriple, std::size_t> by_triple_;
  std::map<Profile, std::size_t> by_profile_;
  Poset poset_;
  Census census_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// All admissible triples of spec, each exactly once. Order: J by increasing
/// bitmask, then H in echelon enumeration order, then P in mixed radix with
/// the first free slot most significant.
Lattice enumerate_lattice(const TowerGroupSpec& spec, int max_T = kDefaultMaxT);

/// Admissible H <= F_2^width (no unit vector, no dead coordinate).
std::vector<gf2::Subspace> admissible_sign_subgroups(int width);

struct MixedDecomposition {
  AdmissibleTriple sub_product;
  std::vector<std::vector<int>> parity_sets;
};

/// N = sub_product meet D_{I_1} meet ... meet D_{I_l}. Throws NotMixed for
/// other families.
MixedDecomposition decompose_mixed(const TowerGroupSpec& spec, const LatticeElement& e);

}  // namespace lattower
