#include "lattower/autgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "lattower/error.hpp"

namespace lattower {

SlotPermutation SlotPermutation::identity(int T) {
  SlotPermutation p;
  p.mapping.resize(static_cast<std::size_t>(T));
  std::iota(p.mapping.begin(), p.mapping.end(), 0);
  return p;
}

bool SlotPermutation::is_identity() const {
  for (std::size_t s = 0; s < mapping.size(); ++s) {
    if (mapping[s] != static_cast<int>(s)) return false;
  }
  return true;
}

std::string SlotPermutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(mapping.size(), false);
  for (std::size_t s = 0; s < mapping.size(); ++s) {
    if (seen[s] || mapping[s] == static_cast<int>(s)) continue;
    out << '(';
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      out << (first ? "" : " ") << x;
      first = false;
      x = static_cast<std::size_t>(mapping[x]);
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

SlotPermutation operator*(const SlotPermutation& a, const SlotPermutation& b) {
  if (a.mapping.size() != b.mapping.size()) throw Error(ErrorKind::SpecMismatch, "permutation sizes differ");
  SlotPermutation c;
  c.mapping.resize(a.mapping.size());
  for (std::size_t s = 0; s < b.mapping.size(); ++s) {
    c.mapping[s] = a.mapping[static_cast<std::size_t>(b.mapping[s])];
  }
  return c;
}

bool class_preserving(const TowerGroupSpec& spec, const SlotPermutation& sigma) {
  if (static_cast<int>(sigma.mapping.size()) != spec.T()) return false;
  std::vector<bool> hit(sigma.mapping.size(), false);
  for (int s = 0; s < spec.T(); ++s) {
    const int t = sigma.mapping[static_cast<std::size_t>(s)];
    if (t < 0 || t >= spec.T() || hit[static_cast<std::size_t>(t)]) return false;
    hit[static_cast<std::size_t>(t)] = true;
    if (spec.slot(s).cls != spec.slot(t).cls) return false;
  }
  return true;
}

std::vector<SlotPermutation> class_permutations(const TowerGroupSpec& spec) {
  std::vector<int> a_slots;
  std::vector<int> b_slots;
  for (const auto& slot : spec.slots()) (slot.cls == SlotClass::A ? a_slots : b_slots).push_back(slot.index);

  std::vector<SlotPermutation> out;
  std::vector<int> a_img = a_slots;
  do {
    std::vector<int> b_img = b_slots;
    do {
      SlotPermutation p = SlotPermutation::identity(spec.T());
      for (std::size_t i = 0; i < a_slots.size(); ++i) p.mapping[static_cast<std::size_t>(a_slots[i])] = a_img[i];
      for (std::size_t i = 0; i < b_slots.size(); ++i) p.mapping[static_cast<std::size_t>(b_slots[i])] = b_img[i];
      out.push_back(std::move(p));
    } while (std::next_permutation(b_img.begin(), b_img.end()));
  } while (std::next_permutation(a_img.begin(), a_img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SlotPermutation> class_generators(const TowerGroupSpec& spec) {
  std::vector<SlotPermutation> gens;
  for (int s = 0; s + 1 < spec.T(); ++s) {
    if (spec.slot(s).cls != spec.slot(s + 1).cls) continue;
    SlotPermutation p = SlotPermutation::identity(spec.T());
    std::swap(p.mapping[static_cast<std::size_t>(s)], p.mapping[static_cast<std::size_t>(s + 1)]);
    gens.push_back(std::move(p));
  }
  // S_4 slots sort after S_3 and before S_5+, so B can be split in two runs.
  std::vector<int> b_slots;
  for (const auto& slot : spec.slots()) {
    if (slot.cls == SlotClass::B) b_slots.push_back(slot.index);
  }
  for (std::size_t i = 0; i + 1 < b_slots.size(); ++i) {
    if (b_slots[i + 1] == b_slots[i] + 1) continue;
    SlotPermutation p = SlotPermutation::identity(spec.T());
    std::swap(p.mapping[static_cast<std::size_t>(b_slots[i])], p.mapping[static_cast<std::size_t>(b_slots[i + 1])]);
    gens.push_back(std::move(p));
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

LatticeAutomorphism operator*(const LatticeAutomorphism& a, const LatticeAutomorphism& b) {
  LatticeAutomorphism c;
  c.mapping.resize(b.mapping.size());
  for (std::size_t i = 0; i < b.mapping.size(); ++i) c.mapping[i] = a.mapping.at(b.mapping[i]);
  return c;
}

bool is_automorphism(const Poset& poset, const LatticeAutomorphism& phi) {
  const std::size_t n = poset.size();
  if (phi.mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (phi.mapping[i] >= n || hit[phi.mapping[i]]) return false;
    hit[phi.mapping[i]] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (poset.leq(i, j) != poset.leq(phi.mapping[i], phi.mapping[j])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> complemented_elements(const Poset& poset) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t c = 0; c < poset.size(); ++c) {
      if ((poset.up(x) & poset.up(c)).count() == 1 && (poset.down(x) & poset.down(c)).count() == 1) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

std::vector<std::size_t> factor_atoms(const Poset& poset) {
  const auto comp = complemented_elements(poset);
  const std::size_t bot = poset.bottom();
  std::vector<std::size_t> out;
  for (std::size_t x : comp) {
    if (x == bot) continue;
    const bool minimal = std::none_of(comp.begin(), comp.end(), [&](std::size_t y) {
      return y != bot && y != x && poset.leq(y, x);
    });
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> factor_atoms(const Lattice& lattice) {
  const auto& spec = lattice.spec();
  const auto atoms = factor_atoms(lattice.poset());
  if (static_cast<int>(atoms.size()) != spec.T()) {
    throw Error(ErrorKind::Mismatch, "found " + std::to_string(atoms.size()) + " factor atoms for T = " +
                                         std::to_string(spec.T()));
  }
  std::vector<std::size_t> by_slot(atoms.size());
  for (int s = 0; s < spec.T(); ++s) {
    std::vector<ChainPos> P(static_cast<std::size_t>(spec.T()), ChainPos::Triv);
    P[static_cast<std::size_t>(s)] = ChainPos::Full;
    const std::size_t idx = lattice.index_of(sub_product(spec, P));
    if (std::find(atoms.begin(), atoms.end(), idx) == atoms.end()) {
      throw Error(ErrorKind::Mismatch, "factor at slot " + std::to_string(s) + " is not a factor atom");
    }
    by_slot[static_cast<std::size_t>(s)] = idx;
  }
  return by_slot;
}

AdmissibleTriple tau_sigma(const TowerGroupSpec& spec, const SlotPermutation& sigma,
                           const AdmissibleTriple& t) {
  if (!class_preserving(spec, sigma)) {
    throw Error(ErrorKind::ClassViolation, "permutation " + sigma.to_cycles() + " mixes S4 and non-S4 slots");
  }
  const auto img = [&](int s) { return sigma.mapping[static_cast<std::size_t>(s)]; };
  std::vector<int> J;
  for (int s : t.J) J.push_back(img(s));
  std::sort(J.begin(), J.end());

  // coordinate j of H moves to the position of sigma(J[j]) in the new J
  std::vector<int> new_coord(t.J.size());
  for (std::size_t j = 0; j < t.J.size(); ++j) {
    new_coord[j] = static_cast<int>(std::lower_bound(J.begin(), J.end(), img(t.J[j])) - J.begin());
  }
  const int w = static_cast<int>(J.size());
  std::vector<gf2::SignVector> rows;
  for (const auto& r : t.H.basis()) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < t.J.size(); ++j) {
      if (r.get(static_cast<int>(j))) v |= std::uint64_t{1} << new_coord[j];
    }
    rows.emplace_back(w, v);
  }

  std::vector<ChainPos> P(t.P.size(), ChainPos::Full);
  for (int s = 0; s < spec.T(); ++s) {
    const int d = img(s);
    P[static_cast<std::size_t>(d)] =
        chain_iso(spec.slot(s).degree, spec.slot(d).degree).at(t.P[static_cast<std::size_t>(s)]);
  }
  return validate(spec, std::move(J), std::move(P), gf2::Subspace::span(w, rows));
}

LatticeAutomorphism tau_sigma(const Lattice& lattice, const SlotPermutation& sigma) {
  LatticeAutomorphism phi;
  phi.mapping.reserve(lattice.size());
  for (const auto& e : lattice.elements()) {
    phi.mapping.push_back(lattice.index_of(tau_sigma(lattice.spec(), sigma, e.triple)));
  }
  return phi;
}

namespace {

/// Colour refinement on the Hasse diagram, seeded with order invariants.
std::vector<int> refined_colours(const Poset& poset) {
  const std::size_t n = poset.size();
  using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
  std::vector<int> colour(n);
  {
    std::map<std::vector<std::size_t>, int> ids;
    std::vector<std::vector<std::size_t>> keys(n);
    for (std::size_t v = 0; v < n; ++v) {
      keys[v] = {static_cast<std::size_t>(poset.height(v)), static_cast<std::size_t>(poset.depth(v)),
                 poset.upper_covers(v).size(), poset.lower_covers(v).size(),
                 poset.down(v).count(), poset.up(v).count()};
      ids.emplace(keys[v], 0);
    }
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = ids[keys[v]];
  }
  std::size_t classes = 0;
  while (true) {
    std::map<Key, int> ids;
    std::vector<Key> keys(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> up;
      std::vector<int> down;
      for (std::size_t w : poset.upper_covers(v)) up.push_back(colour[w]);
      for (std::size_t w : poset.lower_covers(v)) down.push_back(colour[w]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      keys[v] = Key{colour[v], std::move(up), std::move(down)};
      ids.emplace(keys[v], 0);
    }
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = ids[keys[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Poset& poset) : poset_(poset), n_(poset.size()) {
    colour_ = refined_colours(poset);
    std::map<int, std::size_t> class_size;
    for (int c : colour_) ++class_size[c];
    for (std::size_t v = 0; v < n_; ++v) size_of_class_.push_back(class_size[colour_[v]]);
    plan_order();
  }

  std::vector<LatticeAutomorphism> run() {
    image_.assign(n_, kUnset);
    used_.assign(n_, false);
    if (n_ == 0) {
      found_.push_back(LatticeAutomorphism{});
    } else {
      extend(0);
    }
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Visit order: each next vertex is a Hasse neighbour of an earlier one when
  // possible, smallest colour class first.
  void plan_order() {
    using Entry = std::pair<std::size_t, std::size_t>;  // (class size, vertex)
    std::set<Entry> unplaced;
    std::set<Entry> frontier;
    for (std::size_t v = 0; v < n_; ++v) unplaced.emplace(size_of_class_[v], v);
    std::vector<bool> placed(n_, false);
    anchor_.assign(n_, kUnset);
    anchor_is_below_.assign(n_, false);
    while (!unplaced.empty()) {
      const std::size_t v = (frontier.empty() ? *unplaced.begin() : *frontier.begin()).second;
      unplaced.erase({size_of_class_[v], v});
      frontier.erase({size_of_class_[v], v});
      for (std::size_t w : poset_.lower_covers(v)) {
        if (placed[w]) {
          anchor_[v] = w;
          anchor_is_below_[v] = true;
          break;
        }
      }
      if (anchor_[v] == kUnset) {
        for (std::size_t w : poset_.upper_covers(v)) {
          if (placed[w]) {
            anchor_[v] = w;
            break;
          }
        }
      }
      placed[v] = true;
      order_.push_back(v);
      for (const auto* nbrs : {&poset_.lower_covers(v), &poset_.upper_covers(v)}) {
        for (std::size_t w : *nbrs) {
          if (!placed[w]) frontier.emplace(size_of_class_[w], w);
        }
      }
    }
  }

  bool consistent(std::size_t depth, std::size_t v, std::size_t w) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const std::size_t u = order_[i];
      const std::size_t fu = image_[u];
      if (poset_.leq(u, v) != poset_.leq(fu, w) || poset_.leq(v, u) != poset_.leq(w, fu)) return false;
    }
    return true;
  }

  void try_candidate(std::size_t depth, std::size_t v, std::size_t w) {
    if (used_[w] || colour_[w] != colour_[v] || !consistent(depth, v, w)) return;
    image_[v] = w;
    used_[w] = true;
    extend(depth + 1);
    used_[w] = false;
    image_[v] = kUnset;
  }

  void extend(std::size_t depth) {
    if (depth == n_) {
      found_.push_back(LatticeAutomorphism{image_});
      return;
    }
    const std::size_t v = order_[depth];
    const std::size_t a = anchor_[v];
    if (a == kUnset) {
      for (std::size_t w = 0; w < n_; ++w) try_candidate(depth, v, w);
      return;
    }
    // v covers a (or is covered by it), so its image must do the same to a's image.
    const auto& candidates = anchor_is_below_[v] ? poset_.upper_covers(image_[a]) : poset_.lower_covers(image_[a]);
    for (std::size_t w : candidates) try_candidate(depth, v, w);
  }

  const Poset& poset_;
  std::size_t n_;
  std::vector<int> colour_;
  std::vector<std::size_t> size_of_class_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> anchor_;
  std::vector<bool> anchor_is_below_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<LatticeAutomorphism> found_;
};

}  // namespace

std::vector<LatticeAutomorphism> brute_force_automorphisms(const Poset& poset, std::size_t max_size) {
  if (poset.size() > max_size) {
    throw Error(ErrorKind::TooLarge, "lattice has " + std::to_string(poset.size()) +
                                         " elements, automorphism search bound is " + std::to_string(max_size));
  }
  return AutomorphismSearch(poset).run();
}

SlotPermutation induced_permutation(const LatticeAutomorphism& phi, const Lattice& lattice) {
  return induced_permutation(phi, lattice, factor_atoms(lattice));
}

SlotPermutation induced_permutation(const LatticeAutomorphism& phi, const Lattice& lattice,
                                    const std::vector<std::size_t>& atoms) {
  std::map<std::size_t, int> slot_of;
  for (std::size_t s = 0; s < atoms.size(); ++s) slot_of[atoms[s]] = static_cast<int>(s);
  SlotPermutation pi;
  for (std::size_t atom : atoms) {
    auto it = slot_of.find(phi.mapping.at(atom));
    if (it == slot_of.end()) throw Error(ErrorKind::Mismatch, "automorphism does not permute the factors");
    pi.mapping.push_back(it->second);
  }
  if (!class_preserving(lattice.spec(), pi)) {
    throw Error(ErrorKind::ClassViolation, "induced permutation " + pi.to_cycles() + " mixes classes");
  }
  return pi;
}

ProductFormulaReport verify_product_formula(const TowerGroupSpec& spec, int max_T, std::size_t max_lattice) {
  ProductFormulaReport r;
  r.spec = spec;
  r.predicted_order = factorial(spec.a4()) * factorial(spec.B());
  r.generators = class_generators(spec);

  const Lattice lattice = enumerate_lattice(spec, max_T);
  r.lattice_size = lattice.size();
  const auto found = brute_force_automorphisms(lattice.poset(), max_lattice);
  r.brute_force_order = found.size();

  // |N| is only invariant when no automorphism can trade factors of
  // different degree.
  const bool single_degree_classes =
      spec.exponents().size() - static_cast<std::size_t>(spec.a4() > 0) <= 1;
  r.invariants_preserved = std::all_of(found.begin(), found.end(), [&](const LatticeAutomorphism& phi) {
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto& a = lattice.at(i);
      const auto& b = lattice.at(phi.mapping[i]);
      if (a.family != b.family) return false;
      if (single_degree_classes && a.order != b.order) return false;
    }
    return true;
  });

  const auto atoms = factor_atoms(lattice);
  std::vector<LatticeAutomorphism> constructive;
  r.induced_inverts_tau = true;
  for (const auto& sigma : class_permutations(spec)) {
    auto phi = tau_sigma(lattice, sigma);
    if (induced_permutation(phi, lattice, atoms) != sigma) r.induced_inverts_tau = false;
    constructive.push_back(std::move(phi));
  }
  r.constructive_order = constructive.size();
  r.constructive_in_brute_force = std::all_of(constructive.begin(), constructive.end(), [&](const auto& phi) {
    return std::binary_search(found.begin(), found.end(), phi);
  });
  auto distinct = constructive;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  r.constructive_bijective = distinct.size() == constructive.size() && distinct == found;

  r.match = Order(r.brute_force_order) == r.predicted_order && r.constructive_order == r.brute_force_order &&
            r.constructive_in_brute_force && r.constructive_bijective && r.induced_inverts_tau &&
            r.invariants_preserved;
  return r;
}

}  // namespace lattower
