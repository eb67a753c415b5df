#include "lattower/perm_oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "lattower/error.hpp"

namespace lattower::oracle {

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x]) throw Error(ErrorKind::Mismatch, "not a permutation");
    hit[x] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<std::uint8_t> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& other) const {
  std::vector<std::uint8_t> im(images_.size());
  for (std::size_t x = 0; x < im.size(); ++x) im[x] = images_[other.images_[x]];
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> im(images_.size());
  for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = static_cast<std::uint8_t>(x);
  return Perm(std::move(im));
}

int Perm::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) inversions += images_[i] > images_[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ConcreteGroup ConcreteGroup::direct_product(const std::vector<int>& degrees, std::size_t max_order) {
  Order order = 1;
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorKind::DegreeTooSmall, "degree " + std::to_string(d));
    if (d > 7) throw Error(ErrorKind::TooLarge, "oracle handles degrees up to 7");
    order *= factorial(d);
  }
  if (order > max_order) {
    throw Error(ErrorKind::TooLarge, "group order " + order.str() + " exceeds oracle bound " +
                                         std::to_string(max_order));
  }

  ConcreteGroup G;
  G.degrees_ = degrees;
  G.order_ = static_cast<std::size_t>(order);
  std::map<int, std::size_t> table_for_degree;
  for (int d : degrees) {
    auto [it, inserted] = table_for_degree.try_emplace(d, G.tables_.size());
    G.table_of_.push_back(it->second);
    if (!inserted) continue;
    Factor f;
    f.degree = d;
    std::vector<std::uint8_t> im(static_cast<std::size_t>(d));
    std::iota(im.begin(), im.end(), std::uint8_t{0});
    do {
      f.perms.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    std::map<Perm, std::uint16_t> rank;
    for (std::size_t r = 0; r < f.perms.size(); ++r) rank[f.perms[r]] = static_cast<std::uint16_t>(r);
    const std::size_t n = f.perms.size();
    f.mul.resize(n * n);
    f.inv.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      f.inv[a] = rank.at(f.perms[a].inverse());
      for (std::size_t b = 0; b < n; ++b) f.mul[a * n + b] = rank.at(f.perms[a] * f.perms[b]);
    }
    G.tables_.push_back(std::move(f));
  }
  G.radix_.assign(degrees.size(), 1);
  for (std::size_t j = degrees.size(); j-- > 1;) {
    G.radix_[j - 1] = G.radix_[j] * G.permutations(j).size();
  }

  for (std::size_t j = 0; j < degrees.size(); ++j) {
    const int d = degrees[j];
    if (d < 2) continue;
    const auto& perms = G.permutations(j);
    std::vector<std::uint8_t> transposition(static_cast<std::size_t>(d));
    std::iota(transposition.begin(), transposition.end(), std::uint8_t{0});
    std::swap(transposition[0], transposition[1]);
    std::vector<std::uint8_t> cycle(static_cast<std::size_t>(d));
    for (int x = 0; x < d; ++x) cycle[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>((x + 1) % d);
    for (const auto& im : {transposition, cycle}) {
      const auto pos = std::lower_bound(perms.begin(), perms.end(), Perm(im)) - perms.begin();
      const ElementId g = G.embed(j, static_cast<std::size_t>(pos));
      if (std::find(G.generators_.begin(), G.generators_.end(), g) == G.generators_.end()) {
        G.generators_.push_back(g);
      }
    }
  }
  return G;
}

ConcreteGroup ConcreteGroup::from_spec(const TowerGroupSpec& spec, std::size_t max_order) {
  std::vector<int> degrees;
  for (const auto& s : spec.slots()) degrees.push_back(s.degree);
  return direct_product(degrees, max_order);
}

const std::vector<Perm>& ConcreteGroup::permutations(std::size_t j) const { return tables_[table_of_[j]].perms; }

std::size_t ConcreteGroup::component(ElementId g, std::size_t j) const {
  return (g / radix_[j]) % permutations(j).size();
}

const Perm& ConcreteGroup::component_perm(ElementId g, std::size_t j) const {
  return permutations(j)[component(g, j)];
}

std::vector<Perm> ConcreteGroup::element(ElementId g) const {
  std::vector<Perm> out;
  for (std::size_t j = 0; j < degrees_.size(); ++j) out.push_back(component_perm(g, j));
  return out;
}

ElementId ConcreteGroup::encode(const std::vector<std::size_t>& ranks) const {
  std::size_t id = 0;
  for (std::size_t j = 0; j < ranks.size(); ++j) id += ranks[j] * radix_[j];
  return static_cast<ElementId>(id);
}

ElementId ConcreteGroup::embed(std::size_t j, std::size_t rank) const {
  return static_cast<ElementId>(rank * radix_[j]);
}

ElementId ConcreteGroup::multiply(ElementId a, ElementId b) const {
  std::size_t id = 0;
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    const auto& f = tables_[table_of_[j]];
    const std::size_t n = f.perms.size();
    id += f.mul[component(a, j) * n + component(b, j)] * radix_[j];
  }
  return static_cast<ElementId>(id);
}

ElementId ConcreteGroup::inverse(ElementId a) const {
  std::size_t id = 0;
  for (std::size_t j = 0; j < degrees_.size(); ++j) id += tables_[table_of_[j]].inv[component(a, j)] * radix_[j];
  return static_cast<ElementId>(id);
}

std::vector<ElementId> ConcreteSubgroup::ids() const {
  std::vector<ElementId> out;
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i)) {
    out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

namespace {

Bitset closure(const ConcreteGroup& G, const std::vector<ElementId>& gens) {
  Bitset seen(G.order());
  std::deque<ElementId> queue{G.identity()};
  seen.set(G.identity());
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    for (ElementId g : gens) {
      const ElementId y = G.multiply(x, g);
      if (!seen[y]) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

// Keeps only candidates that enlarge the subgroup generated so far.
ConcreteSubgroup from_candidates(const ConcreteGroup& G, const std::vector<ElementId>& candidates) {
  ConcreteSubgroup s{closure(G, {}), {}};
  for (ElementId c : candidates) {
    if (s.members[c]) continue;
    s.generators.push_back(c);
    s.members = closure(G, s.generators);
  }
  return s;
}

}  // namespace

ConcreteSubgroup generated_subgroup(const ConcreteGroup& G, const std::vector<ElementId>& gens) {
  return from_candidates(G, gens);
}

ConcreteSubgroup normal_closure(const ConcreteGroup& G, ElementId g) {
  Bitset seen(G.order());
  std::vector<ElementId> orbit{g};
  seen.set(g);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (ElementId h : G.generators()) {
      const ElementId c = G.multiply(G.multiply(h, orbit[i]), G.inverse(h));
      if (!seen[c]) {
        seen.set(c);
        orbit.push_back(c);
      }
    }
  }
  return from_candidates(G, orbit);
}

ConcreteSubgroup join(const ConcreteGroup& G, const ConcreteSubgroup& a, const ConcreteSubgroup& b) {
  std::vector<ElementId> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return from_candidates(G, gens);
}

ConcreteSubgroup meet(const ConcreteGroup& G, const ConcreteSubgroup& a, const ConcreteSubgroup& b) {
  const Bitset both = a.members & b.members;
  std::vector<ElementId> candidates;
  for (auto i = both.find_first(); i != Bitset::npos; i = both.find_next(i)) {
    candidates.push_back(static_cast<ElementId>(i));
  }
  auto s = from_candidates(G, candidates);
  if (s.members != both) throw Error(ErrorKind::Mismatch, "intersection is not a subgroup");
  return s;
}

bool is_normal(const ConcreteGroup& G, const ConcreteSubgroup& N) {
  for (ElementId h : G.generators()) {
    const ElementId hi = G.inverse(h);
    for (ElementId n : N.generators) {
      if (!N.members[G.multiply(G.multiply(h, n), hi)]) return false;
    }
  }
  return true;
}

std::vector<ConcreteSubgroup> all_normal_subgroups(const ConcreteGroup& G, std::size_t max_order) {
  if (G.order() > max_order) {
    throw Error(ErrorKind::TooLarge, "group order " + std::to_string(G.order()) + " exceeds oracle bound " +
                                         std::to_string(max_order));
  }
  std::vector<ConcreteSubgroup> found;
  std::set<Bitset> seen;
  auto add = [&](ConcreteSubgroup s) {
    if (seen.insert(s.members).second) found.push_back(std::move(s));
  };
  add(generated_subgroup(G, {}));

  // One normal closure per conjugacy class.
  Bitset classified(G.order());
  for (ElementId g = 0; g < G.order(); ++g) {
    if (classified[g]) continue;
    std::vector<ElementId> cls{g};
    classified.set(g);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (ElementId h : G.generators()) {
        const ElementId c = G.multiply(G.multiply(h, cls[i]), G.inverse(h));
        if (!classified[c]) {
          classified.set(c);
          cls.push_back(c);
        }
      }
    }
    add(normal_closure(G, g));
  }

  // Close under pairwise joins; every normal subgroup is a join of normal
  // closures of its elements.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (found[j].members.is_subset_of(found[i].members) || found[i].members.is_subset_of(found[j].members)) {
        continue;
      }
      add(join(G, found[i], found[j]));
    }
  }

  std::sort(found.begin(), found.end(), [](const ConcreteSubgroup& a, const ConcreteSubgroup& b) {
    const auto sa = a.size();
    const auto sb = b.size();
    if (sa != sb) return sa < sb;
    return a.ids() < b.ids();
  });
  return found;
}

Poset inclusion_poset(const std::vector<ConcreteSubgroup>& subgroups) {
  return Poset::from_relation(subgroups.size(), [&](std::size_t i, std::size_t j) {
    return subgroups[i].members.is_subset_of(subgroups[j].members);
  });
}

bool in_chain_position(const Perm& p, ChainPos pos) {
  switch (pos) {
    case ChainPos::Triv:
      return p == Perm::identity(p.degree());
    case ChainPos::V: {
      if (p.degree() != 4) return false;
      if (p == Perm::identity(4)) return true;
      for (int x = 0; x < 4; ++x) {
        if (p[x] == x || p[p[x]] != x) return false;
      }
      return true;
    }
    case ChainPos::Alt:
      return p.sign() == 1;
    case ChainPos::Full:
      return true;
  }
  return false;
}

bool profile_admits(const ConcreteGroup& G, const Profile& p, ElementId g) {
  std::uint64_t signs = 0;
  for (std::size_t j = 0; j < G.factors(); ++j) {
    const Perm& c = G.component_perm(g, j);
    if (!in_chain_position(c, p.eff[j])) return false;
    if (c.sign() == -1) signs |= std::uint64_t{1} << j;
  }
  return p.W.contains(gf2::SignVector(static_cast<int>(G.factors()), signs));
}

Profile extract_profile(const ConcreteGroup& G, const ConcreteSubgroup& N) {
  for (int d : G.degrees()) {
    if (d < 3) throw Error(ErrorKind::NotTowerGroup, "factor S" + std::to_string(d) + " has degree below 3");
  }
  const int T = static_cast<int>(G.factors());
  const auto ids = N.ids();
  Profile p;
  std::vector<gf2::SignVector> signs;
  for (std::size_t j = 0; j < G.factors(); ++j) {
    std::set<std::size_t> image;
    for (ElementId g : ids) image.insert(G.component(g, j));
    const int d = G.degrees()[j];
    const std::size_t n = G.permutations(j).size();
    if (image.size() == 1) {
      p.eff.push_back(ChainPos::Triv);
    } else if (d == 4 && image.size() == 4) {
      p.eff.push_back(ChainPos::V);
    } else if (image.size() * 2 == n) {
      p.eff.push_back(ChainPos::Alt);
    } else if (image.size() == n) {
      p.eff.push_back(ChainPos::Full);
    } else {
      throw Error(ErrorKind::Mismatch, "projection of size " + std::to_string(image.size()) +
                                           " is not normal in S" + std::to_string(d));
    }
  }
  for (ElementId g : ids) {
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < G.factors(); ++j) {
      if (G.component_perm(g, j).sign() == -1) bits |= std::uint64_t{1} << j;
    }
    signs.emplace_back(T, bits);
  }
  p.W = gf2::Subspace::span(T, signs);
  for (ElementId g = 0; g < G.order(); ++g) {
    if (profile_admits(G, p, g) != N.contains(g)) {
      throw Error(ErrorKind::Mismatch, "profile membership disagrees with the subgroup at element " +
                                           std::to_string(g));
    }
  }
  return p;
}

bool goursat_consistent(const ConcreteGroup& G, const ConcreteSubgroup& N, const std::vector<bool>& h_factors) {
  auto part = [&](ElementId g, bool h_side) {
    std::vector<std::size_t> ranks(G.factors(), 0);  // rank 0 is the identity
    for (std::size_t j = 0; j < G.factors(); ++j) {
      if (h_factors[j] == h_side) ranks[j] = G.component(g, j);
    }
    return G.encode(ranks);
  };
  struct Side {
    std::set<ElementId> proj;     // H0
    std::set<ElementId> kernel;   // H1
    std::vector<ElementId> whole; // H
  };
  Side sides[2];
  for (ElementId g : N.ids()) {
    for (int side = 0; side < 2; ++side) {
      const ElementId mine = part(g, side == 0);
      const ElementId other = part(g, side != 0);
      sides[side].proj.insert(mine);
      if (other == G.identity()) sides[side].kernel.insert(mine);
    }
  }
  for (ElementId g = 0; g < G.order(); ++g) {
    for (int side = 0; side < 2; ++side) {
      if (part(g, side == 0) == g) sides[side].whole.push_back(g);
    }
  }
  if (sides[0].proj.size() * sides[1].kernel.size() != sides[1].proj.size() * sides[0].kernel.size()) return false;
  for (const auto& s : sides) {
    if (!std::includes(s.proj.begin(), s.proj.end(), s.kernel.begin(), s.kernel.end())) return false;
    for (ElementId h : s.whole) {
      for (ElementId a : s.proj) {
        const ElementId comm = G.multiply(G.multiply(h, a), G.multiply(G.inverse(h), G.inverse(a)));
        if (!s.kernel.count(comm)) return false;
      }
    }
  }
  return true;
}

OracleReport differential_validate(const TowerGroupSpec& spec, std::size_t max_order) {
  OracleReport r;
  r.spec = spec.to_string();
  const ConcreteGroup G = ConcreteGroup::from_spec(spec, max_order);
  const auto normals = all_normal_subgroups(G, max_order);
  const Lattice lat = enumerate_lattice(spec, spec.T());
  r.oracle_count = normals.size();
  r.lattice_count = lat.size();
  auto fail = [&](std::string why) {
    r.ok = false;
    r.first_mismatch = std::move(why);
    return r;
  };
  if (r.oracle_count != r.lattice_count) {
    return fail("count: oracle " + std::to_string(r.oracle_count) + " vs lattice " + std::to_string(r.lattice_count));
  }

  std::map<Bitset, std::size_t> concrete_index;
  std::vector<std::size_t> to_lattice(normals.size());
  std::vector<bool> hit(lat.size(), false);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    concrete_index.emplace(normals[i].members, i);
    Profile p;
    try {
      p = extract_profile(G, normals[i]);
      to_lattice[i] = lat.index_of(p);
    } catch (const Error& e) {
      return fail("subgroup " + std::to_string(i) + " of order " + std::to_string(normals[i].size()) + ": " + e.what());
    }
    if (hit[to_lattice[i]]) return fail("two subgroups share lattice element " + std::to_string(to_lattice[i]));
    hit[to_lattice[i]] = true;
    if (lat.at(to_lattice[i]).order != normals[i].size()) {
      return fail("order of subgroup " + std::to_string(i) + ": " + std::to_string(normals[i].size()) +
                  " vs formula " + lat.at(to_lattice[i]).order.str());
    }
  }

  auto lookup = [&](const ConcreteSubgroup& s) -> std::size_t {
    auto it = concrete_index.find(s.members);
    return it == concrete_index.end() ? normals.size() : it->second;
  };
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      const std::size_t li = to_lattice[i];
      const std::size_t lj = to_lattice[j];
      const std::string pair = "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      if (normals[i].members.is_subset_of(normals[j].members) != lat.leq(li, lj) ||
          normals[j].members.is_subset_of(normals[i].members) != lat.leq(lj, li)) {
        return fail(pair + ": inclusion");
      }
      const std::size_t m = lookup(meet(G, normals[i], normals[j]));
      if (m == normals.size() || to_lattice[m] != lat.meet(li, lj)) return fail(pair + ": meet");
      const std::size_t jn = lookup(join(G, normals[i], normals[j]));
      if (jn == normals.size() || to_lattice[jn] != lat.join(li, lj)) return fail(pair + ": join");
      ++r.pairs_checked;
    }
  }
  r.ok = true;
  return r;
}

LemmaLattice concrete_lattice(const std::string& name, const std::vector<int>& degrees, std::size_t max_order) {
  const ConcreteGroup G = ConcreteGroup::direct_product(degrees, max_order);
  const auto normals = all_normal_subgroups(G, max_order);
  LemmaLattice l;
  l.name = name;
  l.degrees = degrees;
  for (const auto& n : normals) l.orders.push_back(n.size());
  l.poset = inclusion_poset(normals);
  return l;
}

std::map<std::string, LemmaLattice> lemma_lattices() {
  std::map<std::string, LemmaLattice> out;
  const std::vector<std::pair<std::string, std::vector<int>>> groups{
      {"C2", {2}}, {"C2^2", {2, 2}}, {"C2*S3", {2, 3}}, {"C2*S4", {2, 4}}, {"C2*S5", {2, 5}}};
  for (const auto& [name, degrees] : groups) out.emplace(name, concrete_lattice(name, degrees));
  return out;
}

}  // namespace lattower::oracle
