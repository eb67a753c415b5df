#include "lattower/lattice.hpp"

#include <algorithm>

#include "lattower/error.hpp"

namespace lattower {

namespace {

void require_shape(const TowerGroupSpec& spec, const std::vector<ChainPos>& per_slot) {
  if (static_cast<int>(per_slot.size()) != spec.T()) {
    throw Error(ErrorKind::SpecMismatch, "expected " + std::to_string(spec.T()) +
                                             " slot entries, got " +
                                             std::to_string(per_slot.size()));
  }
}

std::uint64_t slot_mask(const std::vector<int>& slots) {
  std::uint64_t m = 0;
  for (int s : slots) m |= std::uint64_t{1} << s;
  return m;
}

/// H (over J-coordinates) embedded into F_2^T.
gf2::Subspace embed(int T, const std::vector<int>& J, const gf2::Subspace& H) {
  std::vector<gf2::SignVector> rows;
  for (const auto& r : H.basis()) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < J.size(); ++j) {
      if (r.get(static_cast<int>(j))) v |= std::uint64_t{1} << J[j];
    }
    rows.emplace_back(T, v);
  }
  return gf2::Subspace::span(T, rows);
}

/// W restricted to vectors vanishing off the slots where eff is Full.
gf2::Subspace restrict_support(const std::vector<ChainPos>& eff, const gf2::Subspace& W) {
  const int T = W.width();
  std::vector<gf2::SignVector> units;
  for (int s = 0; s < T; ++s) {
    if (eff[static_cast<std::size_t>(s)] == ChainPos::Full) units.push_back(gf2::SignVector::unit(T, s));
  }
  return gf2::intersect(W, gf2::Subspace::span(T, units));
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::SubProduct: return "SubProduct";
    case Family::SignParity: return "SignParity";
    case Family::Mixed: return "Mixed";
  }
  return "?";
}

AdmissibleTriple validate(const TowerGroupSpec& spec, std::vector<int> J, std::vector<ChainPos> P,
                          gf2::Subspace H) {
  require_shape(spec, P);
  for (std::size_t j = 0; j < J.size(); ++j) {
    if (J[j] < 0 || J[j] >= spec.T() || (j > 0 && J[j] <= J[j - 1])) {
      throw Error(ErrorKind::BadCoordinate, "J must be strictly increasing slot indices");
    }
  }
  if (H.width() != static_cast<int>(J.size())) {
    throw Error(ErrorKind::WidthMismatch, "H has width " + std::to_string(H.width()) +
                                              " but |J| = " + std::to_string(J.size()));
  }
  const std::uint64_t jm = slot_mask(J);
  for (int s = 0; s < spec.T(); ++s) {
    auto& pos = P[static_cast<std::size_t>(s)];
    if ((jm >> s) & 1u) {
      pos = ChainPos::Full;
    } else if (!legal_position(spec.slot(s).degree, pos)) {
      throw Error(ErrorKind::IllegalChainPosition,
                  "slot " + std::to_string(s) + " of degree " +
                      std::to_string(spec.slot(s).degree) + " cannot hold V");
    }
  }
  const int w = H.width();
  for (int j = 0; j < w; ++j) {
    if (H.contains(gf2::SignVector::unit(w, j))) {
      throw Error(ErrorKind::UnitVectorInH, "slot " + std::to_string(J[static_cast<std::size_t>(j)]));
    }
    if (!H.active(j)) {
      throw Error(ErrorKind::DeadCoordinate, "slot " + std::to_string(J[static_cast<std::size_t>(j)]));
    }
  }
  return AdmissibleTriple{std::move(J), std::move(P), std::move(H)};
}

AdmissibleTriple sub_product(const TowerGroupSpec& spec, std::vector<ChainPos> P) {
  return validate(spec, {}, std::move(P), gf2::Subspace::zero(0));
}

AdmissibleTriple sign_parity(const TowerGroupSpec& spec, std::vector<int> I) {
  std::sort(I.begin(), I.end());
  const int w = static_cast<int>(I.size());
  return validate(spec, std::move(I),
                  std::vector<ChainPos>(static_cast<std::size_t>(spec.T()), ChainPos::Full),
                  gf2::even_weight(w));
}

Profile triple_to_profile(const TowerGroupSpec& spec, const AdmissibleTriple& t) {
  require_shape(spec, t.P);
  const int T = spec.T();
  const std::uint64_t jm = slot_mask(t.J);
  Profile p;
  p.eff = t.P;
  std::vector<gf2::SignVector> rows = embed(T, t.J, t.H).basis();
  for (int s = 0; s < T; ++s) {
    if ((jm >> s) & 1u) {
      p.eff[static_cast<std::size_t>(s)] = ChainPos::Full;
    } else if (t.P[static_cast<std::size_t>(s)] == ChainPos::Full) {
      rows.push_back(gf2::SignVector::unit(T, s));
    }
  }
  p.W = gf2::Subspace::span(T, rows);
  return p;
}

void check_profile(const TowerGroupSpec& spec, const Profile& p) {
  require_shape(spec, p.eff);
  if (p.W.width() != spec.T()) {
    throw Error(ErrorKind::InvalidProfile, "W has width " + std::to_string(p.W.width()));
  }
  for (int s = 0; s < spec.T(); ++s) {
    const ChainPos e = p.eff[static_cast<std::size_t>(s)];
    if (!legal_position(spec.slot(s).degree, e)) {
      throw Error(ErrorKind::InvalidProfile, "illegal position at slot " + std::to_string(s));
    }
    const bool active = p.W.active(s);
    if (e != ChainPos::Full && active) {
      throw Error(ErrorKind::InvalidProfile, "sign support at non-Full slot " + std::to_string(s));
    }
    if (e == ChainPos::Full && !active) {
      throw Error(ErrorKind::InvalidProfile, "Full slot " + std::to_string(s) + " has no odd element");
    }
  }
}

AdmissibleTriple profile_to_triple(const TowerGroupSpec& spec, const Profile& p) {
  check_profile(spec, p);
  const int T = spec.T();
  std::vector<int> J;
  std::vector<ChainPos> P = p.eff;
  for (int s = 0; s < T; ++s) {
    if (p.eff[static_cast<std::size_t>(s)] == ChainPos::Full &&
        !p.W.contains(gf2::SignVector::unit(T, s))) {
      J.push_back(s);
    }
  }
  gf2::Subspace H = gf2::project(p.W, J);
  return validate(spec, std::move(J), std::move(P), std::move(H));
}

Family classify(const TowerGroupSpec& spec, const AdmissibleTriple& t) {
  if (t.J.empty()) return Family::SubProduct;
  const bool parity_h = t.J.size() >= 2 && t.H == gf2::even_weight(static_cast<int>(t.J.size()));
  const bool full_off_j = std::all_of(t.P.begin(), t.P.end(), [](ChainPos p) { return p == ChainPos::Full; });
  (void)spec;
  return parity_h && full_off_j ? Family::SignParity : Family::Mixed;
}

Order order_of(const TowerGroupSpec& spec, const AdmissibleTriple& t) {
  require_shape(spec, t.P);
  Order n = Order(1) << t.H.dim();
  const std::uint64_t jm = slot_mask(t.J);
  for (int s = 0; s < spec.T(); ++s) {
    const int k = spec.slot(s).degree;
    n *= ((jm >> s) & 1u) ? chain_cardinality(k, ChainPos::Alt)
                          : chain_cardinality(k, t.P[static_cast<std::size_t>(s)]);
  }
  return n;
}

LatticeElement make_element(const TowerGroupSpec& spec, const AdmissibleTriple& t) {
  return LatticeElement{t, triple_to_profile(spec, t), classify(spec, t), order_of(spec, t)};
}

bool leq_triples(const TowerGroupSpec& spec, const AdmissibleTriple& a, const AdmissibleTriple& b) {
  require_shape(spec, a.P);
  require_shape(spec, b.P);
  const int T = spec.T();
  const std::uint64_t ja = slot_mask(a.J);
  const std::uint64_t jb = slot_mask(b.J);
  auto effective = [](const AdmissibleTriple& t, std::uint64_t jm, int s) {
    return ((jm >> s) & 1u) ? ChainPos::Full : t.P[static_cast<std::size_t>(s)];
  };
  for (int s = 0; s < T; ++s) {
    if (effective(a, ja, s) > effective(b, jb, s)) return false;
  }

  // Coordinates of b.J, split into those shared with a.J (copied from h1)
  // and those free to take any sign allowed by a's effective component.
  std::vector<int> copy_from(b.J.size(), -1);
  std::vector<std::size_t> free_coords;
  for (std::size_t j = 0; j < b.J.size(); ++j) {
    const int s = b.J[j];
    auto it = std::lower_bound(a.J.begin(), a.J.end(), s);
    if (it != a.J.end() && *it == s) {
      copy_from[j] = static_cast<int>(it - a.J.begin());
    } else if (a.P[static_cast<std::size_t>(s)] == ChainPos::Full) {
      free_coords.push_back(j);
    }
  }
  const int wb = static_cast<int>(b.J.size());
  const std::uint64_t eps_count = std::uint64_t{1} << free_coords.size();
  for (const auto& h1 : a.H.elements()) {
    for (std::uint64_t eps = 0; eps < eps_count; ++eps) {
      std::uint64_t h = 0;
      for (std::size_t j = 0; j < b.J.size(); ++j) {
        if (copy_from[j] >= 0 && h1.get(copy_from[j])) h |= std::uint64_t{1} << j;
      }
      for (std::size_t f = 0; f < free_coords.size(); ++f) {
        if ((eps >> f) & 1u) h |= std::uint64_t{1} << free_coords[f];
      }
      if (!b.H.contains(gf2::SignVector(wb, h))) return false;
    }
  }
  return true;
}

bool leq_profiles(const Profile& a, const Profile& b) {
  if (a.eff.size() != b.eff.size()) throw Error(ErrorKind::SpecMismatch, "profile widths differ");
  for (std::size_t s = 0; s < a.eff.size(); ++s) {
    if (a.eff[s] > b.eff[s]) return false;
  }
  return a.W.is_subspace_of(b.W);
}

Profile meet_profiles(const TowerGroupSpec& spec, const Profile& a, const Profile& b) {
  require_shape(spec, a.eff);
  require_shape(spec, b.eff);
  Profile m;
  m.eff.resize(a.eff.size());
  for (std::size_t s = 0; s < a.eff.size(); ++s) m.eff[s] = std::min(a.eff[s], b.eff[s]);
  m.W = gf2::intersect(a.W, b.W);
  bool changed = true;
  while (changed) {
    changed = false;
    m.W = restrict_support(m.eff, m.W);
    for (int s = 0; s < spec.T(); ++s) {
      auto& e = m.eff[static_cast<std::size_t>(s)];
      if (e == ChainPos::Full && !m.W.active(s)) {
        e = ChainPos::Alt;
        changed = true;
      }
    }
  }
  return m;
}

Profile join_profiles(const TowerGroupSpec& spec, const Profile& a, const Profile& b) {
  require_shape(spec, a.eff);
  require_shape(spec, b.eff);
  Profile j;
  j.eff.resize(a.eff.size());
  for (std::size_t s = 0; s < a.eff.size(); ++s) j.eff[s] = std::max(a.eff[s], b.eff[s]);
  j.W = gf2::sum(a.W, b.W);
  return j;
}

std::vector<gf2::Subspace> admissible_sign_subgroups(int width) {
  std::vector<gf2::Subspace> out;
  gf2::for_each_subspace(width, [&](const gf2::Subspace& H) {
    for (int j = 0; j < width; ++j) {
      if (H.contains(gf2::SignVector::unit(width, j)) || !H.active(j)) return;
    }
    out.push_back(H);
  });
  return out;
}

std::size_t Lattice::meet(std::size_t i, std::size_t j) const {
  return index_of(meet_profiles(spec_, at(i).profile, at(j).profile));
}

std::size_t Lattice::join(std::size_t i, std::size_t j) const {
  return index_of(join_profiles(spec_, at(i).profile, at(j).profile));
}

std::size_t Lattice::index_of(const AdmissibleTriple& t) const {
  auto it = by_triple_.find(t);
  if (it == by_triple_.end()) throw Error(ErrorKind::Mismatch, "triple not in lattice");
  return it->second;
}

std::size_t Lattice::index_of(const Profile& p) const {
  auto it = by_profile_.find(p);
  if (it == by_profile_.end()) throw Error(ErrorKind::Mismatch, "profile not in lattice");
  return it->second;
}

Lattice enumerate_lattice(const TowerGroupSpec& spec, int max_T) {
  const int T = spec.T();
  if (T > max_T) {
    throw Error(ErrorKind::TooLarge, "T = " + std::to_string(T) + " exceeds enumeration bound " +
                                         std::to_string(max_T));
  }
  if (T >= gf2::kMaxWidth) throw Error(ErrorKind::TooLarge, "T too large for sign vectors");

  std::map<int, std::vector<gf2::Subspace>> h_by_width;
  Lattice lat;
  lat.spec_ = spec;
  const std::uint64_t subsets = std::uint64_t{1} << T;
  for (std::uint64_t jm = 0; jm < subsets; ++jm) {
    std::vector<int> J;
    std::vector<int> free_slots;
    for (int s = 0; s < T; ++s) {
      if ((jm >> s) & 1u) {
        J.push_back(s);
      } else {
        free_slots.push_back(s);
      }
    }
    const int w = static_cast<int>(J.size());
    auto [it, inserted] = h_by_width.try_emplace(w);
    if (inserted) it->second = admissible_sign_subgroups(w);

    for (const auto& H : it->second) {
      // Mixed-radix walk over chain positions of the free slots.
      std::vector<std::size_t> digit(free_slots.size(), 0);
      bool done = false;
      while (!done) {
        std::vector<ChainPos> P(static_cast<std::size_t>(T), ChainPos::Full);
        for (std::size_t f = 0; f < free_slots.size(); ++f) {
          P[static_cast<std::size_t>(free_slots[f])] = chain(spec.slot(free_slots[f]).degree)[digit[f]];
        }
        AdmissibleTriple t = validate(spec, J, std::move(P), H);
        lat.elements_.push_back(make_element(spec, t));

        done = true;
        for (std::size_t f = free_slots.size(); f-- > 0;) {
          if (++digit[f] < chain(spec.slot(free_slots[f]).degree).size()) {
            done = false;
            break;
          }
          digit[f] = 0;
        }
      }
    }
  }

  for (std::size_t i = 0; i < lat.elements_.size(); ++i) {
    const auto& e = lat.elements_[i];
    lat.by_triple_.emplace(e.triple, i);
    lat.by_profile_.emplace(e.profile, i);
    switch (e.family) {
      case Family::SubProduct: ++lat.census_.sub_products; break;
      case Family::SignParity: ++lat.census_.sign_parity; break;
      case Family::Mixed: ++lat.census_.mixed; break;
    }
  }
  lat.census_.total = lat.elements_.size();
  lat.poset_ = Poset::from_relation(lat.elements_.size(), [&](std::size_t i, std::size_t j) {
    return leq_profiles(lat.elements_[i].profile, lat.elements_[j].profile);
  });
  lat.bottom_ = lat.poset_.bottom();
  lat.top_ = lat.poset_.top();
  return lat;
}

MixedDecomposition decompose_mixed(const TowerGroupSpec& spec, const LatticeElement& e) {
  if (e.family != Family::Mixed) {
    throw Error(ErrorKind::NotMixed, std::string("element is ") + std::string(to_string(e.family)));
  }
  MixedDecomposition d;
  d.sub_product = sub_product(spec, e.profile.eff);
  const auto& J = e.triple.J;
  const gf2::Subspace constraints = gf2::annihilator(e.triple.H);
  for (const auto& f : constraints.basis()) {
    std::vector<int> I;
    for (std::size_t j = 0; j < J.size(); ++j) {
      if (f.get(static_cast<int>(j))) I.push_back(J[j]);
    }
    d.parity_sets.push_back(std::move(I));
  }

  Profile acc = triple_to_profile(spec, d.sub_product);
  for (const auto& I : d.parity_sets) {
    acc = meet_profiles(spec, acc, triple_to_profile(spec, sign_parity(spec, I)));
  }
  if (acc != e.profile) throw Error(ErrorKind::Mismatch, "decomposition does not reproduce element");
  return d;
}

}  // namespace lattower
