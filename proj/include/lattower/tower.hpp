#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "lattower/autgroup.hpp"
#include "lattower/group_spec.hpp"
#include "lattower/perm_oracle.hpp"

namespace lattower {

/// S_a x S_b with S_0 = S_1 = 1 and S_2 = C_2. After a Start node, a counts
/// factors of S_4 provenance and b the rest.
struct PairNode {
  int a = 0;
  int b = 0;

  bool operator==(const PairNode&) const = default;
};

using TowerNode = std::variant<TowerGroupSpec, PairNode>;

bool is_trivial(const TowerNode& node);

/// "S4^2*S3^2", "C2^2", "C2*S3", "S3", "1".
std::string describe(const TowerNode& node);

/// Degrees >= 2 of the nontrivial symmetric factors, ascending.
std::vector<int> nontrivial_degrees(const PairNode& node);

/// One LatAut step. Start(spec) goes to Pair(a4, B); a pair is dispatched on
/// the multiset of its nontrivial factors.
TowerNode latauto_step(const TowerNode& node);

/// |LatAut(node)| as predicted by latauto_step.
Order predicted_lataut_order(const TowerNode& node);

struct TowerRun {
  std::vector<TowerNode> nodes;
  int length() const { return static_cast<int>(nodes.size()) - 1; }
};

inline constexpr int kTowerIterationCap = 10;

/// Iterates latauto_step until the node is trivial.
TowerRun run_tower(const TowerNode& start);

/// "G_0 = S4^2*S3^2 → G_1 = C2^2 → G_2 = S3 → G_3 = 1 (3 steps, sharp)"
std::string format_run(const TowerRun& run);

struct StepCheck {
  std::string node;
  std::string predicted;
  Order predicted_order;
  std::size_t brute_force_order = 0;
  std::string source;  // "lattice_core" or "perm_oracle"
  bool skipped = false;
  std::string warning;
  bool match = false;
};

struct Bounds {
  int max_T = kDefaultMaxT;
  std::size_t max_lattice = kDefaultMaxLattice;
  std::size_t max_order = oracle::kDefaultMaxOrder;
};

/// Compares latauto_step with a brute-force automorphism count of the actual
/// lattice. Nodes beyond the bounds come back skipped with a warning.
StepCheck verify_step_against_lattice(const TowerNode& node, const Bounds& bounds = {});

}  // namespace lattower
