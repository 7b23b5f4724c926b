#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parind/calculus.hpp"
#include "parind/weyl.hpp"

namespace parind {

using BruhatComparator = std::function<bool(const WeylElement&, const WeylElement&)>;

// Deliberately broken comparator for mutation testing: claims s_i <= s_j for
// one pair of distinct simple reflections and otherwise defers to bruhat_leq.
BruhatComparator flipped_bruhat(int i = 0, int j = 1);

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;  // first failure, "<type>: <details>"
};

struct VerifyOptions {
  std::vector<std::string> types = {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2"};
  int rank_bound = 3;
  BruhatComparator bruhat;  // bruhat_leq when empty
  WeylLimits limits;
};

struct VerifyReport {
  std::vector<std::string> systems;  // checked, in input order
  std::vector<std::string> skipped;  // above the rank bound
  std::vector<InvariantResult> invariants;
  bool passed() const;
};

VerifyReport verify_all(const VerifyOptions& options);

// Every w outside W_M * W_M1, for every pair (M, M1), must carry a unipotent
// witness; each one is re-checked from its definition.
struct WitnessSweep {
  std::size_t elements = 0;
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::string counterexample;
};
WitnessSweep sweep_witnesses(const WeylGroup& group);

// All G-level triples (P, sigma, Q) with supercuspidal sigma, in a fixed order.
std::vector<GTriple> all_supercuspidal_triples(const RootSystemPtr& rs);

// All (P1, triple in M1) pairs with supercuspidal sigma.
std::vector<std::pair<ParabolicSet, GTriple>> all_m1_inductions(const RootSystemPtr& rs);

// Non-e-minimal triples obtained by enlarging the Levi of a supercuspidal
// triple by roots sigma is trivial on; flagged core_supercuspidal.
std::vector<GTriple> all_extension_triples(const RootSystemPtr& rs);

}  // namespace parind
