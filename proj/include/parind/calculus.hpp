#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parind/triples.hpp"
#include "parind/weyl.hpp"

namespace parind {

// Brings a triple to its supercuspidal-support form: validates it, passes to
// the e-minimal core when sigma is flagged as an extension of a supercuspidal,
// and throws NotSupercuspidal when no supercuspidal core is available.
GTriple canonical_triple(const GTriple& t);

// Irreducible constituents of Ind_P^G sigma for supercuspidal sigma: one
// I_G(P, sigma, Q) for each P <= Q <= P(sigma), ordered by |Q| then by index
// list. Throws NotSupercuspidal for other sigma.
std::vector<GTriple> constituents(const ParabolicSet& P, const SigmaDescriptor& sigma);

enum class LatticeKind { Induced, Steinberg };

struct LatticeLimits {
  // Number of upper sets explodes with |index set|: 20 at 3, 7581 at 5,
  // 7828354 at 6.
  int max_index_set = 5;
};

// Upper sets of the Boolean lattice of subsets of index_set cannot exceed
// this: families are stored as 64-bit masks over subsets.
inline constexpr int kMaxLatticeIndexSet = 6;

struct LatticeConstituent {
  GTriple triple;
  SimpleMask marker;  // S subset of index_set; the constituent has Q = base u S
};

struct LatticeElement {
  std::uint64_t family = 0;             // bit s set iff local subset s belongs
  std::vector<std::size_t> generators;  // constituent ids of the minimal members
  std::size_t size() const;
};

// Subrepresentation lattice of a multiplicity-free induced representation:
// isomorphic to the lattice of upper sets of the power set of index_set,
// ordered by inclusion. Constituent c generates the subrepresentation whose
// irreducible constituents are those with markers containing c's marker.
struct SubrepLattice {
  LatticeKind kind = LatticeKind::Induced;
  ParabolicSet induced_from;  // P1
  SimpleMask index_set = 0;
  SimpleMask base = 0;
  std::vector<LatticeConstituent> constituents;
  std::vector<LatticeElement> elements;  // ordered by size, zero first
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;  // (lower, upper)

  std::size_t socle() const;    // constituent id with marker = index_set
  std::size_t cosocle() const;  // constituent id with marker = empty
  std::size_t zero() const { return 0; }
  std::size_t whole() const { return elements.size() - 1; }
  // Constituent ids contained in an element.
  std::vector<std::size_t> members(const LatticeElement& e) const;
  std::string constituent_name(std::size_t id) const;
};

// Lattice of Ind_{P1}^G I_{M1}(P, sigma, Q). The triple must live in M1
// (ambient Delta_{P1}); problems are reported as InvalidM1Triple.
SubrepLattice subrep_lattice(const ParabolicSet& P1, const GTriple& m1_triple,
                             LatticeLimits limits = {});

// Lattice of Ind_P^G St_Q^{M_P}, for Q <= P.
SubrepLattice steinberg_lattice(const ParabolicSet& P, const ParabolicSet& Q,
                                LatticeLimits limits = {});

struct SocleCosocle {
  LatticeConstituent socle;
  LatticeConstituent cosocle;
};
SocleCosocle socle_cosocle(const SubrepLattice& lattice);

bool is_irreducible_induction(const ParabolicSet& P1, const GTriple& m1_triple);

struct AdjointResult {
  bool vanishes = true;
  std::optional<GTriple> result;  // lives in M1; absent iff vanishes
};

AdjointResult left_adjoint(const ParabolicSet& P1, const GTriple& t);
AdjointResult right_adjoint(const ParabolicSet& P1, const GTriple& t);

struct Cuspidality {
  bool left = false;
  bool right = false;
  bool supercuspidal = false;
  // Closed-form name of the representation in the two distinguished cases:
  // "e(σ)⊗St" (Q = P, P(sigma) = G) and "e(σ)" (Q = P(sigma) = G).
  std::optional<std::string> label;
};
Cuspidality cuspidality(const GTriple& t);

struct TwistReport {
  SimpleMask candidate = 0;  // Delta \ Delta_{P1} orthogonal to Delta_P
  SimpleMask active = 0;     // candidate roots actually declared
  SimpleMask ignored = 0;    // declared roots that cannot matter
  std::vector<std::string> conditions;
  bool generically_irreducible = true;
  bool always_irreducible = true;  // no active roots
};
TwistReport unramified_twist_conditions(const ParabolicSet& P1, const GTriple& m1_triple,
                                        SimpleMask declared);

struct GeometricCell {
  WeylElement w;
  bool identity = false;
  std::optional<RootId> witness;
};
struct GeometricLemmaReport {
  SimpleMask M = 0;
  SimpleMask M1 = 0;
  std::vector<GeometricCell> cells;
  bool all_vanish_off_identity = true;
};
// Double coset representatives of W_M \ W / W_{M1}; only the identity cell
// survives for a supercuspidal, every other cell carries a unipotent witness.
GeometricLemmaReport geometric_lemma_report(const WeylGroup& group, const ParabolicSet& P,
                                            const ParabolicSet& P1);

// Upper sets of the power set of {0..k-1}, as masks over the 2^k subsets.
std::vector<std::uint64_t> boolean_upper_sets(int k);

}  // namespace parind
