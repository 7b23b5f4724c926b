#include <gtest/gtest.h>

#include <set>

#include "../oracles.hpp"
#include "parind/calculus.hpp"
#include "parind/errors.hpp"

using namespace parind;

namespace {

RootSystemPtr system_of(std::string_view type) {
  return build_root_system(CartanDatum::from_type(type));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no parind::Error thrown";
  return ErrorCode::InvalidCartan;
}

std::vector<SimpleMask> q_sets(const std::vector<GTriple>& ts) {
  std::vector<SimpleMask> out;
  for (const auto& t : ts) out.push_back(t.Q.members());
  return out;
}

// Triple (P, sigma, Q) living in the Levi with simple roots `ambient`.
GTriple triple_in(const RootSystemPtr& rs, SimpleMask ambient, SimpleMask P, SimpleMask trivial,
                  SimpleMask Q) {
  return make_triple(ParabolicSet(rs, P, ambient), trivial, ParabolicSet(rs, Q, ambient));
}

}  // namespace

TEST(Constituents, A2FromBorelTrivialEverywhere) {
  auto rs = system_of("A2");
  ParabolicSet B(rs, 0);
  auto cs = constituents(B, SigmaDescriptor(B, 0b11));
  EXPECT_EQ(q_sets(cs), (std::vector<SimpleMask>{0, 0b01, 0b10, 0b11}));
}

TEST(Constituents, CountIsTwoToTheDeltaSigma) {
  auto rs = system_of("A2");
  ParabolicSet B(rs, 0);
  EXPECT_EQ(constituents(B, SigmaDescriptor(B, 0)).size(), 1u);
  EXPECT_EQ(constituents(B, SigmaDescriptor(B, 0b01)).size(), 2u);
}

TEST(Constituents, RequireSupercuspidal) {
  auto rs = system_of("A2");
  ParabolicSet B(rs, 0);
  SigmaDescriptor sigma(B, 0b11, SigmaFlags{false, true, false});
  EXPECT_EQ(code_of([&] { constituents(B, sigma); }), ErrorCode::NotSupercuspidal);
}

TEST(UpperSets, MatchBruteForceEnumeration) {
  std::vector<std::size_t> known = {2, 3, 6, 20, 168, 7581};
  for (int k = 0; k <= 5; ++k) {
    auto families = boolean_upper_sets(k);
    EXPECT_EQ(families.size(), known[k]);
    EXPECT_EQ(std::set<std::uint64_t>(families.begin(), families.end()).size(), families.size());
    if (k <= 4) {
      EXPECT_EQ(families.size(), oracle::count_upper_sets(k)) << k;
    }
  }
}

TEST(SubrepLattice, A2FromBorel) {
  auto rs = system_of("A2");
  ParabolicSet P1(rs, 0);
  auto lat = subrep_lattice(P1, triple_in(rs, 0, 0, 0b11, 0));
  EXPECT_EQ(lat.index_set, 0b11u);
  EXPECT_EQ(lat.constituents.size(), 4u);
  EXPECT_EQ(lat.elements.size(), 6u);
  auto [socle, cosocle] = socle_cosocle(lat);
  EXPECT_EQ(socle.marker, 0b11u);
  EXPECT_EQ(socle.triple.Q.members(), 0b11u);
  EXPECT_EQ(cosocle.marker, 0u);
  EXPECT_EQ(lat.elements[lat.zero()].family, 0u);
  EXPECT_EQ(lat.elements[lat.whole()].size(), 4u);
  EXPECT_EQ(lat.hasse_edges.size(), 6u);
}

TEST(SubrepLattice, ChainInsideALevi) {
  auto rs = system_of("A2");
  ParabolicSet P1(rs, 0b01);
  auto lat = subrep_lattice(P1, triple_in(rs, 0b01, 0, 0b11, 0));
  EXPECT_EQ(lat.index_set, 0b10u);
  EXPECT_EQ(lat.constituents.size(), 2u);
  EXPECT_EQ(lat.elements.size(), 3u);
  EXPECT_EQ(lat.hasse_edges, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(socle_cosocle(lat).socle.marker, 0b10u);
  EXPECT_FALSE(is_irreducible_induction(P1, triple_in(rs, 0b01, 0, 0b11, 0)));
}

TEST(SubrepLattice, IrreducibleWhenP1ContainsPSigma) {
  auto rs = system_of("A2");
  ParabolicSet P1(rs, 0b01);
  auto t = triple_in(rs, 0b01, 0, 0b01, 0);
  auto lat = subrep_lattice(P1, t);
  EXPECT_EQ(lat.index_set, 0u);
  EXPECT_EQ(lat.elements.size(), 2u);
  EXPECT_EQ(lat.socle(), lat.cosocle());
  EXPECT_TRUE(is_irreducible_induction(P1, t));
  EXPECT_TRUE(is_irreducible_induction(ParabolicSet::whole(rs), triple_in(rs, 0b11, 0, 0b11, 0)));
}

TEST(SubrepLattice, GeneratorsAreMinimalMembers) {
  auto rs = system_of("A3");
  auto lat = subrep_lattice(ParabolicSet(rs, 0), triple_in(rs, 0, 0, 0b111, 0));
  ASSERT_EQ(lat.elements.size(), 20u);
  for (const auto& e : lat.elements) {
    auto members = lat.members(e);
    EXPECT_EQ(members.size(), e.size());
    for (std::size_t g : e.generators) {
      // every member containing the generator's marker is in the element
      for (std::size_t c = 0; c < lat.constituents.size(); ++c) {
        bool above = is_subset(lat.constituents[g].marker, lat.constituents[c].marker);
        if (above) {
          EXPECT_NE(std::find(members.begin(), members.end(), c), members.end());
        }
      }
    }
  }
}

TEST(SubrepLattice, RejectsTriplesOutsideM1) {
  auto rs = system_of("A2");
  ParabolicSet P1(rs, 0b01);
  EXPECT_EQ(code_of([&] { subrep_lattice(P1, triple_in(rs, 0b11, 0, 0b11, 0)); }),
            ErrorCode::InvalidM1Triple);
  // Q = {a2} is not in P(sigma) cap M1
  EXPECT_EQ(code_of([&] { subrep_lattice(ParabolicSet(rs, 0b10), triple_in(rs, 0b10, 0, 0b01, 0b10)); }),
            ErrorCode::InvalidM1Triple);
}

TEST(SubrepLattice, GuardOnIndexSet) {
  auto rs = system_of("A4");
  auto t = triple_in(rs, 0, 0, 0b1111, 0);
  EXPECT_EQ(subrep_lattice(ParabolicSet(rs, 0), t).elements.size(), 168u);
  EXPECT_EQ(code_of([&] { subrep_lattice(ParabolicSet(rs, 0), t, LatticeLimits{3}); }),
            ErrorCode::LatticeTooLarge);
  auto a6 = system_of("A6");
  EXPECT_EQ(code_of([&] { subrep_lattice(ParabolicSet(a6, 0), triple_in(a6, 0, 0, 0b111111, 0)); }),
            ErrorCode::LatticeTooLarge);
}

TEST(SteinbergLattice, Cases) {
  auto rs = system_of("A2");
  auto whole = steinberg_lattice(ParabolicSet::whole(rs), ParabolicSet(rs, 0b01));
  EXPECT_EQ(whole.constituents.size(), 1u);
  EXPECT_EQ(whole.constituent_name(0), "St_{a1}");

  auto borel = steinberg_lattice(ParabolicSet(rs, 0), ParabolicSet(rs, 0));
  EXPECT_EQ(borel.elements.size(), 6u);
  EXPECT_EQ(borel.constituents.size(), 4u);

  auto chain = steinberg_lattice(ParabolicSet(rs, 0b01), ParabolicSet(rs, 0));
  EXPECT_EQ(q_sets({chain.constituents[0].triple, chain.constituents[1].triple}),
            (std::vector<SimpleMask>{0, 0b10}));
  EXPECT_EQ(chain.elements.size(), 3u);
  EXPECT_EQ(socle_cosocle(chain).cosocle.triple.Q.members(), 0u);

  EXPECT_EQ(code_of([&] { steinberg_lattice(ParabolicSet(rs, 0b01), ParabolicSet(rs, 0b10)); }),
            ErrorCode::InvalidNesting);
}

TEST(Adjoints, LeftExamples) {
  auto rs = system_of("A2");
  auto t = triple_in(rs, 0b11, 0, 0b01, 0);
  auto whole = left_adjoint(ParabolicSet::whole(rs), t);
  ASSERT_FALSE(whole.vanishes);
  EXPECT_EQ(*whole.result, t);

  EXPECT_TRUE(left_adjoint(ParabolicSet(rs, 0b10), t).vanishes);

  auto r = left_adjoint(ParabolicSet(rs, 0b01), t);
  ASSERT_FALSE(r.vanishes);
  EXPECT_EQ(r.result->P.ambient(), 0b01u);
  EXPECT_EQ(r.result->Q.members(), 0u);
  EXPECT_EQ(format_triple(*r.result), "I_M{a1}({}, σ, {})");
}

TEST(Adjoints, RightExamples) {
  auto rs = system_of("A2");
  auto empty_q = triple_in(rs, 0b11, 0, 0b11, 0);
  for (SimpleMask p1 = 0; p1 <= 0b11; ++p1) {
    auto r = right_adjoint(ParabolicSet(rs, p1), empty_q);
    ASSERT_FALSE(r.vanishes);
    EXPECT_EQ(r.result->Q.members(), 0u);
  }
  EXPECT_TRUE(right_adjoint(ParabolicSet(rs, 0b10), triple_in(rs, 0b11, 0, 0b01, 0b01)).vanishes);
}

TEST(Adjoints, NonSupercuspidalRejected) {
  auto rs = system_of("A2");
  auto t = make_triple(ParabolicSet(rs, 0), 0b11, ParabolicSet(rs, 0), SigmaFlags{false, true, false});
  EXPECT_EQ(code_of([&] { left_adjoint(ParabolicSet::whole(rs), t); }), ErrorCode::NotSupercuspidal);
  EXPECT_EQ(code_of([&] { right_adjoint(ParabolicSet::whole(rs), t); }), ErrorCode::NotSupercuspidal);
}

TEST(Adjoints, ExtensionsAreReducedToTheirCore) {
  // sigma = e_P(sigma_min) on P = {a1}, trivial on both roots of A1xA1.
  auto rs = system_of("A1xA1");
  auto t = make_triple(ParabolicSet(rs, 0b01), 0b11, ParabolicSet(rs, 0b01),
                       SigmaFlags{false, true, true});
  auto c = canonical_triple(t);
  EXPECT_EQ(c.P.members(), 0u);
  // read off the core, the Jacquet module along P1 = {a2} survives
  EXPECT_FALSE(left_adjoint(ParabolicSet(rs, 0b10), t).vanishes);
}

TEST(Adjoints, CoreMustBeAValidSupercuspidal) {
  auto rs = system_of("A3");
  auto t = make_triple(ParabolicSet(rs, 0b011), 0b110, ParabolicSet(rs, 0b111),
                       SigmaFlags{false, true, true});
  EXPECT_EQ(code_of([&] { canonical_triple(t); }), ErrorCode::InvalidDescriptor);
}

TEST(Cuspidality, Examples) {
  auto rs = system_of("A2");
  auto st = cuspidality(triple_in(rs, 0b11, 0, 0b11, 0));
  EXPECT_TRUE(st.left);
  EXPECT_FALSE(st.right);
  EXPECT_EQ(st.label, "e(σ)⊗St");

  auto ext = cuspidality(triple_in(rs, 0b11, 0, 0b11, 0b11));
  EXPECT_FALSE(ext.left);
  EXPECT_TRUE(ext.right);
  EXPECT_EQ(ext.label, "e(σ)");

  auto rank0 = build_root_system(CartanDatum::from_matrix({}));
  auto c = cuspidality(triple_in(rank0, 0, 0, 0, 0));
  EXPECT_TRUE(c.left && c.right && c.supercuspidal);
}

TEST(Cuspidality, AgreesWithAdjointVanishing) {
  for (auto type : {"A2", "B2", "A1xA1", "A3"}) {
    auto rs = system_of(type);
    SimpleMask all = rs->full_mask();
    for (SimpleMask P = 0; P <= all; ++P)
      for (SimpleMask triv = 0; triv <= all; ++triv) {
        if (triv & P) continue;
        if (!orthogonal_subsets(*rs, P, triv & ~P)) continue;
        for (SimpleMask Q = P; Q <= all; ++Q) {
          if (!is_subset(P, Q) || !is_subset(Q, P | triv)) continue;
          auto t = triple_in(rs, all, P, triv, Q);
          bool all_left_vanish = true, all_right_vanish = true;
          for (SimpleMask p1 = 0; p1 < all; ++p1) {
            all_left_vanish &= left_adjoint(ParabolicSet(rs, p1), t).vanishes;
            all_right_vanish &= right_adjoint(ParabolicSet(rs, p1), t).vanishes;
          }
          auto c = cuspidality(t);
          EXPECT_EQ(c.left, all_left_vanish) << type << " " << format_triple(t);
          EXPECT_EQ(c.right, all_right_vanish) << type << " " << format_triple(t);
        }
      }
  }
}

TEST(Twist, Examples) {
  auto rs = system_of("A2");
  auto none = unramified_twist_conditions(ParabolicSet(rs, 0), triple_in(rs, 0, 0, 0, 0), 0);
  EXPECT_TRUE(none.always_irreducible);
  EXPECT_TRUE(none.conditions.empty());

  auto both = unramified_twist_conditions(ParabolicSet(rs, 0), triple_in(rs, 0, 0, 0, 0), 0b11);
  EXPECT_EQ(both.active, 0b11u);
  EXPECT_EQ(both.conditions,
            (std::vector<std::string>{"χ(a_a1) ≠ χ_a1(a_a1)", "χ(a_a2) ≠ χ_a2(a_a2)"}));

  auto a1a1 = system_of("A1xA1");
  auto r = unramified_twist_conditions(ParabolicSet(a1a1, 0b01),
                                       triple_in(a1a1, 0b01, 0b01, 0, 0b01), 0b10);
  EXPECT_EQ(r.candidate, 0b10u);
  EXPECT_EQ(r.conditions.size(), 1u);
  EXPECT_EQ(r.ignored, 0u);
}

TEST(Twist, DeclaredRootsOutsideCandidatesAreIgnored) {
  auto rs = system_of("A2");
  auto r = unramified_twist_conditions(ParabolicSet(rs, 0b01), triple_in(rs, 0b01, 0b01, 0, 0b01),
                                       0b11);
  // a2 is not orthogonal to a1, a1 lies in P1
  EXPECT_EQ(r.candidate, 0u);
  EXPECT_EQ(r.ignored, 0b11u);
  EXPECT_TRUE(r.always_irreducible);
}

TEST(GeometricLemma, Examples) {
  auto rs = system_of("A2");
  auto g = generate_weyl(rs);
  auto whole = geometric_lemma_report(g, ParabolicSet::whole(rs), ParabolicSet(rs, 0));
  EXPECT_EQ(whole.cells.size(), 1u);

  auto borel = geometric_lemma_report(g, ParabolicSet(rs, 0), ParabolicSet(rs, 0));
  ASSERT_EQ(borel.cells.size(), 6u);
  EXPECT_TRUE(borel.cells.back().identity);
  EXPECT_TRUE(borel.all_vanish_off_identity);
  for (std::size_t k = 0; k + 1 < borel.cells.size(); ++k) {
    ASSERT_TRUE(borel.cells[k].witness.has_value());
    EXPECT_TRUE(oracle::is_witness(*rs, 0, 0, borel.cells[k].w, *borel.cells[k].witness));
  }

  auto mixed = geometric_lemma_report(g, ParabolicSet(rs, 0b01), ParabolicSet(rs, 0b10));
  ASSERT_EQ(mixed.cells.size(), 2u);
  EXPECT_EQ(mixed.cells[0].w.to_string(), "s2*s1");
  EXPECT_TRUE(mixed.cells[1].identity);
}
