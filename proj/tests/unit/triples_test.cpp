#include <gtest/gtest.h>

#include "parind/errors.hpp"
#include "parind/parabolic.hpp"
#include "parind/triples.hpp"

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

const SigmaFlags kNotSupercuspidal{false, true, false};

}  // namespace

TEST(ParabolicSet, LatticeOperations) {
  auto rs = system_of("A3");
  ParabolicSet P(rs, 0b011), P1(rs, 0b110);
  EXPECT_EQ(meet(P, P1).members(), 0b010u);
  EXPECT_EQ(join(P, P1).members(), 0b111u);
  EXPECT_TRUE(join(P, P1).is_whole());
  EXPECT_TRUE(ParabolicSet::minimal(rs).is_minimal());
  EXPECT_EQ(P.to_string(), "{a1,a2}");
}

TEST(ParabolicSet, AmbientIsEnforced) {
  auto rs = system_of("A3");
  EXPECT_EQ(code_of([&] { ParabolicSet(rs, 0b1000); }), ErrorCode::InvalidNesting);
  EXPECT_EQ(code_of([&] { ParabolicSet(rs, 0b101, 0b011); }), ErrorCode::InvalidNesting);
  ParabolicSet in_levi(rs, 0b001, 0b011), in_g(rs, 0b001);
  EXPECT_FALSE(in_levi == in_g);
  EXPECT_EQ(code_of([&] { meet(in_levi, in_g); }), ErrorCode::MixedAmbient);
  auto other = system_of("A1xA2");
  EXPECT_EQ(code_of([&] { join(ParabolicSet(other, 1), in_g); }), ErrorCode::MixedAmbient);
}

TEST(ParabolicSet, LeviIntersectionLivesInTheLevi) {
  auto rs = system_of("B3");
  ParabolicSet P(rs, 0b101), M1(rs, 0b011);
  auto r = levi_intersection(P, M1);
  EXPECT_EQ(r.members(), 0b001u);
  EXPECT_EQ(r.ambient(), 0b011u);
}

TEST(ParabolicSet, SubsetOrder) {
  auto subsets = subsets_of(0b111);
  ASSERT_EQ(subsets.size(), 8u);
  std::vector<SimpleMask> expected = {0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  EXPECT_EQ(subsets, expected);
  EXPECT_EQ(subsets_of(0b1010), (std::vector<SimpleMask>{0, 0b0010, 0b1000, 0b1010}));
}

TEST(SigmaDescriptor, PSigmaAddsTrivialRoots) {
  auto rs = system_of("A3");
  SigmaDescriptor sigma(ParabolicSet(rs, 0b001), 0b100);
  EXPECT_EQ(sigma.delta_sigma(), 0b100u);
  EXPECT_EQ(p_sigma(sigma).members(), 0b101u);
  SigmaDescriptor full(ParabolicSet(rs, 0), rs->full_mask());
  EXPECT_TRUE(p_sigma(full).is_whole());
}

TEST(SigmaDescriptor, SupercuspidalMustBeEMinimalAndOrthogonal) {
  auto rs = system_of("A2");
  // trivial on a root of its own Levi
  EXPECT_EQ(code_of([&] { SigmaDescriptor(ParabolicSet(rs, 0b01), 0b01); }),
            ErrorCode::InvalidDescriptor);
  // Delta_P = {a1} is not orthogonal to Delta_sigma = {a2} in A2
  EXPECT_EQ(code_of([&] { SigmaDescriptor(ParabolicSet(rs, 0b01), 0b10); }),
            ErrorCode::InvalidDescriptor);
  // orthogonal in A1xA1
  auto a1a1 = system_of("A1xA1");
  EXPECT_NO_THROW(SigmaDescriptor(ParabolicSet(a1a1, 0b01), 0b10));
  EXPECT_EQ(code_of([&] { SigmaDescriptor(ParabolicSet(rs, 0), 0, SigmaFlags{true, false, false}); }),
            ErrorCode::InvalidDescriptor);
}

TEST(SigmaDescriptor, EMinimalOrthogonalityCheck) {
  auto rs = system_of("A2");
  SigmaDescriptor bad(ParabolicSet(rs, 0b01), 0b10, kNotSupercuspidal);
  EXPECT_FALSE(check_e_minimal_orthogonality(bad));
  SigmaDescriptor not_minimal(ParabolicSet(rs, 0b01), 0b01, kNotSupercuspidal);
  EXPECT_EQ(code_of([&] { check_e_minimal_orthogonality(not_minimal); }), ErrorCode::NotEMinimal);
  SigmaDescriptor ok(ParabolicSet(rs, 0), 0b11);
  EXPECT_TRUE(check_e_minimal_orthogonality(ok));
}

TEST(SigmaDescriptor, MinimizeDropsTrivialRootsOfTheLevi) {
  auto rs = system_of("A3");
  SigmaDescriptor sigma(ParabolicSet(rs, 0b101), 0b100, SigmaFlags{false, true, true});
  auto [core, sigma_min] = minimize(sigma);
  EXPECT_EQ(core.members(), 0b001u);
  EXPECT_TRUE(sigma_min.supercuspidal());
  EXPECT_EQ(p_sigma(sigma_min), p_sigma(sigma));

  // identity on supercuspidal descriptors
  SigmaDescriptor sc(ParabolicSet(rs, 0b001), 0b100);
  EXPECT_EQ(minimize(sc).sigma, sc);
}

TEST(GTriple, ValidationNamesTheOffendingRoot) {
  auto rs = system_of("A2");
  auto P = ParabolicSet(rs, 0);
  SigmaDescriptor sigma(P, 0b01);
  try {
    validate_triple(GTriple{P, sigma, ParabolicSet(rs, 0b10)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QOutOfRange);
    EXPECT_NE(std::string(e.what()).find("a2"), std::string::npos);
  }
  auto v = validate_triple(GTriple{P, sigma, ParabolicSet(rs, 0b01)});
  EXPECT_EQ(v.p_sigma.members(), 0b01u);
}

TEST(GTriple, QMustContainP) {
  auto rs = system_of("A1xA1");
  ParabolicSet P(rs, 0b01);
  SigmaDescriptor sigma(P, 0b10);
  EXPECT_EQ(code_of([&] { validate_triple(GTriple{P, sigma, ParabolicSet(rs, 0b10)}); }),
            ErrorCode::QOutOfRange);
}

TEST(GTriple, MixedAmbientRejected) {
  auto rs = system_of("A2");
  ParabolicSet P(rs, 0, 0b01);
  SigmaDescriptor sigma(P, 0b11);
  EXPECT_EQ(code_of([&] { validate_triple(GTriple{P, sigma, ParabolicSet(rs, 0b01)}); }),
            ErrorCode::MixedAmbient);
}

TEST(GTriple, Formatting) {
  auto rs = system_of("A2");
  auto t = make_triple(ParabolicSet(rs, 0), 0b11, ParabolicSet(rs, 0b01));
  EXPECT_EQ(format_triple(t), "I_G({}, σ, {a1})");
  auto m1 = make_triple(ParabolicSet(rs, 0, 0b01), 0b11, ParabolicSet(rs, 0, 0b01));
  EXPECT_EQ(format_triple(m1), "I_M{a1}({}, σ, {})");
}

TEST(GTriple, MinimizeKeepsQ) {
  auto rs = system_of("A3");
  ParabolicSet P(rs, 0b101);
  auto t = make_triple(P, 0b100, ParabolicSet(rs, 0b101), SigmaFlags{false, true, true});
  auto m = minimize_triple(t);
  EXPECT_EQ(m.P.members(), 0b001u);
  EXPECT_EQ(m.Q, t.Q);
}
