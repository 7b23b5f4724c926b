#include <gtest/gtest.h>

#include <set>

#include "../oracles.hpp"
#include "parind/errors.hpp"
#include "parind/weyl.hpp"

using namespace parind;

namespace {

RootSystemPtr system_of(std::string_view type) {
  return build_root_system(CartanDatum::from_type(type));
}

const char* kSmallTypes[] = {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2"};

}  // namespace

TEST(WeylGroup, Orders) {
  std::map<std::string, std::size_t> expected = {{"A1", 2},  {"A2", 6},  {"A3", 24},
                                                 {"B2", 8},  {"B3", 48}, {"C3", 48},
                                                 {"G2", 12}, {"A1xA1", 4}, {"A1xA2", 12},
                                                 {"D4", 192}, {"F4", 1152}};
  for (const auto& [type, n] : expected) {
    auto rs = system_of(type);
    EXPECT_EQ(weyl_group_order(*rs), n) << type;
    EXPECT_EQ(generate_weyl(rs).size(), n) << type;
  }
  EXPECT_EQ(weyl_group_order(*system_of("E8")), 696729600u);
}

TEST(WeylGroup, GuardTripsBeforeEnumeration) {
  try {
    generate_weyl(system_of("E8"));
    FAIL() << "E8 should exceed the default guard";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupTooLarge);
    EXPECT_EQ(e.category(), ErrorCategory::Resource);
  }
  EXPECT_THROW(generate_weyl(system_of("B3"), WeylLimits{47}), Error);
}

TEST(WeylElement, LongestElementOfA2) {
  auto rs = system_of("A2");
  auto w0 = longest_element(rs, rs->full_mask());
  EXPECT_EQ(w0.length(), 3);
  EXPECT_EQ(w0.to_string(), "s1*s2*s1");
  EXPECT_EQ(WeylElement::parse(rs, "s2*s1*s2"), w0);
  for (std::size_t k = 0; k < rs->num_positive(); ++k)
    EXPECT_FALSE(rs->is_positive(w0.apply(static_cast<RootId>(k))));
}

TEST(WeylElement, LengthIsInversionCount) {
  for (auto type : kSmallTypes) {
    auto rs = system_of(type);
    auto g = generate_weyl(rs);
    for (const auto& w : g.elements()) {
      int inversions = 0;
      for (std::size_t k = 0; k < rs->num_positive(); ++k)
        inversions += !rs->is_positive(w.apply(static_cast<RootId>(k)));
      EXPECT_EQ(w.length(), inversions) << type << " " << w.to_string();
      EXPECT_EQ(WeylElement::from_word(rs, w.word()), w);
    }
  }
}

TEST(WeylElement, DescentsAgreeWithLengthChange) {
  auto rs = system_of("B3");
  auto g = generate_weyl(rs);
  for (const auto& w : g.elements())
    for (int i = 0; i < rs->rank(); ++i) {
      auto s = WeylElement::simple_reflection(rs, i);
      EXPECT_EQ((w.left_descents() >> i & 1) != 0, (s * w).length() < w.length());
      EXPECT_EQ((w.right_descents() >> i & 1) != 0, (w * s).length() < w.length());
    }
}

TEST(WeylElement, ParseErrors) {
  auto rs = system_of("A2");
  EXPECT_THROW(WeylElement::parse(rs, "s3"), Error);
  EXPECT_THROW(WeylElement::parse(rs, "s1*"), Error);
  EXPECT_THROW(WeylElement::parse(rs, "t1"), Error);
  EXPECT_TRUE(WeylElement::parse(rs, "e").is_identity());
  EXPECT_TRUE(WeylElement::parse(rs, "s1*s1").is_identity());
}

TEST(WeylGroup, ShortlexOrderStartsAtIdentityEndsAtLongest) {
  auto rs = system_of("G2");
  auto g = generate_weyl(rs);
  EXPECT_TRUE(g.element(0).is_identity());
  EXPECT_EQ(g.element(g.size() - 1), longest_element(rs, rs->full_mask()));
  for (std::size_t k = 1; k < g.size(); ++k)
    EXPECT_TRUE(shortlex_less(g.element(k - 1), g.element(k)));
}

TEST(Bruhat, MatchesSubwordCriterion) {
  for (auto type : kSmallTypes) {
    auto g = generate_weyl(system_of(type));
    for (const auto& u : g.elements())
      for (const auto& w : g.elements())
        ASSERT_EQ(bruhat_leq(u, w), oracle::bruhat_by_subwords(u, w))
            << type << " " << u.to_string() << " vs " << w.to_string();
  }
}

TEST(Bruhat, SmallCases) {
  auto rs = system_of("A2");
  auto s1 = WeylElement::parse(rs, "s1");
  auto s2 = WeylElement::parse(rs, "s2");
  auto s1s2 = WeylElement::parse(rs, "s1*s2");
  EXPECT_FALSE(bruhat_leq(s1, s2));
  EXPECT_FALSE(bruhat_leq(s2, s1));
  EXPECT_TRUE(bruhat_leq(s1, s1s2));
  EXPECT_TRUE(bruhat_leq(s2, s1s2));
  EXPECT_FALSE(bruhat_leq(s1s2, s1));
}

TEST(Bruhat, LongestElementReversesOrder) {
  for (auto type : {"A3", "B3", "G2"}) {
    auto rs = system_of(type);
    auto g = generate_weyl(rs);
    auto w0 = longest_element(rs, rs->full_mask());
    for (const auto& u : g.elements())
      for (const auto& w : g.elements())
        EXPECT_EQ(bruhat_leq(u, w), bruhat_leq(w * w0, u * w0));
  }
}

TEST(CosetReps, CountTimesParabolicOrderIsGroupOrder) {
  for (auto type : kSmallTypes) {
    auto rs = system_of(type);
    auto g = generate_weyl(rs);
    for (SimpleMask Q = 0; Q <= rs->full_mask(); ++Q) {
      auto reps = min_coset_reps(g, Q);
      EXPECT_EQ(reps.reps.size() * g.parabolic_subgroup(Q).size(), g.size()) << type << " " << Q;
      for (const auto& w : reps.reps) EXPECT_EQ(w.left_descents() & Q, 0u);
    }
  }
}

TEST(CosetReps, A2WithFirstRoot) {
  auto rs = system_of("A2");
  auto reps = min_coset_reps(generate_weyl(rs), 0b01);
  std::vector<std::string> words;
  for (const auto& w : reps.reps) words.push_back(w.to_string());
  EXPECT_EQ(words, (std::vector<std::string>{"e", "s2", "s2*s1"}));
}

TEST(DoubleCosets, PartitionTheGroup) {
  for (auto type : kSmallTypes) {
    auto rs = system_of(type);
    auto g = generate_weyl(rs);
    for (SimpleMask I = 0; I <= rs->full_mask(); ++I)
      for (SimpleMask J = 0; J <= rs->full_mask(); ++J) {
        auto reps = double_coset_reps(g, I, J);
        auto cells = oracle::double_cosets(g, I, J);
        ASSERT_EQ(reps.size(), cells.size()) << type << " I=" << I << " J=" << J;
        std::set<std::size_t> covered;
        for (const auto& w : reps) {
          std::size_t id = g.index_of(w);
          covered.insert(id);
          // w is the unique shortest element of its cell
          for (const auto& cell : cells) {
            if (!cell.count(id)) continue;
            for (std::size_t x : cell) {
              if (x != id) {
                EXPECT_GT(g.element(x).length(), w.length());
              }
            }
          }
        }
        EXPECT_EQ(covered.size(), reps.size());
        EXPECT_TRUE(reps.back().is_identity());
        for (std::size_t k = 1; k < reps.size(); ++k)
          EXPECT_GE(reps[k - 1].length(), reps[k].length());
      }
  }
}

TEST(DoubleCosets, A2MixedParabolics) {
  auto rs = system_of("A2");
  auto reps = double_coset_reps(generate_weyl(rs), 0b01, 0b10);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0].to_string(), "s2*s1");
  EXPECT_TRUE(reps[1].is_identity());
}

TEST(UnipotentWitness, ExistsExactlyOffTheProductSet) {
  for (auto type : kSmallTypes) {
    auto rs = system_of(type);
    auto g = generate_weyl(rs);
    for (SimpleMask M = 0; M <= rs->full_mask(); ++M)
      for (SimpleMask M1 = 0; M1 <= rs->full_mask(); ++M1) {
        auto inside = parabolic_product_members(g, M, M1);
        for (std::size_t id = 0; id < g.size(); ++id) {
          const auto& w = g.element(id);
          auto beta = unipotent_witness(g, M, M1, w);
          if (inside[id]) {
            EXPECT_FALSE(beta.has_value());
            // inside the product no root of N1 lands in -N
            for (std::size_t k = 0; k < rs->num_positive(); ++k)
              EXPECT_FALSE(oracle::is_witness(*rs, M, M1, w, static_cast<RootId>(k)));
          } else {
            ASSERT_TRUE(beta.has_value()) << type << " " << w.to_string();
            EXPECT_TRUE(oracle::is_witness(*rs, M, M1, w, *beta));
          }
        }
      }
  }
}

TEST(FiltrationCells, RequireNesting) {
  auto g = generate_weyl(system_of("A2"));
  EXPECT_THROW(filtration_cells(g, 0b01, 0b10), Error);
  auto cells = filtration_cells(g, 0, 0b01);
  EXPECT_EQ(cells.size(), 6u);
  std::size_t surviving = 0;
  for (const auto& c : cells) surviving += c.contributes;
  EXPECT_EQ(surviving, 3u);
}
