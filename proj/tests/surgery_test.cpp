#include "contactfill/surgery.hpp"

#include <random>

#include <gtest/gtest.h>

#include "contactfill/error.hpp"
#include "contactfill/fillability.hpp"
#include "oracles.hpp"

using namespace contactfill;
using namespace contactfill::surgery;
using mcg::Word;

namespace {

Slope S(const char* text) { return Slope::parse(text); }
Word W(const char* text) { return Word::parse(text); }

Rational random_negative(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(1, 60), den(1, 12);
  return ratio(-num(rng), den(rng));
}

}  // namespace

TEST(TopologicalTest, Examples) {
  EXPECT_EQ(topological_coefficient(-1, -6), -7);
  EXPECT_EQ(topological_coefficient(ratio(1, 2), 0), ratio(1, 2));
  EXPECT_EQ(topological_coefficient(-2, 1), -1);
}

TEST(FramingTest, Examples) {
  EXPECT_EQ(transverse_framing_update(S("1"), TransverseSurgery::AdmissibleMinusOne), S("1/2"));
  EXPECT_EQ(transverse_framing_update(S("1"), TransverseSurgery::InadmissiblePlusOne), Slope::infinity());
}

TEST(FramingTest, RepeatedAdmissibleSurgery) {
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k <= 20; ++k) {
      Slope s(Integer(1), Integer(n));
      for (int step = 0; step < k; ++step) s = transverse_framing_update(s, TransverseSurgery::AdmissibleMinusOne);
      EXPECT_EQ(s, Slope(Integer(1), Integer(n + k)));
    }
  }
}

TEST(FramingTest, AdmissibleThenInadmissibleIsIdentity) {
  for (const auto& small : oracle::all_slopes(15)) {
    const Slope s(Integer(small.p), Integer(small.q));
    const Slope up = transverse_framing_update(s, TransverseSurgery::AdmissibleMinusOne);
    EXPECT_EQ(transverse_framing_update(up, TransverseSurgery::InadmissiblePlusOne), s);
    const Slope down = transverse_framing_update(s, TransverseSurgery::InadmissiblePlusOne);
    EXPECT_EQ(transverse_framing_update(down, TransverseSurgery::AdmissibleMinusOne), s);
  }
}

TEST(MeridianTest, Examples) {
  for (int n = -5; n <= 5; ++n) {
    if (n == 0) continue;
    EXPECT_EQ(meridian_conversion(Slope(-n)), Slope(Integer(1), Integer(n)));
  }
  EXPECT_EQ(meridian_conversion(S("0")), Slope::infinity());
  EXPECT_EQ(meridian_conversion(Slope::infinity()), S("0"));
}

TEST(BindingSlopeTest, Examples) {
  EXPECT_EQ(binding_neighborhood_slope(W("a b^-1"), 1), S("1"));
  EXPECT_EQ(binding_neighborhood_slope(W("a b"), 1), S("1/2"));
  EXPECT_EQ(binding_neighborhood_slope(W("d^-3 a b^-1"), 1), S("-1/2"));
}

TEST(MenkeTest, Examples) {
  EXPECT_EQ(menke_candidates(MixedTorus(S("-1"), S("0"), S("1"))), std::vector<Slope>{Slope::infinity()});
  EXPECT_EQ(menke_candidates(MixedTorus(S("-1/2"), S("0"), S("1/2"))),
            (std::vector<Slope>{S("1"), Slope::infinity(), S("-1")}));
  EXPECT_EQ(menke_candidates(MixedTorus(S("-3"), S("-2"), S("-1"))), std::vector<Slope>{Slope::infinity()});
}

TEST(MenkeTest, CandidatesAreAllowedMeridians) {
  const auto slopes = oracle::all_slopes(4);
  for (const auto& a : slopes) {
    for (const auto& b : slopes) {
      for (const auto& c : slopes) {
        const Slope s_minus(Integer(a.p), Integer(a.q)), s_zero(Integer(b.p), Integer(b.q)),
            s_plus(Integer(c.p), Integer(c.q));
        if (s_minus == s_plus || !in_clockwise_arc(s_zero, s_minus, s_plus)) continue;
        for (const Slope& s : menke_candidates(MixedTorus(s_minus, s_zero, s_plus))) {
          EXPECT_TRUE(has_edge(s, s_zero));
          EXPECT_TRUE(in_clockwise_arc(s, s_plus, s_minus));
        }
      }
    }
  }
}

TEST(MixedTorusTest, RejectsBadOrder) {
  EXPECT_THROW(MixedTorus(S("1"), S("0"), S("-1")), DomainError);
  EXPECT_THROW(SolidTorus(S("1"), S("1"), Side::Lower), DomainError);
}

TEST(SolidTorusTest, Admits) {
  const SolidTorus lower(S("-2"), S("0"), Side::Lower);
  EXPECT_TRUE(lower.admits(S("-1")));
  const SolidTorus upper(S("-2"), S("0"), Side::Upper);
  EXPECT_NE(lower.admits(S("-1")), upper.admits(S("-1")));
}

TEST(UniqueTightTest, Examples) {
  EXPECT_TRUE(unique_tight_lower(S("-1/2")));
  EXPECT_FALSE(unique_tight_lower(S("-2/3")));
  EXPECT_TRUE(unique_tight_lower(Slope::infinity()));
  EXPECT_THROW(unique_tight_lower(S("0")), DomainError);
}

TEST(LensTest, Examples) {
  EXPECT_EQ(lens_from_mixed_surgery(-1), S("-1/2"));
  EXPECT_EQ(lens_from_mixed_surgery(ratio(-1, 2)), S("-2/3"));
  EXPECT_EQ(lens_from_mixed_surgery(-3), S("-1/4"));
  EXPECT_THROW(lens_from_mixed_surgery(0), DomainError);
}

TEST(SeifertTest, Examples) {
  EXPECT_EQ(seifert_coefficient(W("a b"), -1), S("1/5"));
  EXPECT_EQ(seifert_coefficient(W("a b^-1"), ratio(-1, 2)), S("2/7"));
  EXPECT_EQ(seifert_coefficient(W("d^-3 a b^-1"), -1), S("1/1"));
  EXPECT_THROW(seifert_coefficient(W("a b"), 0), DomainError);
  EXPECT_THROW(seifert_coefficient(W("a b"), ratio(1, 3)), DomainError);
}

TEST(SeifertTest, ClosedFormMatchesFramingsAndLandsInR) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Word w = oracle::random_word(rng);
    const Rational r = random_negative(rng);
    const Slope closed = seifert_coefficient(w, r);
    ASSERT_EQ(closed, seifert_coefficient_via_framings(w, r)) << w.str();
    const Integer nk = mcg::n_K(w);
    const Slope bound = nk == 0 ? Slope::infinity() : Slope(Integer(1), nk);
    ASSERT_TRUE(fill::r_set_contains(bound, closed)) << w.str() << " " << closed.str();
  }
}

TEST(SeifertTest, HitsInfinityWhenCoefficientIsNK) {
  // n_K = -1 for d^-4 a b^-1 (c = -4, pseudo-Anosov).
  const Word w = W("d^-4 a b^-1");
  ASSERT_EQ(mcg::n_K(w), -1);
  EXPECT_EQ(seifert_coefficient(w, -1), Slope::infinity());
  EXPECT_EQ(seifert_coefficient_via_framings(w, -1), Slope::infinity());
}
