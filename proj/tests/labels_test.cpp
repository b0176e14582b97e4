#include "annulus/labels.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"

namespace annulus {
namespace {

bool has(const ValidationResult& r, ViolationCode code) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

TEST(ValidateLabelTest, K1NonIntegralSlopeIsFine) {
  EXPECT_TRUE(validate_label(K1{Slope(4, 3)}, Strictness::Strict).ok());
}

TEST(ValidateLabelTest, K1IntegralSlopeIsAlwaysRejected) {
  for (auto mode : {Strictness::Strict, Strictness::Lenient}) {
    const auto r = validate_label(K1{Slope(3)}, mode);
    EXPECT_TRUE(has(r, ViolationCode::NonIntegralRequired));
  }
}

TEST(ValidateLabelTest, K2IntegralSlopeOnlyFailsStrict) {
  EXPECT_TRUE(validate_label(K2{Slope(2)}, Strictness::Lenient).ok());
  EXPECT_TRUE(has(validate_label(K2{Slope(2)}, Strictness::Strict),
                  ViolationCode::NonIntegralRequired));
}

TEST(ValidateLabelTest, InfiniteSlopes) {
  for (auto mode : {Strictness::Strict, Strictness::Lenient}) {
    EXPECT_TRUE(has(validate_label(K1{Slope::infinity()}, mode), ViolationCode::InfiniteSlope));
    EXPECT_TRUE(has(validate_label(K2{Slope::infinity()}, mode), ViolationCode::InfiniteSlope));
    EXPECT_TRUE(has(validate_label(L{SlopePair(Slope::infinity(), Slope(1))}, mode),
                    ViolationCode::InfiniteSlope));
  }
}

TEST(ValidateLabelTest, SlopePairForm) {
  EXPECT_TRUE(has(validate_label(L{SlopePair(Slope(2, 3), Slope(5))}, Strictness::Lenient),
                  ViolationCode::SlopePairFormInvalid));
  EXPECT_TRUE(validate_label(L{SlopePair(Slope(1, 2), Slope(2))}, Strictness::Strict).ok());
}

TEST(ValidateLabelTest, MissingPairIsOnlyAWarning) {
  const auto r = validate_label(L{}, Strictness::Strict);
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings[0].code, ViolationCode::SlopePairMissing);
}

TEST(ValidateLabelTest, HopfAndEmAlwaysPass) {
  for (AnnulusLabel l : {AnnulusLabel{H1{}}, AnnulusLabel{H2{}}, AnnulusLabel{EM{}}}) {
    EXPECT_TRUE(validate_label(l, Strictness::Strict).ok());
  }
}

TEST(ValidateLabelTest, StrictPassImpliesLenientPass) {
  oracle::Rng rng(23);
  for (int i = 0; i < 3000; ++i) {
    // Arbitrary (possibly invalid) payloads.
    const Slope a = oracle::random_slope(rng, 6), b = oracle::random_slope(rng, 6);
    const AnnulusLabel labels[] = {K1{a}, K2{a}, L{SlopePair(a, b)}};
    for (const auto& l : labels) {
      if (validate_label(l, Strictness::Strict).ok()) {
        EXPECT_TRUE(validate_label(l, Strictness::Lenient).ok()) << to_string(l);
      }
    }
  }
}

TEST(SeparationClassTest, ByType) {
  EXPECT_EQ(separation_class(L{SlopePair(Slope(1, 2), Slope(2))}), SeparationClass::NonSeparating);
  EXPECT_EQ(separation_class(EM{}), SeparationClass::Separating);
  EXPECT_EQ(separation_class(K1{Slope(1, 2)}), SeparationClass::Separating);
  EXPECT_EQ(separation_class(K2{Slope(2)}), SeparationClass::Separating);
  EXPECT_EQ(separation_class(H1{}), SeparationClass::Unknown);
  EXPECT_EQ(separation_class(H2{}), SeparationClass::Unknown);
}

TEST(LabelTextTest, GrammarInstances) {
  EXPECT_EQ(label_to_text(K1{Slope(4, 3)}), "k1(4/3)");
  EXPECT_EQ(label_from_text("k1(4/3)"), AnnulusLabel(K1{Slope(4, 3)}));
  EXPECT_EQ(label_to_text(L{SlopePair(Slope(1, 3), Slope(3))}), "l(1/3,3)");
  EXPECT_EQ(label_from_text("l(1/3,3)"), AnnulusLabel(L{SlopePair(Slope(1, 3), Slope(3))}));
  EXPECT_EQ(label_to_text(L{}), "l(?)");
  EXPECT_EQ(label_from_text("l(?)"), AnnulusLabel(L{}));
  EXPECT_EQ(label_to_text(K2{Slope(2)}), "k2(2)");
  EXPECT_EQ(label_to_text(EM{}), "em");
}

TEST(LabelTextTest, ToleratesWhitespaceAroundTokens) {
  EXPECT_EQ(label_from_text("  l ( 3 , 1/3 ) "), AnnulusLabel(L{SlopePair(Slope(1, 3), Slope(3))}));
  EXPECT_EQ(label_from_text(" h2 "), AnnulusLabel(H2{}));
}

TEST(LabelTextTest, UnknownTagReportsPositionAndExpectedSet) {
  try {
    label_from_text("k3(1/2)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_EQ(e.column(), 1u);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"h1", "h2", "em", "k1", "k2", "l"}));
  }
}

TEST(LabelTextTest, RejectsMalformed) {
  for (const char* bad : {"", "h12", "h1 h2", "k1", "k1()", "k1(1/2", "l(1/2)",
                          "l(1/2,2", "l(?", "l(?,?)", "em(1)", "K1(1/2)", "l(1/2;2)"}) {
    EXPECT_THROW(label_from_text(bad), ParseError) << bad;
  }
  try {
    label_from_text("k1(4/3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 7u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{"')'"});
  }
}

TEST(LabelTextTest, RoundTripOnRandomValidLabels) {
  oracle::Rng rng(29);
  for (int i = 0; i < 2000; ++i) {
    const AnnulusLabel l = oracle::random_valid_label(rng);
    EXPECT_EQ(label_from_text(label_to_text(l)), l) << label_to_text(l);
  }
}

TEST(LabelEqualityTest, StructuralOnNormalizedPayloads) {
  EXPECT_EQ(AnnulusLabel(K1{Slope(8, 6)}), AnnulusLabel(K1{Slope(4, 3)}));
  EXPECT_NE(AnnulusLabel(K1{Slope(4, 3)}), AnnulusLabel(K2{Slope(4, 3)}));
  EXPECT_NE(AnnulusLabel(L{}), AnnulusLabel(L{SlopePair(Slope(1), Slope(1))}));
  EXPECT_EQ(AnnulusLabel(L{}), AnnulusLabel(L{}));
}

}  // namespace
}  // namespace annulus
