#include <gtest/gtest.h>

#include "residuate/residuate.hpp"
#include "support/random.hpp"

using namespace residuate;

namespace {

QuantaleValue v(QuantaleId q, const char* s) { return parse_value(q, s); }

constexpr auto MP = QuantaleId::max_plus;
constexpr auto NP = QuantaleId::min_plus;
constexpr auto LW = QuantaleId::lawvere_min_plus;
constexpr auto MM = QuantaleId::min_max;
constexpr auto B = QuantaleId::boolean2;

}  // namespace

TEST(Extended, ParsesLiteralsExactly) {
  EXPECT_EQ(parse_extended("3"), Extended(3));
  EXPECT_EQ(parse_extended("-1/2"), Extended(-1, 2));
  EXPECT_EQ(parse_extended("4/6"), Extended(2, 3));
  EXPECT_EQ(parse_extended("0.75"), Extended(3, 4));
  EXPECT_EQ(parse_extended("-1.5e-1"), Extended(-3, 20));
  EXPECT_EQ(parse_extended("2E2"), Extended(200));
  EXPECT_EQ(parse_extended("007"), Extended(7));
  EXPECT_EQ(parse_extended("0.05"), Extended(1, 20));
  EXPECT_EQ(parse_extended("010/08"), Extended(5, 4));
  EXPECT_EQ(parse_extended("0"), Extended(0));
  EXPECT_EQ(parse_extended("inf"), Extended::pos_inf());
  EXPECT_EQ(parse_extended("+inf"), Extended::pos_inf());
  EXPECT_EQ(parse_extended("-inf"), Extended::neg_inf());
}

TEST(Extended, RejectsMalformedLiterals) {
  for (const char* bad : {"", "abc", "1/0", "1/-2", "1.2.3", "--1", "1e", "e5", "1/2/3", " 1"}) {
    EXPECT_THROW(parse_extended(bad), Error) << bad;
  }
}

TEST(Extended, FormatsInLowestTerms) {
  EXPECT_EQ(format_extended(Extended(6, 4)), "3/2");
  EXPECT_EQ(format_extended(Extended(-4, 2)), "-2");
  EXPECT_EQ(format_extended(Extended::pos_inf()), "inf");
  EXPECT_EQ(format_extended(Extended::neg_inf()), "-inf");
  EXPECT_EQ(format_extended_decimal(Extended(1, 4)), "0.25");
}

TEST(Extended, DoublesConvertExactly) {
  EXPECT_EQ(extended_from_double(0.5), Extended(1, 2));
  EXPECT_EQ(extended_from_double(-3.0), Extended(-3));
  EXPECT_EQ(extended_from_double(std::numeric_limits<double>::infinity()), Extended::pos_inf());
  // 0.1 is not 1/10 in binary.
  EXPECT_NE(extended_from_double(0.1), Extended(1, 10));
}

TEST(Extended, TotalOrder) {
  EXPECT_LT(Extended::neg_inf(), Extended(-1000));
  EXPECT_LT(Extended(1000), Extended::pos_inf());
  EXPECT_LT(Extended(1, 3), Extended(1, 2));
}

TEST(QuantaleValue, CarrierIsValidated) {
  EXPECT_THROW(v(LW, "-1"), Error);
  EXPECT_THROW(v(LW, "-inf"), Error);
  EXPECT_THROW(v(MM, "-1/2"), Error);
  EXPECT_THROW(v(QuantaleId::int_max_plus, "1/2"), Error);
  EXPECT_THROW(v(QuantaleId::int_lawvere, "3/2"), Error);
  EXPECT_NO_THROW(v(QuantaleId::int_max_plus, "-inf"));
  EXPECT_NO_THROW(v(QuantaleId::int_lawvere, "inf"));
  EXPECT_THROW(v(B, "2"), Error);
  EXPECT_EQ(v(B, "top"), QuantaleValue::boolean(true));
  EXPECT_EQ(v(B, "0"), QuantaleValue::boolean(false));
}

TEST(QuantaleValue, NamesRoundTrip) {
  for (QuantaleId q : all_quantales) EXPECT_EQ(parse_quantale_name(quantale_name(q)), q);
  try {
    parse_quantale_name("max+");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_quantale);
  }
}

TEST(Mul, InfinityConventionsDifferBetweenMaxAndMinPlus) {
  EXPECT_EQ(mul(v(MP, "-inf"), v(MP, "inf")), v(MP, "-inf"));
  EXPECT_EQ(mul(v(MP, "inf"), v(MP, "-inf")), v(MP, "-inf"));
  EXPECT_EQ(mul(v(NP, "-inf"), v(NP, "inf")), v(NP, "inf"));
  EXPECT_EQ(mul(v(NP, "inf"), v(NP, "-inf")), v(NP, "inf"));
}

TEST(Mul, UnitIsNeutral) {
  for (QuantaleId q : all_quantales) {
    for (const auto& x : default_samples(q)) {
      EXPECT_EQ(mul(unit(q), x), x);
      EXPECT_EQ(mul(x, unit(q)), x);
    }
  }
}

TEST(Mul, MixedInstancesAreRejected) {
  try {
    mul(v(MP, "1"), v(NP, "1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::instance_mismatch);
  }
  EXPECT_THROW(leq(v(MP, "1"), v(LW, "1")), Error);
  EXPECT_THROW(rext(v(B, "true"), v(MM, "1")), Error);
}

TEST(Mul, PerInstance) {
  EXPECT_EQ(mul(v(MP, "3/2"), v(MP, "2")), v(MP, "7/2"));
  EXPECT_EQ(mul(v(LW, "3"), v(LW, "inf")), v(LW, "inf"));
  EXPECT_EQ(mul(v(MM, "3"), v(MM, "5")), v(MM, "5"));
  EXPECT_EQ(mul(v(B, "true"), v(B, "false")), v(B, "false"));
}

TEST(JoinMeet, EmptyFamilies) {
  for (QuantaleId q : all_quantales) {
    EXPECT_EQ(join(q, std::span<const QuantaleValue>{}), bottom(q));
    EXPECT_EQ(meet(q, std::span<const QuantaleValue>{}), top(q));
  }
  EXPECT_EQ(bottom(MP), v(MP, "-inf"));
  EXPECT_EQ(bottom(NP), v(NP, "inf"));
  EXPECT_EQ(bottom(LW), v(LW, "inf"));
  EXPECT_EQ(top(LW), v(LW, "0"));
}

TEST(JoinMeet, Examples) {
  const std::vector<QuantaleValue> lw = {v(LW, "3"), v(LW, "5")};
  EXPECT_EQ(join(LW, lw), v(LW, "3"));
  EXPECT_TRUE(leq(v(LW, "5"), join(LW, lw)));
  EXPECT_EQ(meet(LW, lw), v(LW, "5"));
  const std::vector<QuantaleValue> b = {v(B, "true"), v(B, "false")};
  EXPECT_EQ(meet(B, b), v(B, "false"));
  EXPECT_EQ(join(B, b), v(B, "true"));
  const std::vector<QuantaleValue> np = {v(NP, "1"), v(NP, "3")};
  EXPECT_EQ(join(NP, np), v(NP, "1"));
}

TEST(Leq, Examples) {
  EXPECT_TRUE(leq(v(MP, "2"), v(MP, "5")));
  EXPECT_FALSE(leq(v(NP, "2"), v(NP, "5")));
  EXPECT_TRUE(leq(v(LW, "inf"), v(LW, "0")));
  EXPECT_TRUE(leq(v(B, "false"), v(B, "true")));
  EXPECT_FALSE(leq(v(B, "true"), v(B, "false")));
}

TEST(Residuation, Examples) {
  EXPECT_EQ(rext(v(MP, "5"), v(MP, "3")), v(MP, "2"));
  EXPECT_EQ(rlift(v(LW, "5"), v(LW, "3")), v(LW, "0"));
  EXPECT_EQ(rlift(v(LW, "3"), v(LW, "5")), v(LW, "2"));
  EXPECT_EQ(rext(v(MM, "4"), v(MM, "7")), v(MM, "0"));
  EXPECT_EQ(rext(v(MM, "7"), v(MM, "4")), v(MM, "7"));
  EXPECT_EQ(rext(v(MM, "4"), v(MM, "4")), v(MM, "0"));
  EXPECT_EQ(rext(v(B, "false"), v(B, "true")), v(B, "false"));
  EXPECT_EQ(rext(v(B, "false"), v(B, "false")), v(B, "true"));
  EXPECT_EQ(rext(v(LW, "inf"), v(LW, "inf")), v(LW, "0"));
  EXPECT_EQ(rext(v(LW, "inf"), v(LW, "2")), v(LW, "inf"));
}

// The nine cells of each max-plus table, and their images for min-plus.
TEST(Residuation, MaxPlusTablesCellByCell) {
  const char* cls[] = {"inf", "2", "-inf"};
  const char* add[3][3] = {{"inf", "inf", "-inf"}, {"inf", "7/2", "-inf"}, {"-inf", "-inf", "-inf"}};
  const char* sub[3][3] = {{"inf", "inf", "inf"}, {"-inf", "-1/2", "inf"}, {"-inf", "-inf", "inf"}};
  const char* other[] = {"inf", "3/2", "-inf"};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // y + x with y from the row, x from the column (t = 3/2, s = 2).
      EXPECT_EQ(mul(v(MP, other[i]), v(MP, cls[j])), v(MP, add[i][j])) << i << j;
      // z - y with z from the row (u = 3/2), y from the column (t = 2).
      EXPECT_EQ(rext(v(MP, other[i]), v(MP, cls[j])), v(MP, sub[i][j])) << i << j;
      EXPECT_EQ(rlift(v(MP, cls[j]), v(MP, other[i])), v(MP, sub[i][j])) << i << j;
    }
  }
}

TEST(Residuation, MinPlusTablesAreTheNegatedMaxPlusTables) {
  const auto neg = [](const QuantaleValue& x) { return QuantaleValue::make(NP, -x.as_extended()); };
  const auto to_mp = [](const QuantaleValue& x) { return QuantaleValue::make(MP, -x.as_extended()); };
  for (const char* a : {"inf", "2", "-1/3", "-inf"}) {
    for (const char* b : {"inf", "3/2", "0", "-inf"}) {
      const auto ya = v(MP, a);
      const auto xb = v(MP, b);
      EXPECT_EQ(mul(neg(ya), neg(xb)), neg(mul(ya, xb)));
      EXPECT_EQ(rext(neg(ya), neg(xb)), neg(rext(ya, xb)));
      EXPECT_EQ(join(neg(ya), neg(xb)), neg(join(ya, xb)));
      EXPECT_EQ(to_mp(neg(ya)), ya);
    }
  }
  // Explicit min-plus cells.
  EXPECT_EQ(rext(v(NP, "2"), v(NP, "-inf")), v(NP, "inf"));
  EXPECT_EQ(rext(v(NP, "2"), v(NP, "inf")), v(NP, "-inf"));
  EXPECT_EQ(rext(v(NP, "-inf"), v(NP, "-inf")), v(NP, "-inf"));
  EXPECT_EQ(rext(v(NP, "inf"), v(NP, "inf")), v(NP, "-inf"));
  EXPECT_EQ(rext(v(NP, "5"), v(NP, "3")), v(NP, "2"));
}

TEST(Residuation, AdjointnessOnRandomTriples) {
  oracle::Gen gen(11);
  for (QuantaleId q : all_quantales) {
    for (int i = 0; i < 400; ++i) {
      const auto x = gen.value(q), y = gen.value(q), z = gen.value(q);
      const bool a = leq(mul(y, x), z);
      EXPECT_EQ(a, leq(y, rext(z, x)));
      EXPECT_EQ(a, leq(x, rlift(y, z)));
      EXPECT_EQ(rext(z, x), rlift(x, z));
    }
  }
}

// rext(z, x) is the largest sample w with w∘x ⪯ z whenever that maximum is
// itself a sample; on the Boolean carrier always.
TEST(Residuation, IsTheLargestUnderApproximantAmongSamples) {
  for (QuantaleId q : all_quantales) {
    const auto samples = default_samples(q);
    for (const auto& z : samples) {
      for (const auto& x : samples) {
        const QuantaleValue r = rext(z, x);
        for (const auto& w : samples) {
          if (leq(mul(w, x), z)) { EXPECT_TRUE(leq(w, r)); }
        }
        if (std::find(samples.begin(), samples.end(), r) != samples.end()) {
          EXPECT_TRUE(leq(mul(r, x), z));
        }
      }
    }
  }
}

TEST(Laws, BuiltInsHaveEmptyReports) {
  for (QuantaleId q : all_quantales) {
    const auto samples = default_samples(q);
    const LawReport r = check_quantale_laws(q, samples);
    EXPECT_TRUE(r.ok()) << quantale_name(q) << ": " << (r.ok() ? "" : r.violations.front());
  }
  const std::vector<QuantaleValue> mp = {v(MP, "-inf"), v(MP, "-1"), v(MP, "0"), v(MP, "2"), v(MP, "inf")};
  EXPECT_TRUE(check_quantale_laws(MP, mp).ok());
  const std::vector<QuantaleValue> mm = {v(MM, "0"), v(MM, "1"), v(MM, "7"), v(MM, "inf")};
  EXPECT_TRUE(check_quantale_laws(MM, mm).ok());
  EXPECT_TRUE(check_quantale_laws(B, std::span<const QuantaleValue>{}).ok());
}

TEST(Laws, SamplesFromAnotherInstanceAreReported) {
  const std::vector<QuantaleValue> wrong = {v(LW, "1")};
  EXPECT_FALSE(check_quantale_laws(MP, wrong).ok());
}

TEST(Laws, SamplesIncludeBothEnds) {
  for (QuantaleId q : all_quantales) {
    const auto s = default_samples(q);
    EXPECT_NE(std::find(s.begin(), s.end(), bottom(q)), s.end());
    EXPECT_NE(std::find(s.begin(), s.end(), top(q)), s.end());
  }
}
