#include <gtest/gtest.h>

#include "qres/units.hpp"
#include "test_support.hpp"

namespace qres {
namespace {

using testing::q;

TEST(Units, DecimalInputsAreExactInMicroUnits) {
  EXPECT_EQ(dollars(1.68).micros, 1'680'000);
  EXPECT_EQ(dollars(0.1).micros, 100'000);
  EXPECT_EQ(seconds(0.001).micros, 1'000);
  EXPECT_EQ(seconds(0.009).micros, 9'000);
  EXPECT_EQ(dollars(-2.5).micros, -2'500'000);
  EXPECT_THROW(to_micros(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(Units, FormatFixedRoundsHalfAwayFromZero) {
  EXPECT_EQ(format_fixed(q(1, 3)), "0.333333");
  EXPECT_EQ(format_fixed(q(2, 3)), "0.666667");
  EXPECT_EQ(format_fixed(q(1, 2'000'000)), "0.000001");
  EXPECT_EQ(format_fixed(q(-1, 2'000'000)), "-0.000001");
  EXPECT_EQ(format_fixed(q(-1, 3'000'000)), "0.000000");
  EXPECT_EQ(format_fixed(q(85)), "85.000000");
  EXPECT_EQ(format_fixed(q(12345, 100), 1), "123.5");
  EXPECT_EQ(format_fixed(q(7), 0), "7");
}

TEST(Units, ParseDecimal) {
  EXPECT_EQ(parse_decimal("1.68"), q(42, 25));
  EXPECT_EQ(parse_decimal("-0.0010"), q(-1, 1000));
  EXPECT_EQ(parse_decimal("3"), q(3));
  EXPECT_EQ(parse_decimal("1e-3"), q(1, 1000));
  EXPECT_EQ(parse_decimal("2.5E+2"), q(250));
  EXPECT_THROW(parse_decimal(""), std::invalid_argument);
  EXPECT_THROW(parse_decimal("1.2.3"), std::invalid_argument);
  EXPECT_THROW(parse_decimal("abc"), std::invalid_argument);
  EXPECT_EQ(exact_from_double(0.3), q(3, 10));
}

TEST(Units, TimeCostIsExact) {
  // 3 ms over-wait at $10/s is 3 cents.
  EXPECT_EQ(time_cost(Duration{3000}, dollars(10)), q(3, 100));
  // 1 us at 1 micro-dollar per second is 1e-12 dollars.
  EXPECT_EQ(time_cost(Duration{1}, Money{1}), Exact(mpz_class(1), mpz_class("1000000000000")));
}

TEST(Units, ExactDecimalText) {
  EXPECT_EQ(format_exact_decimal(q(42, 25)), "1.68");
  EXPECT_EQ(format_exact_decimal(q(-7)), "-7");
  EXPECT_EQ(format_exact_decimal(q(0)), "0");
  EXPECT_TRUE(is_terminating_decimal(q(1, 8)));
  EXPECT_FALSE(is_terminating_decimal(q(7, 117)));
  EXPECT_EQ(format_exact_decimal(q(1, 3), 5), "0.33333");
}

TEST(Units, SimplestRationalInInterval) {
  EXPECT_EQ(simplest_in_interval(q(3, 10), q(4, 10)), q(1, 3));
  EXPECT_EQ(simplest_in_interval(q(-1), q(1)), q(0));
  EXPECT_EQ(simplest_in_interval(q(-4, 10), q(-3, 10)), q(-1, 3));
  EXPECT_EQ(simplest_in_interval(q(5, 2), q(7, 2)), q(3));
  EXPECT_EQ(simplest_in_interval(q(2), q(2)), q(2));
  EXPECT_THROW(simplest_in_interval(q(1), q(0)), std::invalid_argument);
}

}  // namespace
}  // namespace qres
