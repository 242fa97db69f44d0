#include "bwrt/rational.hpp"
#include "bwrt/real.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

using namespace bwrt;
using bwrt::testing::below;

TEST(RationalTest, AlwaysReducedWithPositiveDenominator) {
  const Rational x = make_rational(6, -8);
  EXPECT_EQ(numerator_of(x), -3);
  EXPECT_EQ(denominator_of(x), 4);
  EXPECT_EQ(to_string(x), "-3/4");
  EXPECT_EQ(to_string(make_rational(10, 5)), "2");
}

TEST(RationalTest, FloorAndWindows) {
  EXPECT_EQ(floor(make_rational(-7, 2)), -4);
  EXPECT_EQ(floor(make_rational(7, 2)), 3);
  EXPECT_EQ(mod(make_rational(-1, 3), 2), make_rational(5, 3));
  EXPECT_EQ(centered_mod1(make_rational(1, 2)), make_rational(1, 2));
  EXPECT_EQ(centered_mod1(make_rational(-1, 2)), make_rational(1, 2));
  EXPECT_EQ(centered_mod1(make_rational(7, 4)), make_rational(-1, 4));
}

TEST(PrecisionContextTest, DefaultsAndLimits) {
  const PrecisionContext ctx;
  EXPECT_EQ(ctx.decimal_digits(), 50);
  EXPECT_EQ(ctx.tolerance_exponent(), 40);
  EXPECT_TRUE(below(abs(ctx.tolerance() - Real("1e-40", ctx.bits())), ctx.power_of_ten(80)));
  EXPECT_THROW(PrecisionContext(14), std::invalid_argument);
  EXPECT_NO_THROW(PrecisionContext(15));
}

TEST(RealTest, ExactReductionOfPiMultiples) {
  const PrecisionContext ctx;
  EXPECT_TRUE(sin_pi(Rational(7), ctx.bits()).is_zero());
  EXPECT_TRUE(below(abs(sin_pi(make_rational(1, 6), ctx.bits()) - ctx.from(Rational(1, 2))), ctx.tolerance()));
  EXPECT_TRUE(below(abs(cos_pi(make_rational(-2000, 3), ctx.bits()) - ctx.from(Rational(-1, 2))),
                    ctx.tolerance()));
  EXPECT_EQ(sin_pi_sign(make_rational(5, 4)), -1);
  EXPECT_EQ(sin_pi_sign(make_rational(-7, 4)), 1);
  EXPECT_EQ(sin_pi_sign(Rational(3)), 0);
}

TEST(RealTest, PrecisionIsCarriedPerValue) {
  const Real low(1L, 64);
  const Real high(1L, 512);
  EXPECT_EQ((low + high).precision(), 512);
  EXPECT_EQ((low * low).precision(), 64);
}

TEST(RealTest, ToStringUsesSignificantDigits) {
  const Real third(make_rational(1, 3), 200);
  EXPECT_EQ(third.to_string(5), "3.3333e-01");
}

TEST(BigComplexTest, RootsOfUnityAndPrincipalBranches) {
  const PrecisionContext ctx;
  const BigComplex i = BigComplex::exp_i_pi(make_rational(1, 2), ctx.bits());
  EXPECT_TRUE(below(abs(i * i + BigComplex(ctx.from(1L))), ctx.tolerance()));
  const BigComplex root = sqrt(BigComplex(ctx.from(-4L)));
  EXPECT_TRUE(below(abs(root - BigComplex(ctx.zero(), ctx.from(2L))), ctx.tolerance()));
  const BigComplex w = pow(i, ctx.from(Rational(3, 2)));
  EXPECT_TRUE(below(abs(w - BigComplex::exp_i_pi(make_rational(3, 4), ctx.bits())), ctx.tolerance()));
  EXPECT_TRUE(below(abs(log(BigComplex(ctx.from(-1L))).imag() - ctx.pi()), ctx.tolerance()));
}

TEST(BigComplexTest, ConcurrentUseNeedsNoSharedState) {
  const PrecisionContext ctx(80);
  const Rational r = make_rational(5, 17);
  const std::string reference = BigComplex::exp_i_pi(r, ctx.bits()).real().to_string(80);
  std::vector<std::string> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    threads.emplace_back([&, t] {
      const PrecisionContext other(20 + static_cast<int>(t) * 30);
      (void)BigComplex::exp_i_pi(r, other.bits());
      seen[t] = BigComplex::exp_i_pi(r, ctx.bits()).real().to_string(80);
    });
  }
  for (auto& th : threads) {
    th.join();
  }
  for (const auto& s : seen) {
    EXPECT_EQ(s, reference);
  }
}
