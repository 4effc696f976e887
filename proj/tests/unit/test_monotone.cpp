#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fmb/monotone.hpp"
#include "fmb/named_examples.hpp"
#include "fmb/rearrange.hpp"

using namespace fmb;

namespace {

const ExponentTriple kH2 = make_exponents(4.0 / 3.0, 4.0, ExponentMode::hoermander);

std::vector<double> powers_of_two(int lo, int hi) {
  std::vector<double> t;
  for (int j = lo; j <= hi; ++j) t.push_back(std::exp2(j));
  return t;
}

}  // namespace

TEST(MonotoneSeq, NonIncreasingNonNegativeHasConstantOne) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> v(1 + static_cast<std::size_t>(trial) * 4);
    for (auto& x : v) x = u(rng);
    std::sort(v.begin(), v.end(), std::greater<>());
    const auto c = monotone_constant_seq(SeqSymbol::from_real(0, v));
    EXPECT_FALSE(c.violated);
    EXPECT_NEAR(c.constant_C, 1.0, 1e-12);
    EXPECT_TRUE(c.stable);
  }
}

TEST(MonotoneSeq, AlternatingIsNotMonotone) {
  const std::size_t m = 32;
  std::vector<double> v(2 * m);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = (k % 2 == 0) ? 1.0 : -1.0;
  const auto a = SeqSymbol::from_real(0, v);
  const auto c = monotone_constant_seq(a);
  EXPECT_TRUE(c.violated);
  EXPECT_GE(c.ratios[1], 2.0 - 1e-12);
  EXPECT_GE(c.ratios[2 * m - 2], static_cast<double>(2 * m - 1) - 1e-9);
  EXPECT_EQ(criteria_verdict(a, kH2, c), Verdict::inapplicable);
}

TEST(MonotoneSeq, Impulse) {
  const auto c = monotone_constant_seq(SeqSymbol::from_real(0, std::vector<double>{1.0}));
  EXPECT_EQ(c.constant_C, 1.0);
  EXPECT_FALSE(c.violated);
}

TEST(MonotoneSeq, ConstantOneIsUnbounded) {
  const auto a = SeqSymbol::from_real(-512, std::vector<double>(1025, 1.0));
  const auto c = monotone_constant_seq(a);
  EXPECT_EQ(c.constant_C, 1.0);
  EXPECT_TRUE(c.stable);
  EXPECT_EQ(criteria_verdict(a, kH2, c), Verdict::unbounded);
}

TEST(MonotoneFun, UnitIndicator) {
  FunSymbol f;
  f.evaluator = [](double x) { return Complex{(x >= 0.0 && x < 1.0) ? 1.0 : 0.0, 0.0}; };
  f.breakpoints = {0.0, 1.0};
  f.real_valued = true;
  const auto c = monotone_constant_fun(f, {{-4.0, 4.0}}, powers_of_two(-4, 3));
  EXPECT_FALSE(c.violated);
  EXPECT_NEAR(c.constant_C, 1.0, 1e-9);
}

TEST(MonotoneFun, ExmH1StableUnderMeshHalving) {
  const auto ex = example_exmH1(2.0, {-3, 3});
  const IntervalSet dom = blocks_set(-3, 3);
  const auto t = powers_of_two(-6, 3);
  const auto c1 = monotone_constant_fun(ex.fun(), dom, t, Mesh{1.0 / 32.0, 16});
  const auto c2 = monotone_constant_fun(ex.fun(), dom, t, Mesh{1.0 / 64.0, 16});
  EXPECT_FALSE(c1.violated);
  EXPECT_TRUE(std::isfinite(c2.constant_C));
  EXPECT_NEAR(c1.constant_C, c2.constant_C, 0.05 * c2.constant_C);
  EXPECT_EQ(criteria_verdict(ex.fun(), ex.exponents, c2, ex.range), Verdict::bounded);
}

TEST(MonotoneFun, OscillationDefeatsAverages) {
  FunSymbol f;
  f.evaluator = [](double x) {
    return Complex{(x >= 0.0 && x <= 64.0) ? std::sin(2.0 * std::numbers::pi * x) : 0.0, 0.0};
  };
  f.breakpoints = {0.0, 64.0};
  f.real_valued = true;
  const auto c = monotone_constant_fun(f, {{0.0, 64.0}}, powers_of_two(-3, 6), Mesh{1.0 / 1024.0, 16});
  EXPECT_TRUE(c.violated || c.constant_C > 20.0);
}

TEST(Verdict, Names) {
  EXPECT_EQ(to_string(Verdict::bounded), "bounded");
  EXPECT_EQ(to_string(Verdict::unbounded), "unbounded");
  EXPECT_EQ(to_string(Verdict::inapplicable), "inapplicable");
}
