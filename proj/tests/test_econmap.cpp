#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "econamp/amplifier.hpp"
#include "econamp/econmap.hpp"
#include "econamp/errors.hpp"
#include "support/oracles.hpp"

using namespace econamp;
using oracle::rel_diff;

namespace {

EconPeriod period(std::string label, double inv, double exp, double inc,
                  std::optional<double> qty = std::nullopt) {
  return {std::move(label), inv, exp, inc, qty};
}

EconSeries random_series(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> inv(10.0, 1000.0);
  std::uniform_real_distribution<double> exp(0.0, 300.0);
  std::uniform_real_distribution<double> gain(1.5, 7.0);
  EconSeries s;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = inv(rng);
    const double b = exp(rng);
    s.periods.push_back(period("p" + std::to_string(i), a, b, (a + b) * gain(rng), 10.0 * a));
  }
  return s;
}

EconSeries scaled(EconSeries s, double c) {
  for (auto& p : s.periods) {
    p.investments *= c;
    p.expenses *= c;
    p.incomes *= c;
  }
  return s;
}

}  // namespace

TEST(Ratios, BetaP) {
  EXPECT_DOUBLE_EQ(beta_p_economic(500.0, 100.0), 5.0);
  EXPECT_EQ(beta_p_economic(0.0, 42.0), 0.0);
  EXPECT_DOUBLE_EQ(beta_p_economic(500.0, 100.0 * 4.0), 5.0 / 4.0);
  EXPECT_THROW(beta_p_economic(1.0, 0.0), DomainError);
}

TEST(Ratios, BetaV) {
  EXPECT_DOUBLE_EQ(beta_v_economic(1000.0, 200.0), 5.0);
  EXPECT_DOUBLE_EQ(beta_v_economic(317.25, 317.25), 1.0);
  EXPECT_LT(rel_diff(beta_v_economic(1000.0 * 1e6, 200.0 * 1e6), 5.0), 1e-15);
  EXPECT_THROW(beta_v_economic(10.0, 0.0), DomainError);
}

TEST(Ratios, BetaBank) {
  EXPECT_DOUBLE_EQ(beta_bank(1100.0, 1000.0), 1.1);
  EXPECT_DOUBLE_EQ(beta_bank(73.0, 73.0), 1.0);
  EXPECT_LT(rel_diff(beta_bank(1100.0 * 1e-3, 1000.0 * 1e-3), 1.1), 1e-15);
  EXPECT_THROW(beta_bank(10.0, 0.0), DomainError);
}

TEST(Ratios, HarrodIsReciprocalOfBetaV) {
  EXPECT_DOUBLE_EQ(harrod_b(200.0, 1000.0), 0.2);
  EXPECT_DOUBLE_EQ(beta_v_economic(1000.0, 200.0), 1.0 / 0.2);
  EXPECT_DOUBLE_EQ(harrod_b(55.0, 55.0), 1.0);
  EXPECT_EQ(harrod_b(0.0, 55.0), 0.0);
  EXPECT_THROW(harrod_b(1.0, 0.0), DomainError);
}

TEST(Ratios, DomarEqualsBetaV) {
  EXPECT_DOUBLE_EQ(domar_sigma(500.0, 100.0), 5.0);
  EXPECT_EQ(domar_sigma(0.0, 100.0), 0.0);
  EXPECT_THROW(domar_sigma(1.0, 0.0), DomainError);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(1e-3, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng);
    EXPECT_EQ(domar_sigma(a, b), beta_v_economic(a, b));
    EXPECT_LT(std::abs(beta_v_economic(a, b) * harrod_b(b, a) - 1.0), 1e-12);
  }
}

TEST(CobbDouglas, Values) {
  EXPECT_DOUBLE_EQ(cobb_douglas({1.0, 1.0, 1.0}, 2.0, 3.0), 6.0);
  EXPECT_DOUBLE_EQ(cobb_douglas({2.0, 0.5, 0.5}, 4.0, 9.0), 12.0);
}

TEST(CobbDouglas, UnitElasticitiesGiveTheOutputPowerProduct) {
  // Q = L K with L the load voltage U and K the collector current: P = U I_C.
  for (double ic : {1e-3, 2.5e-3, 7.7e-3}) {
    const double rl = 1000.0;
    const double u = output_voltage(ic, rl);
    EXPECT_EQ(cobb_douglas({1.0, 1.0, 1.0}, u, ic), u * ic);
    EXPECT_LT(rel_diff(cobb_douglas({1.0, 1.0, 1.0}, u, ic), output_power(ic, rl)), 1e-15);
  }
}

TEST(CobbDouglas, DomainErrors) {
  EXPECT_THROW(cobb_douglas({1.0, 0.5, 0.5}, 0.0, 1.0), DomainError);
  EXPECT_THROW(cobb_douglas({1.0, 0.5, 0.5}, 1.0, -2.0), DomainError);
  EXPECT_THROW(cobb_douglas({0.0, 1.0, 1.0}, 1.0, 1.0), DomainError);
  EXPECT_THROW(cobb_douglas({1.0, -1.0, 1.0}, 0.0, 1.0), DomainError);
  // Integer elasticities are defined for a zero base.
  EXPECT_EQ(cobb_douglas({1.0, 1.0, 2.0}, 0.0, 3.0), 0.0);
}

TEST(Keynes, Multiplier) {
  EXPECT_DOUBLE_EQ(keynes_multiplier(150.0, 50.0), 3.0);
  EXPECT_DOUBLE_EQ(keynes_multiplier(12.5, 12.5), 1.0);
  EXPECT_LT(keynes_multiplier(-30.0, 10.0), 0.0);
  EXPECT_GT(keynes_multiplier(30.0, 10.0), 0.0);
  EXPECT_THROW(keynes_multiplier(1.0, 0.0), DomainError);
}

TEST(FitLinear, ExactLine) {
  const std::vector<double> xs{1, 2, 3};
  const std::vector<double> ys{7, 12, 17};
  const auto fit = fit_linear(xs, ys);
  EXPECT_NEAR(fit.a0, 2.0, 1e-12);
  EXPECT_NEAR(fit.beta, 5.0, 1e-12);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
  EXPECT_EQ(fit.n, 3u);
}

TEST(FitLinear, HandDerivedInstance) {
  // Normal equations: n=4, Sx=6, Sxx=14, Sy=15, Sxy=31 -> beta = 38/20, a0 = 0.9.
  const std::vector<double> xs{0, 1, 2, 3};
  const std::vector<double> ys{1, 3, 4, 7};
  const auto fit = fit_linear(xs, ys);
  EXPECT_NEAR(fit.beta, 1.9, 1e-12);
  EXPECT_NEAR(fit.a0, 0.9, 1e-12);
  EXPECT_NEAR(fit.r_squared, 0.96266666666666667, 1e-12);
}

TEST(FitLinear, ShiftingYShiftsIntercept) {
  const std::vector<double> xs{0, 1, 2, 3, 5};
  std::vector<double> ys{1, 3, 4, 7, 8};
  const auto base = fit_linear(xs, ys);
  for (auto& y : ys) y += 250.0;
  const auto shifted = fit_linear(xs, ys);
  EXPECT_NEAR(shifted.a0, base.a0 + 250.0, 1e-9);
  EXPECT_NEAR(shifted.beta, base.beta, 1e-12);
}

TEST(FitLinear, HorizontalDataHasUnitRSquared) {
  const std::vector<double> xs{1, 2, 3, 4};
  const std::vector<double> ys{0.1, 0.1, 0.1, 0.1};
  const auto fit = fit_linear(xs, ys);
  EXPECT_EQ(fit.r_squared, 1.0);
  EXPECT_NEAR(fit.beta, 0.0, 1e-15);
}

TEST(FitLinear, Errors) {
  const std::vector<double> two{1, 2};
  const std::vector<double> three{1, 2, 3};
  EXPECT_THROW(fit_linear(two, three), std::invalid_argument);
  const std::vector<double> single{1};
  EXPECT_THROW(fit_linear(single, single), DomainError);
  const std::vector<double> flat{0.1, 0.1, 0.1};
  EXPECT_THROW(fit_linear(flat, three), DomainError);
}

TEST(FitLinear, MatchesNormalEquationsOracle) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 9;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = u(rng);
      ys[i] = 3.0 - 1.7 * xs[i] + u(rng);
    }
    const auto fit = fit_linear(xs, ys);
    const auto ref = oracle::normal_equations(xs, ys);
    EXPECT_NEAR(fit.a0, ref.a0, 1e-9);
    EXPECT_NEAR(fit.beta, ref.beta, 1e-9);
    EXPECT_GE(fit.r_squared, 0.0);
    EXPECT_LE(fit.r_squared, 1.0);
  }
}

TEST(FitLinear, LeastSquaresIsOptimal) {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs(8), ys(8);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      xs[i] = u(rng);
      ys[i] = 4.0 + 5.19 * xs[i] + 0.3 * (u(rng) - 50.0);
    }
    const auto fit = fit_linear(xs, ys);
    const double best = oracle::sum_sq_residuals(xs, ys, fit.a0, fit.beta);
    for (double eps : {1e-3, -1e-3}) {
      EXPECT_GE(oracle::sum_sq_residuals(xs, ys, fit.a0 + eps, fit.beta), best);
      EXPECT_GE(oracle::sum_sq_residuals(xs, ys, fit.a0, fit.beta + eps), best);
    }
  }
}

TEST(Series, Validation) {
  EXPECT_THROW(analyze_series(EconSeries{}), DomainError);
  EconSeries dup{{period("2001", 1, 0, 5), period("2001", 2, 0, 9)}};
  EXPECT_THROW(analyze_series(dup), DomainError);
  EconSeries neg{{period("2001", -1, 0, 5)}};
  EXPECT_THROW(analyze_series(neg), DomainError);
}

TEST(Series, SinglePeriod) {
  const auto rep = analyze_series(EconSeries{{period("y1", 200, 0, 1000)}});
  EXPECT_DOUBLE_EQ(rep.beta_v, 5.0);
  EXPECT_DOUBLE_EQ(rep.harrod_b, 0.2);
  EXPECT_DOUBLE_EQ(rep.domar_sigma, 5.0);
  EXPECT_DOUBLE_EQ(rep.mean_beta, 5.0);
  EXPECT_FALSE(rep.fit);
  EXPECT_FALSE(rep.keynes_m);
  EXPECT_FALSE(rep.beta_p);
  EXPECT_FALSE(rep.beta_bank);
}

TEST(Series, ExactLineIsRecovered) {
  EconSeries s;
  for (int i = 1; i <= 6; ++i) {
    const double in = 10.0 * i;
    s.periods.push_back(period("t" + std::to_string(i), 0.75 * in, 0.25 * in, 2.0 + 5.0 * in));
  }
  const auto rep = analyze_series(s);
  ASSERT_TRUE(rep.fit);
  EXPECT_NEAR(rep.fit->beta, 5.0, 1e-12);
  EXPECT_NEAR(rep.fit->a0, 2.0, 1e-10);
  EXPECT_NEAR(rep.fit->r_squared, 1.0, 1e-12);
  ASSERT_TRUE(rep.keynes_m);
  EXPECT_NEAR(*rep.keynes_m, 5.0, 1e-12);
}

TEST(Series, QuantityOnlyWhenEveryPeriodHasIt) {
  EconSeries s{{period("a", 100, 0, 300, 50.0), period("b", 100, 100, 700, 150.0)}};
  auto rep = analyze_series(s);
  ASSERT_TRUE(rep.beta_p);
  EXPECT_DOUBLE_EQ(*rep.beta_p, 200.0 / 300.0);
  s.periods[1].quantity_out.reset();
  rep = analyze_series(s);
  EXPECT_FALSE(rep.beta_p);
}

TEST(Series, FlatInputsGiveNoFitOrMultiplier) {
  EconSeries s{{period("a", 100, 0, 300), period("b", 100, 0, 700)}};
  const auto rep = analyze_series(s);
  EXPECT_FALSE(rep.fit);
  EXPECT_FALSE(rep.keynes_m);
}

TEST(Series, ZeroInputPeriodIsNamed) {
  EconSeries s{{period("1999", 100, 0, 300), period("2000", 0, 0, 700)}};
  try {
    analyze_series(s);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("2000"), std::string::npos) << e.what();
  }
}

TEST(Series, ReportIdentitiesAndCurrencyScaleInvariance) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_series(rng, 1 + trial % 8);
    const auto rep = analyze_series(s);
    EXPECT_EQ(rep.domar_sigma, rep.beta_v);
    EXPECT_LT(std::abs(rep.harrod_b * beta_v_economic(rep.total_incomes, rep.total_investments) - 1.0),
              1e-12);
    for (double c : {1e-3, 1.0, 1e6}) {
      const auto r2 = analyze_series(scaled(s, c));
      EXPECT_LT(rel_diff(r2.beta_v, rep.beta_v), 1e-12);
      EXPECT_LT(rel_diff(r2.harrod_b, rep.harrod_b), 1e-12);
      EXPECT_LT(rel_diff(r2.domar_sigma, rep.domar_sigma), 1e-12);
      EXPECT_LT(rel_diff(r2.mean_beta, rep.mean_beta), 1e-12);
      ASSERT_EQ(r2.keynes_m.has_value(), rep.keynes_m.has_value());
      if (rep.keynes_m) EXPECT_LT(rel_diff(*r2.keynes_m, *rep.keynes_m), 1e-9);
      ASSERT_EQ(r2.fit.has_value(), rep.fit.has_value());
      if (rep.fit) {
        EXPECT_LT(rel_diff(r2.fit->beta, rep.fit->beta), 1e-12);
        EXPECT_LT(std::abs(r2.fit->r_squared - rep.fit->r_squared), 1e-12);
        EXPECT_NEAR(r2.fit->a0, c * rep.fit->a0, 1e-9 * c * rep.total_incomes);
      }
    }
  }
}
