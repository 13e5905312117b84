#pragma once

// Economic reading of the amplifier: investments drive the input, incomes are
// the output current, and the various gain-like coefficients follow.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace econamp {

struct EconPeriod {
  std::string label;
  double investments = 0.0;
  double expenses = 0.0;
  double incomes = 0.0;
  std::optional<double> quantity_out;  // finished products; absent is not zero

  double inputs() const { return investments + expenses; }

  friend bool operator==(const EconPeriod&, const EconPeriod&) = default;
};

/// Ordered periods. Valid when non-empty, labels are unique and every
/// monetary field is finite and >= 0.
struct EconSeries {
  std::vector<EconPeriod> periods;
};

void validate(const EconSeries& series);

/// Ordinary least squares fit y = a0 + beta * x.
struct RegressionFit {
  double a0 = 0.0;
  double beta = 0.0;
  double r_squared = 0.0;
  std::size_t n = 0;

  double predict(double x) const { return a0 + beta * x; }
};

struct CoefficientReport {
  std::size_t periods = 0;
  double total_investments = 0.0;
  double total_expenses = 0.0;
  double total_incomes = 0.0;

  std::optional<double> beta_p;  // products per monetary unit of input
  double beta_v = 0.0;           // incomes / (investments + expenses)
  std::optional<double> beta_bank;
  double harrod_b = 0.0;     // investments / incomes
  double domar_sigma = 0.0;  // incomes / (investments + expenses)
  std::optional<double> keynes_m;
  std::optional<RegressionFit> fit;  // incomes against investments + expenses
  double mean_beta = 0.0;            // mean of per-period incomes / inputs
};

struct CobbDouglasParams {
  double g = 1.0;
  double lambda = 1.0;  // labour elasticity
  double mu = 1.0;      // capital elasticity
};

// Every ratio below throws DomainError on a zero (or, where noted, negative)
// denominator.

/// Finished products per unit of invested value. Dimensionally heterogeneous
/// (count / money); keep it out of currency-scale arguments.
double beta_p_economic(double total_finished_products, double inputs_value);

/// Total incomes over the caller's input denominator. Above 1 means the
/// activity amplifies what was put in.
double beta_v_economic(double total_incomes, double investments_plus_expenses);

/// Output values over total values for one standard accounting period. The
/// caller composes `total_values` (initial capital + amount obtained + given
/// interests); nothing is netted here.
double beta_bank(double output_values, double total_values);

/// Harrod capital coefficient, investments / incomes; the reciprocal of
/// beta_v_economic on the same totals.
double harrod_b(double investments, double incomes);

/// Domar investment productivity dQ / I. Numerically the same function as
/// beta_v_economic once dQ is read as the income produced.
double domar_sigma(double delta_q, double total_investments);

/// g * L^lambda * K^mu.
double cobb_douglas(const CobbDouglasParams& params, double labour_l, double capital_k);

/// dV / dI, the economic slope of the amplifier.
double keynes_multiplier(double delta_v, double delta_i);

/// Throws std::invalid_argument on a length mismatch and DomainError for
/// fewer than two points or constant xs.
RegressionFit fit_linear(std::span<const double> xs, std::span<const double> ys);

/// Aggregates a whole series. Optional fields are filled only when the data
/// supports them:
///  - beta_p when every period carries quantity_out,
///  - keynes_m (mean first difference of incomes over that of inputs) when
///    there are two or more periods and the mean input difference is non-zero,
///  - fit when there are two or more periods with distinct inputs.
/// beta_bank is never set here; series carry no banking fields.
CoefficientReport analyze_series(const EconSeries& series);

}  // namespace econamp
