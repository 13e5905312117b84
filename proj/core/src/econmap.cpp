#include "econamp/econmap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "econamp/errors.hpp"

namespace econamp {
namespace {

double ratio(double num, double den, const char* what) {
  if (den == 0.0) throw DomainError(std::string(what) + ": denominator is zero");
  return num / den;
}

double positive_ratio(double num, double den, const char* what) {
  if (!(den > 0.0)) throw DomainError(std::string(what) + ": denominator must be > 0");
  return num / den;
}

bool is_integer(double x) { return std::isfinite(x) && std::trunc(x) == x; }

void check_base(double base, double exponent, const char* name) {
  if (base > 0.0) return;
  if (!is_integer(exponent))
    throw DomainError(std::string("cobb_douglas: ") + name +
                      " must be > 0 for a non-integer elasticity");
  if (base == 0.0 && exponent < 0.0)
    throw DomainError(std::string("cobb_douglas: ") + name + " is zero with a negative elasticity");
}

std::string period_context(const EconPeriod& p) { return "period '" + p.label + "': "; }

}  // namespace

void validate(const EconSeries& series) {
  if (series.periods.empty()) throw DomainError("series has no periods");
  std::unordered_set<std::string> seen;
  for (const auto& p : series.periods) {
    if (!seen.insert(p.label).second) throw DomainError("duplicate period label '" + p.label + "'");
    auto check = [&](double v, const char* field) {
      if (!std::isfinite(v) || v < 0.0)
        throw DomainError(period_context(p) + field + " must be finite and >= 0");
    };
    check(p.investments, "investments");
    check(p.expenses, "expenses");
    check(p.incomes, "incomes");
    if (p.quantity_out) check(*p.quantity_out, "quantity_out");
  }
}

double beta_p_economic(double total_finished_products, double inputs_value) {
  return positive_ratio(total_finished_products, inputs_value, "beta_p_economic");
}

double beta_v_economic(double total_incomes, double investments_plus_expenses) {
  return positive_ratio(total_incomes, investments_plus_expenses, "beta_v_economic");
}

double beta_bank(double output_values, double total_values) {
  return positive_ratio(output_values, total_values, "beta_bank");
}

double harrod_b(double investments, double incomes) {
  return positive_ratio(investments, incomes, "harrod_b");
}

double domar_sigma(double delta_q, double total_investments) {
  return positive_ratio(delta_q, total_investments, "domar_sigma");
}

double cobb_douglas(const CobbDouglasParams& params, double labour_l, double capital_k) {
  if (!(params.g > 0.0)) throw DomainError("cobb_douglas: g must be > 0");
  check_base(labour_l, params.lambda, "labour");
  check_base(capital_k, params.mu, "capital");
  return params.g * std::pow(labour_l, params.lambda) * std::pow(capital_k, params.mu);
}

double keynes_multiplier(double delta_v, double delta_i) {
  return ratio(delta_v, delta_i, "keynes_multiplier");
}

RegressionFit fit_linear(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("fit_linear: xs and ys differ in length");
  const std::size_t n = xs.size();
  if (n < 2) throw DomainError("fit_linear: need at least two points");
  bool constant_x = true;
  bool constant_y = true;
  for (std::size_t i = 1; i < n; ++i) {
    constant_x = constant_x && xs[i] == xs[0];
    constant_y = constant_y && ys[i] == ys[0];
  }
  if (constant_x) throw DomainError("fit_linear: xs have zero variance");

  const double dn = static_cast<double>(n);
  const double x_mean = std::accumulate(xs.begin(), xs.end(), 0.0) / dn;
  const double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / dn;

  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - x_mean;
    sxx += dx * dx;
    sxy += dx * (ys[i] - y_mean);
  }

  RegressionFit fit;
  fit.n = n;
  fit.beta = sxy / sxx;
  fit.a0 = y_mean - fit.beta * x_mean;

  if (constant_y) {
    fit.r_squared = 1.0;
    return fit;
  }
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - fit.predict(xs[i]);
    const double d = ys[i] - y_mean;
    ss_res += r * r;
    ss_tot += d * d;
  }
  fit.r_squared = std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
  return fit;
}

CoefficientReport analyze_series(const EconSeries& series) {
  validate(series);
  const auto& periods = series.periods;
  const std::size_t n = periods.size();

  CoefficientReport rep;
  rep.periods = n;
  bool all_quantities = true;
  double total_quantity = 0.0;
  double ratio_sum = 0.0;
  for (const auto& p : periods) {
    rep.total_investments += p.investments;
    rep.total_expenses += p.expenses;
    rep.total_incomes += p.incomes;
    if (p.quantity_out)
      total_quantity += *p.quantity_out;
    else
      all_quantities = false;
    try {
      ratio_sum += beta_v_economic(p.incomes, p.inputs());
    } catch (const DomainError& e) {
      throw DomainError(period_context(p) + e.what());
    }
  }
  rep.mean_beta = ratio_sum / static_cast<double>(n);

  const double total_inputs = rep.total_investments + rep.total_expenses;
  rep.beta_v = beta_v_economic(rep.total_incomes, total_inputs);
  rep.harrod_b = harrod_b(rep.total_investments, rep.total_incomes);
  rep.domar_sigma = domar_sigma(rep.total_incomes, total_inputs);
  if (all_quantities) rep.beta_p = beta_p_economic(total_quantity, total_inputs);

  if (n >= 2) {
    double dv_sum = 0.0;
    double di_sum = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      dv_sum += periods[i].incomes - periods[i - 1].incomes;
      di_sum += periods[i].inputs() - periods[i - 1].inputs();
    }
    const double steps = static_cast<double>(n - 1);
    const double mean_di = di_sum / steps;
    if (mean_di != 0.0) rep.keynes_m = keynes_multiplier(dv_sum / steps, mean_di);

    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(n);
    ys.reserve(n);
    for (const auto& p : periods) {
      xs.push_back(p.inputs());
      ys.push_back(p.incomes);
    }
    bool distinct = false;
    for (double x : xs) distinct = distinct || x != xs.front();
    if (distinct) rep.fit = fit_linear(xs, ys);
  }
  return rep;
}

}  // namespace econamp
