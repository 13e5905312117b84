#include "econamp/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "econamp/cli/csv.hpp"
#include "econamp/cli/errors.hpp"
#include "econamp/cli/format.hpp"

namespace econamp::cli {
namespace {

// Runs a command body and maps exceptions to exit codes. Output is buffered
// so a failing command never leaves partial results on `out`.
int guarded(std::ostream& out, std::ostream& err, const std::function<void(std::ostream&)>& body) {
  std::ostringstream buffer;
  try {
    body(buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  out << buffer.str();
  return kExitOk;
}

void row(std::ostream& os, const std::string& name, const std::string& value,
         const std::string& unit = "") {
  os << "  " << std::left << std::setw(20) << name << value;
  if (!unit.empty()) os << ' ' << unit;
  os << '\n';
}

std::string join_violations(const BreakdownStatus& status) {
  std::string s;
  for (auto kind : status.violated) {
    if (!s.empty()) s += '+';
    s += to_string(kind);
  }
  return s;
}

}  // namespace

RunReport simulate(const RunConfig& config) {
  RunReport r;
  r.config = config;
  r.op = solve_operating_point(config.amplifier);
  if (r.op.saturated) {
    // The active-region solution is not physical past v_ce = 0; evaluate the
    // small-signal parameters at the edge of the active region instead.
    OperatingPoint edge = r.op;
    edge.v_ce = 0.0;
    r.small_signal = small_signal_params(config.amplifier.device, edge);
  } else {
    r.small_signal = small_signal_params(config.amplifier.device, r.op);
  }
  r.gain = stage_gain(config.amplifier, r.op, r.small_signal);
  r.breakdown = breakdown_check(r.op, config.limits);
  if (r.op.saturated)
    r.warnings.push_back("saturation: v_ce = " + format_human(r.op.v_ce) +
                         " V <= 0, transistor is out of the active region "
                         "(G_out evaluated at v_ce = 0)");
  if (!r.breakdown.healthy())
    r.warnings.push_back("breakdown: " + join_violations(r.breakdown) +
                         " beyond rated limits (bankruptcy analogue)");
  return r;
}

std::string render(const RunReport& r) {
  std::ostringstream os;
  os << "operating point\n";
  row(os, "v_be", format_human(r.op.v_be), "V");
  row(os, "i_b", format_human(r.op.i_b), "A");
  row(os, "i_c", format_human(r.op.i_c), "A");
  row(os, "i_e", format_human(r.op.i_e), "A");
  row(os, "v_ce", format_human(r.op.v_ce), "V");
  row(os, "kcl residual", format_human(r.op.residual), "A");
  os << "small-signal\n";
  row(os, "slope S (g_m)", format_human(r.small_signal.slope_s), "S");
  row(os, "r_in", format_human(r.small_signal.r_in), "ohm");
  row(os, "G_out", format_human(r.small_signal.g_out), "S");
  os << "stage\n";
  row(os, "beta", format_human(r.gain.beta_current));
  row(os, "voltage gain", format_human(r.gain.voltage_gain));
  row(os, "output power", format_human(r.gain.power_out), "W");
  os << "warnings\n";
  if (r.warnings.empty()) os << "  none\n";
  for (const auto& w : r.warnings) os << "  " << w << '\n';

  os << "\n[config]\n" << format_config(r.config) << "[/config]\n";
  os << "\n[result]\n";
  os << "v_be=" << format_exact(r.op.v_be) << '\n';
  os << "i_b=" << format_exact(r.op.i_b) << '\n';
  os << "i_c=" << format_exact(r.op.i_c) << '\n';
  os << "i_e=" << format_exact(r.op.i_e) << '\n';
  os << "v_ce=" << format_exact(r.op.v_ce) << '\n';
  os << "residual=" << format_exact(r.op.residual) << '\n';
  os << "slope_s=" << format_exact(r.small_signal.slope_s) << '\n';
  os << "r_in=" << format_exact(r.small_signal.r_in) << '\n';
  os << "g_out=" << format_exact(r.small_signal.g_out) << '\n';
  os << "beta=" << format_exact(r.gain.beta_current) << '\n';
  os << "voltage_gain=" << format_exact(r.gain.voltage_gain) << '\n';
  os << "power_out=" << format_exact(r.gain.power_out) << '\n';
  os << "saturated=" << (r.op.saturated ? "true" : "false") << '\n';
  os << "breakdown=" << (r.breakdown.healthy() ? "none" : join_violations(r.breakdown)) << '\n';
  os << "[/result]\n";
  return os.str();
}

std::string render(const CoefficientReport& r, const std::string& source) {
  std::ostringstream os;
  os << "economic amplifier analysis of " << source << '\n';
  row(os, "periods", std::to_string(r.periods));
  row(os, "total investments", format_human(r.total_investments));
  row(os, "total expenses", format_human(r.total_expenses));
  row(os, "total incomes", format_human(r.total_incomes));
  row(os, "beta_v", format_human(r.beta_v));
  row(os, "beta_p", format_human(r.beta_p), r.beta_p ? "products/money" : "");
  row(os, "beta_bank", format_human(r.beta_bank));
  row(os, "harrod_b", format_human(r.harrod_b));
  row(os, "domar_sigma", format_human(r.domar_sigma));
  row(os, "keynes_m", format_human(r.keynes_m));
  row(os, "mean_beta", format_human(r.mean_beta));
  if (r.fit) {
    row(os, "fit a0", format_human(r.fit->a0));
    row(os, "fit beta", format_human(r.fit->beta));
    row(os, "fit r^2", format_human(r.fit->r_squared));
  } else {
    row(os, "fit", "n/a");
  }

  os << "\n[coefficients]\n";
  os << "periods=" << r.periods << '\n';
  os << "total_investments=" << format_exact(r.total_investments) << '\n';
  os << "total_expenses=" << format_exact(r.total_expenses) << '\n';
  os << "total_incomes=" << format_exact(r.total_incomes) << '\n';
  os << "beta_v=" << format_exact(r.beta_v) << '\n';
  os << "beta_p=" << format_exact(r.beta_p) << '\n';
  os << "beta_bank=" << format_exact(r.beta_bank) << '\n';
  os << "harrod_b=" << format_exact(r.harrod_b) << '\n';
  os << "domar_sigma=" << format_exact(r.domar_sigma) << '\n';
  os << "keynes_m=" << format_exact(r.keynes_m) << '\n';
  os << "mean_beta=" << format_exact(r.mean_beta) << '\n';
  if (r.fit) {
    os << "fit_a0=" << format_exact(r.fit->a0) << '\n';
    os << "fit_beta=" << format_exact(r.fit->beta) << '\n';
    os << "fit_r_squared=" << format_exact(r.fit->r_squared) << '\n';
    os << "fit_n=" << r.fit->n << '\n';
  } else {
    os << "fit_a0=NA\nfit_beta=NA\nfit_r_squared=NA\nfit_n=0\n";
  }
  os << "[/coefficients]\n";
  return os.str();
}

std::filesystem::path points_path(const std::filesystem::path& csv_file) {
  std::filesystem::path p = csv_file;
  p += ".points.csv";
  return p;
}

int cmd_simulate(const std::filesystem::path& config_file, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](std::ostream& os) {
    const RunConfig cfg = load_config(config_file);
    os << "common-emitter stage from " << config_file.string() << '\n';
    os << render(simulate(cfg));
  });
}

int cmd_fit(const std::filesystem::path& csv_file, const std::string& x_column,
            const std::string& y_column, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](std::ostream& os) {
    const CsvTable table = load_csv(csv_file);
    const std::size_t cx = table.column(x_column);
    const std::size_t cy = table.column(y_column);
    if (table.rows.size() < 2)
      throw DomainError("fit needs at least 2 data rows, found " + std::to_string(table.rows.size()));

    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& r : table.rows) {
      xs.push_back(numeric_cell(table, r, cx));
      ys.push_back(numeric_cell(table, r, cy));
    }
    const RegressionFit fit = fit_linear(xs, ys);

    const auto points = points_path(csv_file);
    std::ofstream pf(points, std::ios::binary | std::ios::trunc);
    if (!pf) throw UsageError("cannot write '" + points.string() + "'");
    pf << "x,y_observed,y_fitted\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
      pf << format_exact(xs[i]) << ',' << format_exact(ys[i]) << ',' << format_exact(fit.predict(xs[i]))
         << '\n';
    pf.close();
    if (!pf) throw UsageError("failed writing '" + points.string() + "'");

    os << "linear fit " << y_column << " = a0 + beta * " << x_column << '\n';
    row(os, "a0", format_human(fit.a0));
    row(os, "beta", format_human(fit.beta));
    row(os, "r^2", format_human(fit.r_squared));
    row(os, "n", std::to_string(fit.n));
    os << "\n[fit]\n";
    os << "a0=" << format_exact(fit.a0) << '\n';
    os << "beta=" << format_exact(fit.beta) << '\n';
    os << "r_squared=" << format_exact(fit.r_squared) << '\n';
    os << "n=" << fit.n << '\n';
    os << "points=" << points.string() << '\n';
    os << "[/fit]\n";
  });
}

int cmd_analyze(const std::filesystem::path& csv_file, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](std::ostream& os) {
    const EconSeries series = series_from_csv(load_csv(csv_file));
    os << render(analyze_series(series), csv_file.string());
  });
}

int cmd_cascade(const std::vector<std::string>& gains, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&](std::ostream& os) {
    if (gains.empty()) throw UsageError("cascade needs at least one stage gain");
    std::vector<double> values;
    for (const auto& g : gains) {
      const auto v = parse_number(g);
      if (!v) throw UsageError("stage gain '" + g + "' is not a number");
      values.push_back(*v);
    }
    os << format_exact(cascade_gain(values)) << '\n';
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Economic amplifier: transistor stage simulation and economic coefficients", "econamp"};
  app.require_subcommand(1);

  std::string config_path;
  auto* simulate_cmd = app.add_subcommand("simulate", "Solve and characterise a common-emitter stage");
  simulate_cmd->add_option("config", config_path, "key = value config file")->required();

  std::string fit_path, x_col, y_col;
  auto* fit_cmd = app.add_subcommand("fit", "Least-squares line y = a0 + beta x from CSV columns");
  fit_cmd->add_option("csv", fit_path, "input CSV")->required();
  fit_cmd->add_option("--x", x_col, "x column")->required();
  fit_cmd->add_option("--y", y_col, "y column")->required();

  std::string analyze_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Economic coefficients of a period series");
  analyze_cmd->add_option("csv", analyze_path, "CSV with period,investments,expenses,incomes")
      ->required();

  std::vector<std::string> gains;
  auto* cascade_cmd = app.add_subcommand("cascade", "Overall gain of stages in series");
  cascade_cmd->add_option("gains", gains, "stage gains");
  cascade_cmd->positionals_at_end();

  // CLI11 parses argv back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  if (simulate_cmd->parsed()) return cmd_simulate(config_path, out, err);
  if (fit_cmd->parsed()) return cmd_fit(fit_path, x_col, y_col, out, err);
  if (analyze_cmd->parsed()) return cmd_analyze(analyze_path, out, err);
  if (cascade_cmd->parsed()) return cmd_cascade(gains, out, err);
  err << app.help();
  return kExitUsage;
}

}  // namespace econamp::cli
