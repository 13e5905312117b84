#include "econamp/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "econamp/errors.hpp"

namespace econamp {

void validate(const AmplifierConfig& config) {
  if (!(config.v_cc > 0.0)) throw DomainError("v_cc must be > 0");
  if (!(config.r_b1 > 0.0)) throw DomainError("r_b1 must be > 0");
  if (!(config.r_b2 > 0.0)) throw DomainError("r_b2 must be > 0");
  if (!(config.r_l > 0.0)) throw DomainError("r_l must be > 0");
  validate(config.device);
}

Thevenin base_thevenin(const AmplifierConfig& config) {
  const double sum = config.r_b1 + config.r_b2;
  return {config.v_cc * config.r_b2 / sum, config.r_b1 * config.r_b2 / sum};
}

OperatingPoint solve_operating_point(const AmplifierConfig& config,
                                     const SolverOptions& options) {
  validate(config);
  const BjtParams& dev = config.device;
  const Thevenin th = base_thevenin(config);
  const double vt = thermal_voltage(dev.temperature);
  const double leak = (1.0 - dev.alpha_n) * dev.i_es;

  // Base-node KCL: current delivered by the divider minus current drawn by the base.
  auto residual = [&](double v) {
    return (th.voltage - v) / th.resistance - leak * std::expm1(v / vt);
  };
  // Newton runs on the equivalent log form v = Vt ln(1 + (V_th - v) / (R_th I_leak)),
  // which is convex, increasing and close to linear, so it does not crawl down
  // the exponential one thermal voltage per step the way the current form does.
  const double leak_drop = th.resistance * leak;
  auto log_form = [&](double v) { return v - vt * std::log1p((th.voltage - v) / leak_drop); };
  auto log_slope = [&](double v) { return 1.0 + vt / (leak_drop + th.voltage - v); };

  // residual(0) > 0 and residual(V_th) < 0; the root is unique since the
  // residual is strictly decreasing. Stay below the exponent cap.
  double lo = 0.0;
  double hi = std::min(th.voltage, kDefaultExponentCap * vt);
  if (residual(hi) > 0.0) {
    std::ostringstream msg;
    msg << "operating point lies beyond v_be = " << hi << " V (device exponent cap)";
    throw SolverError(msg.str(), residual(hi));
  }

  double v = options.initial_guess;
  if (!(v > lo && v < hi)) v = 0.5 * (lo + hi);

  double f = residual(v);
  double step = hi - lo;
  int iter = 0;
  // Converged once the residual meets tolerance and Newton has stopped moving;
  // a small residual alone allows a sizeable v_be error when the base draws little.
  while (!(std::abs(f) < options.residual_tol && step <= options.step_tol)) {
    if (iter >= options.max_iterations) {
      std::ostringstream msg;
      msg << "operating point did not converge after " << iter
          << " iterations (last residual " << f << " A at v_be = " << v << " V)";
      throw SolverError(msg.str(), f);
    }
    ++iter;
    if (f > 0.0)
      lo = v;
    else if (f < 0.0)
      hi = v;
    else
      break;

    double next = v - log_form(v) / log_slope(v);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    step = std::abs(next - v);
    if (step == 0.0) break;  // no representable progress left
    v = next;
    f = residual(v);
  }
  if (std::abs(f) >= options.residual_tol) {
    std::ostringstream msg;
    msg << "operating point stalled at v_be = " << v << " V with residual " << f << " A";
    throw SolverError(msg.str(), f);
  }

  const BjtCurrents cur = active_region_currents(dev, v);
  OperatingPoint op;
  op.v_be = v;
  op.i_b = cur.i_b;
  op.i_c = cur.i_c;
  op.i_e = cur.i_e;
  op.v_ce = config.v_cc - cur.i_c * config.r_l;
  op.residual = f;
  op.iterations = iter;
  op.saturated = op.v_ce <= 0.0;
  return op;
}

SmallSignalParams small_signal_params(const BjtParams& device, const OperatingPoint& op) {
  validate(device);
  if (!(op.i_c > 0.0)) throw DomainError("small_signal_params: operating point needs i_c > 0");
  const double vt = thermal_voltage(device.temperature);

  SmallSignalParams ss;
  // d/dv of alpha_n I_ES (e^{v/Vt} - 1) is (i_c + alpha_n I_ES) / Vt.
  ss.slope_s = (op.i_c + device.alpha_n * device.i_es) / vt;
  ss.r_in = beta_from_alpha(device.alpha_n) / ss.slope_s;

  // Magnitude of d/dv_cb of -I_CS (e^{v_cb/Vt} - 1), with v_cb = v_be - v_ce.
  const double x = (op.v_be - op.v_ce) / vt;
  if (x > kDefaultExponentCap) {
    std::ostringstream msg;
    msg << "collector junction voltage " << op.v_be - op.v_ce
        << " V exceeds the exponent cap; g_out undefined";
    throw RangeError(msg.str());
  }
  ss.g_out = device.i_cs / vt * std::exp(x);
  return ss;
}

SmallSignalParams static_finite_params(const BjtParams& device, double v_be, double delta) {
  if (!(delta > 0.0)) throw DomainError("static_finite_params: delta must be > 0");
  if (!(v_be - delta > 0.0))
    throw DomainError("static_finite_params: v_be - delta must stay > 0 so currents keep their sign");

  const BjtCurrents up = active_region_currents(device, v_be + delta);
  const BjtCurrents down = active_region_currents(device, v_be - delta);

  SmallSignalParams ss;
  ss.slope_s = (up.i_c - down.i_c) / (2.0 * delta);
  ss.r_in = (2.0 * delta) / (up.i_b - down.i_b);
  ss.g_out = 0.0;
  return ss;
}

}  // namespace econamp
