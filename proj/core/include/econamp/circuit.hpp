#pragma once

#include "econamp/devices.hpp"

namespace econamp {

/// Single-transistor common-emitter stage: base biased by the divider
/// R_B1 (to V_CC) / R_B2 (to ground), collector load R_L to V_CC, emitter
/// grounded.
struct AmplifierConfig {
  double v_cc = 12.0;
  double r_b1 = 100e3;
  double r_b2 = 20e3;
  double r_l = 1e3;
  BjtParams device;

  friend bool operator==(const AmplifierConfig&, const AmplifierConfig&) = default;
};

struct OperatingPoint {
  double v_be = 0.0;
  double i_b = 0.0;
  double i_c = 0.0;
  double i_e = 0.0;
  double v_ce = 0.0;
  // Base-node Kirchhoff residual (A) at the returned v_be.
  double residual = 0.0;
  int iterations = 0;
  // v_ce <= 0: the transistor has left the active region.
  bool saturated = false;
};

struct SmallSignalParams {
  double r_in = 0.0;     // ohms
  double g_out = 0.0;    // siemens
  double slope_s = 0.0;  // siemens
};

struct SolverOptions {
  double residual_tol = 1e-12;  // A
  double step_tol = 1e-13;      // V, size of the last Newton step
  int max_iterations = 100;
  double initial_guess = 0.6;  // V
};

void validate(const AmplifierConfig& config);

/// Thevenin equivalent of the base divider.
struct Thevenin {
  double voltage = 0.0;
  double resistance = 0.0;
};
Thevenin base_thevenin(const AmplifierConfig& config);

/// Solves (V_th - v_be)/R_th = i_b(v_be) with active-region device currents.
///
/// Newton iteration from `options.initial_guess`, safeguarded by a shrinking
/// bracket; any step that leaves the bracket is replaced by bisection.
/// Stops when the base-node residual is below `options.residual_tol` and the
/// last step is below `options.step_tol`. Throws SolverError when that does not
/// happen within `options.max_iterations`.
OperatingPoint solve_operating_point(const AmplifierConfig& config,
                                     const SolverOptions& options = {});

/// Analytic small-signal parameters at a solved point.
///
/// slope_s = di_c/dv_be, r_in = beta/slope_s, and g_out = |di_c/dv_cb| from the
/// full collector equation, evaluated at the junction voltage v_be - v_ce.
/// Throws DomainError when op.i_c <= 0.
SmallSignalParams small_signal_params(const BjtParams& device, const OperatingPoint& op);

/// Central-difference estimates of the same parameters from the active-region
/// currents at v_be +/- delta. g_out is identically zero in that model.
/// Throws DomainError if delta <= 0 or v_be - delta <= 0.
SmallSignalParams static_finite_params(const BjtParams& device, double v_be, double delta);

}  // namespace econamp
