#pragma once

// Static device models: Ebers-Moll equations for an n-p-n bipolar transistor
// and a square-law n-channel MOS transistor.

namespace econamp {

struct PhysicalConstants {
  static constexpr double boltzmann_k = 1.380649e-23;         // J/K
  static constexpr double electron_charge_e = 1.602176634e-19;  // C
};

inline constexpr double kDefaultTemperature = 300.0;  // K
inline constexpr double kDefaultExponentCap = 200.0;

/// Ebers-Moll parameters. Valid when i_es, i_cs, temperature > 0,
/// 0 < alpha_n < 1 and 0 <= alpha_i < alpha_n.
struct BjtParams {
  double i_es = 1e-14;  // emitter junction saturation current, A
  double i_cs = 1e-14;  // collector junction saturation current, A
  double alpha_n = 0.99;
  double alpha_i = 0.0;
  double temperature = kDefaultTemperature;

  friend bool operator==(const BjtParams&, const BjtParams&) = default;
};

/// Square-law MOS parameters: I_D = (k'/2)(V_GS - V_T)^2 in saturation.
struct MosParams {
  double k_prime = 2e-3;  // A/V^2
  double v_threshold = 1.0;

  friend bool operator==(const MosParams&, const MosParams&) = default;
};

struct BjtCurrents {
  double i_e = 0.0;
  double i_c = 0.0;
  double i_b = 0.0;
};

/// Throws DomainError describing the first violated invariant.
void validate(const BjtParams& params);
void validate(const MosParams& params);

/// kT/e in volts. Throws DomainError for temperature <= 0.
double thermal_voltage(double temperature);

/// Full Ebers-Moll static equations.
///
/// `v_cb` is the collector-junction voltage in the sign convention of the
/// exponent exp(e*V_CB/kT): negative values reverse-bias the junction, so the
/// active region is v_cb << -kT/e. The base current follows from
/// I_E = I_B + I_C.
///
/// Throws RangeError when v/V_t of either junction exceeds `exponent_cap`.
BjtCurrents ebers_moll_currents(const BjtParams& params, double v_be, double v_cb,
                                double exponent_cap = kDefaultExponentCap);

/// Ebers-Moll equations in the strongly reverse-biased collector limit.
/// i_b is evaluated from its own closed form, (1 - alpha_n) I_ES (e^x - 1).
BjtCurrents active_region_currents(const BjtParams& params, double v_be,
                                   double exponent_cap = kDefaultExponentCap);

/// Common-emitter current gain alpha_n / (1 - alpha_n).
double beta_from_alpha(double alpha_n);

/// Drain current with cutoff, triode and saturation regions. Requires v_ds >= 0.
double mos_drain_current(const MosParams& params, double v_gs, double v_ds);

/// dI_D/dV_GS in saturation; zero at or below threshold.
double mos_transconductance(const MosParams& params, double v_gs);

}  // namespace econamp
