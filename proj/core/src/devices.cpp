#include "econamp/devices.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "econamp/errors.hpp"

namespace econamp {
namespace {

// exp(x) - 1 for a junction voltage, guarded against overflow. Large negative
// exponents only underflow towards -1 and are accepted.
double junction_term(double voltage, double vt, double cap, const char* name) {
  const double x = voltage / vt;
  if (x > cap) {
    std::ostringstream msg;
    msg << name << " = " << voltage << " V gives junction exponent " << x
        << ", beyond the cap of " << cap;
    throw RangeError(msg.str());
  }
  return std::expm1(x);
}

}  // namespace

void validate(const BjtParams& p) {
  if (!(p.i_es > 0.0)) throw DomainError("i_es must be > 0");
  if (!(p.i_cs > 0.0)) throw DomainError("i_cs must be > 0");
  if (!(p.temperature > 0.0)) throw DomainError("temperature must be > 0");
  if (!(p.alpha_n > 0.0 && p.alpha_n < 1.0))
    throw DomainError("alpha_n must lie in (0, 1), got " + std::to_string(p.alpha_n));
  if (!(p.alpha_i >= 0.0 && p.alpha_i < p.alpha_n))
    throw DomainError("alpha_i must satisfy 0 <= alpha_i < alpha_n");
}

void validate(const MosParams& p) {
  if (!(p.k_prime > 0.0)) throw DomainError("k_prime must be > 0");
  if (!std::isfinite(p.v_threshold)) throw DomainError("v_threshold must be finite");
}

double thermal_voltage(double temperature) {
  if (!(temperature > 0.0))
    throw DomainError("temperature must be > 0 K, got " + std::to_string(temperature));
  return PhysicalConstants::boltzmann_k * temperature / PhysicalConstants::electron_charge_e;
}

BjtCurrents ebers_moll_currents(const BjtParams& params, double v_be, double v_cb,
                                double exponent_cap) {
  validate(params);
  const double vt = thermal_voltage(params.temperature);
  const double emitter = params.i_es * junction_term(v_be, vt, exponent_cap, "v_be");
  const double collector = params.i_cs * junction_term(v_cb, vt, exponent_cap, "v_cb");

  BjtCurrents out;
  out.i_e = emitter - params.alpha_i * collector;
  out.i_c = params.alpha_n * emitter - collector;
  out.i_b = out.i_e - out.i_c;
  return out;
}

BjtCurrents active_region_currents(const BjtParams& params, double v_be,
                                   double exponent_cap) {
  validate(params);
  const double vt = thermal_voltage(params.temperature);
  const double emitter = params.i_es * junction_term(v_be, vt, exponent_cap, "v_be");

  BjtCurrents out;
  out.i_e = emitter;
  out.i_c = params.alpha_n * emitter;
  out.i_b = (1.0 - params.alpha_n) * emitter;
  return out;
}

double beta_from_alpha(double alpha_n) {
  if (!(alpha_n > 0.0 && alpha_n < 1.0))
    throw DomainError("beta_from_alpha: alpha_n must lie in (0, 1), got " +
                      std::to_string(alpha_n));
  return alpha_n / (1.0 - alpha_n);
}

double mos_drain_current(const MosParams& params, double v_gs, double v_ds) {
  validate(params);
  if (!(v_ds >= 0.0)) throw DomainError("mos_drain_current: v_ds must be >= 0");
  const double overdrive = v_gs - params.v_threshold;
  if (overdrive <= 0.0) return 0.0;
  if (v_ds < overdrive) return params.k_prime * (overdrive * v_ds - 0.5 * v_ds * v_ds);
  return 0.5 * params.k_prime * overdrive * overdrive;
}

double mos_transconductance(const MosParams& params, double v_gs) {
  validate(params);
  const double overdrive = v_gs - params.v_threshold;
  return overdrive > 0.0 ? params.k_prime * overdrive : 0.0;
}

}  // namespace econamp
