#include "econamp/amplifier.hpp"

#include <cmath>

#include "econamp/errors.hpp"

namespace econamp {

void validate(const OperatingLimits& limits) {
  if (!(limits.i_c_max > 0.0 && limits.v_ce_max > 0.0 && limits.p_max > 0.0))
    throw DomainError("operating limits must all be > 0");
}

double current_gain(double i_out, double i_in) {
  if (i_in == 0.0) throw DomainError("current_gain: input current is zero");
  return i_out / i_in;
}

double output_voltage(double i_out, double r_l) {
  if (!(r_l > 0.0)) throw DomainError("output_voltage: r_l must be > 0");
  return i_out * r_l;
}

double output_power(double i_c, double r_l) {
  if (!(r_l > 0.0)) throw DomainError("output_power: r_l must be > 0");
  return r_l * i_c * i_c;
}

double stage_voltage_gain(const SmallSignalParams& ss, double r_l) {
  if (!(r_l > 0.0)) throw DomainError("stage_voltage_gain: r_l must be > 0");
  return ss.slope_s * r_l;
}

double cascade_gain(std::span<const double> stage_gains) {
  if (stage_gains.empty()) throw DomainError("cascade_gain: no stages given");
  double product = 1.0;
  for (double g : stage_gains) product *= g;
  return product;
}

StageGain stage_gain(const AmplifierConfig& config, const OperatingPoint& op,
                     const SmallSignalParams& ss) {
  StageGain g;
  g.beta_current = current_gain(op.i_c, op.i_b);
  g.voltage_gain = stage_voltage_gain(ss, config.r_l);
  g.power_out = output_power(op.i_c, config.r_l);
  return g;
}

const char* to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::CollectorCurrent:
      return "i_c";
    case LimitKind::CollectorEmitterVoltage:
      return "v_ce";
    case LimitKind::Power:
      return "power";
  }
  return "?";
}

BreakdownStatus breakdown_check(const OperatingPoint& op, const OperatingLimits& limits) {
  validate(limits);
  BreakdownStatus status;
  if (op.i_c > limits.i_c_max) status.violated.push_back(LimitKind::CollectorCurrent);
  if (op.v_ce > limits.v_ce_max) status.violated.push_back(LimitKind::CollectorEmitterVoltage);
  if (op.i_c * op.v_ce > limits.p_max) status.violated.push_back(LimitKind::Power);
  return status;
}

}  // namespace econamp
