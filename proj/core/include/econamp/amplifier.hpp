#pragma once

#include <span>
#include <string>
#include <vector>

#include "econamp/circuit.hpp"

namespace econamp {

struct StageGain {
  double beta_current = 0.0;
  double voltage_gain = 0.0;
  double power_out = 0.0;  // W
};

/// Maximum ratings. A limit is violated only when strictly exceeded.
struct OperatingLimits {
  double i_c_max = 0.1;    // A
  double v_ce_max = 40.0;  // V
  double p_max = 0.5;      // W

  friend bool operator==(const OperatingLimits&, const OperatingLimits&) = default;
};

void validate(const OperatingLimits& limits);

double current_gain(double i_out, double i_in);

/// U_out = I_out * R_L.
double output_voltage(double i_out, double r_l);

/// P_out = R_L * i_c^2.
double output_power(double i_c, double r_l);

/// |A_v| = S * R_L. The common-emitter stage inverts; only the magnitude is returned.
double stage_voltage_gain(const SmallSignalParams& ss, double r_l);

/// Product of the stage gains; inter-stage loading is not modelled.
double cascade_gain(std::span<const double> stage_gains);

/// Gains of one stage at its operating point.
StageGain stage_gain(const AmplifierConfig& config, const OperatingPoint& op,
                     const SmallSignalParams& ss);

enum class LimitKind { CollectorCurrent, CollectorEmitterVoltage, Power };

const char* to_string(LimitKind kind);

struct BreakdownStatus {
  std::vector<LimitKind> violated;  // empty when healthy

  bool healthy() const { return violated.empty(); }
};

BreakdownStatus breakdown_check(const OperatingPoint& op, const OperatingLimits& limits);

}  // namespace econamp
