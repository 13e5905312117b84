#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "econamp/amplifier.hpp"
#include "econamp/circuit.hpp"

namespace econamp::cli {

/// Everything a `simulate` run needs: the bias network, its transistor and
/// the breakdown ratings.
struct RunConfig {
  AmplifierConfig amplifier;
  OperatingLimits limits;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses the `key = value` config format.
///
///   # comment
///   v_cc = 12
///   r_b1 = 100e3
///
/// Required keys: v_cc, r_b1, r_b2, r_l, i_es, alpha_n. Optional keys and their
/// defaults: i_cs (= i_es), alpha_i (0), temperature (300), i_c_max (0.1),
/// v_ce_max (40), p_max (0.5). Unknown or repeated keys, malformed numbers and
/// out-of-range values raise ParseError with the offending line.
RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Writes every key with round-trip precision; parse_config reads it back to
/// an equal RunConfig.
std::string format_config(const RunConfig& config);

}  // namespace econamp::cli
