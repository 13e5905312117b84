#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "econamp/amplifier.hpp"
#include "econamp/circuit.hpp"
#include "econamp/cli/config.hpp"
#include "econamp/econmap.hpp"

namespace econamp::cli {

struct RunReport {
  RunConfig config;
  OperatingPoint op;
  SmallSignalParams small_signal;
  StageGain gain;
  BreakdownStatus breakdown;
  std::vector<std::string> warnings;
};

/// Solves and characterises one amplifier stage.
RunReport simulate(const RunConfig& config);

/// Human tables followed by a `[config]` echo and a `[result]` key=value block.
std::string render(const RunReport& report);
std::string render(const CoefficientReport& report, const std::string& source);

// Each command prints its result to `out`, diagnostics to `err`, and returns
// the process exit code: 0 ok, 2 usage, 3 parse, 4 solver or domain error.
int cmd_simulate(const std::filesystem::path& config_file, std::ostream& out, std::ostream& err);
int cmd_fit(const std::filesystem::path& csv_file, const std::string& x_column,
            const std::string& y_column, std::ostream& out, std::ostream& err);
int cmd_analyze(const std::filesystem::path& csv_file, std::ostream& out, std::ostream& err);
int cmd_cascade(const std::vector<std::string>& gains, std::ostream& out, std::ostream& err);

/// Path of the plot-points file written by `fit`: `<input>.points.csv`.
std::filesystem::path points_path(const std::filesystem::path& csv_file);

/// Full command line dispatch; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace econamp::cli
