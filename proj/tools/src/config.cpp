#include "econamp/cli/config.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include "econamp/cli/errors.hpp"
#include "econamp/cli/format.hpp"

namespace econamp::cli {
namespace {

constexpr std::array<std::string_view, 12> kKeys = {
    "v_cc", "r_b1", "r_b2", "r_l", "i_es", "i_cs",
    "alpha_n", "alpha_i", "temperature", "i_c_max", "v_ce_max", "p_max"};

constexpr std::array<std::string_view, 6> kRequired = {"v_cc", "r_b1", "r_b2", "r_l", "i_es",
                                                       "alpha_n"};

bool known_key(std::string_view key) {
  for (auto k : kKeys)
    if (k == key) return true;
  return false;
}

struct Entry {
  double value;
  std::size_t line;
};

}  // namespace

RunConfig parse_config(std::istream& in, const std::string& source) {
  std::map<std::string, Entry, std::less<>> entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(source, line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value_text = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(source, line_no, "missing key before '='");
    if (!known_key(key)) throw ParseError(source, line_no, "unknown key '" + key + "'");
    if (entries.contains(key))
      throw ParseError(source, line_no,
                       "key '" + key + "' repeated (first set on line " +
                           std::to_string(entries.at(key).line) + ")");
    const auto value = parse_number(value_text);
    if (!value)
      throw ParseError(source, line_no,
                       "value for '" + key + "' is not a number: '" + std::string(value_text) + "'");
    entries.emplace(key, Entry{*value, line_no});
  }

  for (auto key : kRequired)
    if (!entries.contains(key))
      throw ParseError(source, 0, "missing required key '" + std::string(key) + "'");

  auto get = [&](std::string_view key, double fallback) {
    auto it = entries.find(key);
    return it == entries.end() ? fallback : it->second.value;
  };
  auto line_of = [&](std::string_view key) {
    auto it = entries.find(key);
    return it == entries.end() ? std::size_t{0} : it->second.line;
  };

  RunConfig cfg;
  AmplifierConfig& amp = cfg.amplifier;
  amp.v_cc = get("v_cc", 0.0);
  amp.r_b1 = get("r_b1", 0.0);
  amp.r_b2 = get("r_b2", 0.0);
  amp.r_l = get("r_l", 0.0);
  amp.device.i_es = get("i_es", 0.0);
  amp.device.i_cs = get("i_cs", amp.device.i_es);
  amp.device.alpha_n = get("alpha_n", 0.0);
  amp.device.alpha_i = get("alpha_i", 0.0);
  amp.device.temperature = get("temperature", kDefaultTemperature);
  cfg.limits.i_c_max = get("i_c_max", OperatingLimits{}.i_c_max);
  cfg.limits.v_ce_max = get("v_ce_max", OperatingLimits{}.v_ce_max);
  cfg.limits.p_max = get("p_max", OperatingLimits{}.p_max);

  // Range checks, reported against the line that set the offending value.
  auto require = [&](bool ok, std::string_view key, const std::string& rule) {
    if (!ok) throw ParseError(source, line_of(key), std::string(key) + " " + rule);
  };
  require(amp.v_cc > 0.0, "v_cc", "must be > 0");
  require(amp.r_b1 > 0.0, "r_b1", "must be > 0");
  require(amp.r_b2 > 0.0, "r_b2", "must be > 0");
  require(amp.r_l > 0.0, "r_l", "must be > 0");
  require(amp.device.i_es > 0.0, "i_es", "must be > 0");
  require(amp.device.i_cs > 0.0, "i_cs", "must be > 0");
  require(amp.device.alpha_n > 0.0 && amp.device.alpha_n < 1.0, "alpha_n", "must lie in (0, 1)");
  require(amp.device.alpha_i >= 0.0 && amp.device.alpha_i < amp.device.alpha_n, "alpha_i",
          "must satisfy 0 <= alpha_i < alpha_n");
  require(amp.device.temperature > 0.0, "temperature", "must be > 0");
  require(cfg.limits.i_c_max > 0.0, "i_c_max", "must be > 0");
  require(cfg.limits.v_ce_max > 0.0, "v_ce_max", "must be > 0");
  require(cfg.limits.p_max > 0.0, "p_max", "must be > 0");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path.string() + "'");
  return parse_config(in, path.string());
}

std::string format_config(const RunConfig& config) {
  const AmplifierConfig& a = config.amplifier;
  const std::array<std::pair<std::string_view, double>, 12> values = {{
      {"v_cc", a.v_cc},
      {"r_b1", a.r_b1},
      {"r_b2", a.r_b2},
      {"r_l", a.r_l},
      {"i_es", a.device.i_es},
      {"i_cs", a.device.i_cs},
      {"alpha_n", a.device.alpha_n},
      {"alpha_i", a.device.alpha_i},
      {"temperature", a.device.temperature},
      {"i_c_max", config.limits.i_c_max},
      {"v_ce_max", config.limits.v_ce_max},
      {"p_max", config.limits.p_max},
  }};
  std::ostringstream out;
  for (const auto& [key, value] : values) out << key << " = " << format_exact(value) << '\n';
  return out.str();
}

}  // namespace econamp::cli
