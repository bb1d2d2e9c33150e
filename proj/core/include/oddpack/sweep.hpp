#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddpack/budget.hpp"

namespace oddpack {

/// Environment variable naming the default sweep configuration file.
inline constexpr const char* kSweepConfigEnv = "ODDPACK_SWEEP_CONFIG";

/// `key = value` settings. Lookups try `<suite>.<key>` first, then `<key>`.
class SweepConfig {
 public:
  SweepConfig() = default;

  /// Parses `key = value` lines; `#` starts a comment. Throws ParseError.
  static SweepConfig parse(std::istream& in);
  static SweepConfig load(const std::filesystem::path& path);
  /// Loads the file named by ODDPACK_SWEEP_CONFIG, or returns an empty config.
  static SweepConfig from_environment();

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& suite, const std::string& key) const;
  std::string get(const std::string& suite, const std::string& key, const std::string& fallback) const;
  long long get_int(const std::string& suite, const std::string& key, long long fallback) const;
  double get_double(const std::string& suite, const std::string& key, double fallback) const;

  /// budget_nodes / budget_seconds for the suite.
  Budget budget(const std::string& suite) const;
  int workers(const std::string& suite) const;

 private:
  std::map<std::string, std::string> values_;
};

struct SweepReport {
  std::string suite;
  /// One record per instance, ordered by instance id.
  std::vector<nlohmann::json> records;
  std::size_t counterexamples = 0;
  std::size_t budget_exhausted = 0;
  double seconds = 0.0;

  nlohmann::json summary() const;
  bool clean() const noexcept { return counterexamples == 0; }
};

/// Names of the registered suites.
std::vector<std::string> sweep_suites();

/// Runs a registered suite. Budget exhaustion on an instance is recorded in
/// that instance's record rather than aborting the sweep. Throws InputError
/// for an unknown suite.
SweepReport run_sweep(const std::string& suite, const SweepConfig& config = {});

/// JSON lines: every record, then the summary object.
void write_report(std::ostream& out, const SweepReport& report, bool include_records = true);

}  // namespace oddpack
