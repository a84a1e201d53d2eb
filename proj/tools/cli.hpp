#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace gaussq::cli {

/// Everything a run depends on; a run is a pure function of this record.
struct RunConfig {
  std::string subcommand;
  std::uint64_t p = 0;
  unsigned r = 1;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> alpha;
  std::uint64_t psi = 0;
  std::uint64_t beta = 1;
  std::optional<std::uint32_t> g;
  std::uint64_t seed = 1;
  std::uint64_t t = 10000;
  double epsilon = 0;
  std::uint64_t x = 1;
  std::uint64_t s = 1;
  std::string ordering = "sequential";
  std::string strategy = "two-basis";
  std::string estimator = "exact";
  std::string mode = "exact";
  std::string format = "json";
  std::string output;
  bool timings = false;
};

nlohmann::json config_echo(const RunConfig& cfg);

/// Exit codes: 0 success, 1 domain error (message on err), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestReport {
  int passed = 0;
  int failed = 0;
  nlohmann::json checks = nlohmann::json::array();
};

/// The invariant suite at small scale.
SelftestReport run_selftest();

}  // namespace gaussq::cli
