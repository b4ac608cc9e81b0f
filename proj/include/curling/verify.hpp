#pragma once

#include "curling/properties.hpp"
#include "curling/types.hpp"

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace curling {

enum class Suite { paper_tables, theorems, all };
Suite parse_suite(std::string_view text);
std::string_view to_string(Suite s) noexcept;

/// Directory holding the checked-in golden CSV files and manifest.json.
std::filesystem::path default_golden_dir();

struct VerifyOptions {
  std::filesystem::path golden_dir = default_golden_dir();
  unsigned threads = 0;
  std::size_t step_limit = kDefaultStepLimit;
  int omega_max = 22;   // exhaustive search range
  int table_max = 12;   // c, p, q, p', d rows compared with the fixtures
  int tail_max = 20;    // rotten, prefix-increase and essential counts
  int mean_n = 24;      // length for the mean tail bound
  int c1_max = 100;     // recursive c(n,1) range
  int e_cap = 20;
  int sweep_max = 16;   // exhaustive invariant sweeps
  int fast_max = 18;    // fast curling number against the reference
  int brute_max = 24;   // method agreement for the count tables
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::size_t failures() const noexcept;
  bool ok() const noexcept { return failures() == 0; }
};

/// Runs every check of the suite in a fixed order. `on_check` sees each result
/// as soon as it is ready. A check that throws is reported as failed and the
/// suite moves on.
VerifyReport verify(Suite suite, const VerifyOptions& options = {},
                    const std::function<void(const CheckResult&)>& on_check = {});

/// "PASS name [source] detail", with FAIL or FINDING in place of PASS.
std::string format_check(const CheckResult& r);

}  // namespace curling
