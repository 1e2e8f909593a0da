#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbert/numeric.hpp"

namespace hilbert::lemma_suite {

struct CheckOutcome {
  bool pass = true;
  double residual = 0.0;
};

// One randomized conformance check. The body draws its own dimensions in
// [min_dim, max_dim] from the stream it is given.
struct CheckSpec {
  std::string name;       // lemma name
  std::string statement;  // the property checked, one line
  std::size_t min_dim = 1;
  std::function<CheckOutcome(RngStream&, const Tolerance&, std::size_t max_dim)> body;
};

struct CheckResult {
  std::string name;
  std::size_t pass = 0;
  std::size_t fail = 0;
  double max_residual = 0.0;
  std::optional<std::uint64_t> first_fail_seed;
  std::optional<std::string> first_error;  // message of the first trial that threw, if any

  bool operator==(const CheckResult&) const = default;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  bool operator==(const CheckReport&) const = default;
};

enum class Execution { Parallel, Serial };

const std::vector<CheckSpec>& registry();

// Runs every check (or the named subset, in registry order) `trials` times.
// Trial t of check c draws from RngStream(seed).derive(c).derive(t), where c
// is the registry index. Throws UnknownCheckName for a bad filter entry and
// InvalidValue when trials or max_dim is zero.
CheckReport run_checks(std::uint64_t seed, std::size_t max_dim, std::size_t trials,
                       const std::optional<std::vector<std::string>>& filter = std::nullopt,
                       const Tolerance& tol = {}, Execution execution = Execution::Parallel);

// Re-runs one trial from the seed reported in first_fail_seed.
CheckOutcome replay(const std::string& name, std::uint64_t trial_seed, std::size_t max_dim, const Tolerance& tol = {});

nlohmann::json report_to_json(const CheckReport& report);
std::string report_to_text(const CheckReport& report);

}  // namespace hilbert::lemma_suite
