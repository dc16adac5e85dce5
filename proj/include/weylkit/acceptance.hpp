#pragma once

// The twelve end-to-end acceptance checks, shared by the `accept` CLI
// command and the acceptance test binary.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace weylkit {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs every criterion in order; `on_result` sees each result as soon as it
/// is known. Deterministic for a given seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3 title: detail (0.12s)"; the timing is omitted when `with_time` is
/// false so repeated runs print identical text.
std::string format_result(const CriterionResult& r, bool with_time = true);

}  // namespace weylkit
