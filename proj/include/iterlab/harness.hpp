#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iterlab/laws.hpp"

namespace iterlab {

struct InstanceOptions {
  // Overrides the depth bound k of resumption monads.
  std::optional<std::size_t> fuel;
  // Overrides the acceptance tolerance (subdist defaults to 1e-6).
  std::optional<double> tol;
  bool pure_decisions = false;
};

// Builds an instance from a selection string:
//   maybe | exception:E=2,div=0 | powerset | plotkin | plotkin-candidate |
//   ndwriter:M=satnat3 | subdist | pstate:S=2 | ndstate:S=2 |
//   resin:I=2,k=4 | resout:O=2,k=4 | state(S=2) of <kleene monad> |
//   writer(M=z2) of <kleene monad>
// Throws ParseError with the valid vocabulary on unknown input.
Instance parse_instance(std::string_view spec, const InstanceOptions& options = {});
std::string monad_vocabulary();

// "2,2,1" → X=2, Y=2, Z=1; missing trailing sizes repeat the last one.
Sizes parse_sizes(std::string_view text);
// All tuples with 1 ≤ each size ≤ the given bound, in lexicographic order.
std::vector<Sizes> sizes_upto(const Sizes& bound);

struct RunConfig {
  std::string monad;
  std::string laws = "all";
  std::vector<Sizes> sizes{Sizes{}};
  bool upto = false;
  Budget budget;
  InstanceOptions options;
  bool timing = false;
  // Skip size tuples whose enumeration exceeds the budget instead of failing.
  bool skip_over_budget = false;
};

struct RunOutcome {
  std::vector<CheckReport> reports;
  // Human-readable remarks: skipped laws and size tuples.
  std::vector<std::string> remarks;
  // 0 all pass, 1 some law failed, 3 inapplicable selection.
  int exit_code = 0;
};

// Runs every selected law at every distinct projected size tuple. Throws
// ParseError, NotEnumerable or BudgetExceeded for unusable configurations.
RunOutcome run(const RunConfig& config);

// One self-describing JSON record per report; wallTimeMs only with timing.
std::string report_line(const CheckReport& report, bool timing = false);

}  // namespace iterlab
