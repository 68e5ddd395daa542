#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iterlab/elgot.hpp"
#include "iterlab/kleene.hpp"
#include "iterlab/monad.hpp"

namespace iterlab {

// Carrier sizes substituted for the symbolic objects X, Y, Z of a law.
struct Sizes {
  std::size_t x = 1;
  std::size_t y = 1;
  std::size_t z = 1;

  bool operator==(const Sizes&) const = default;
};

// Everything a law check may consult about the model under test. The Elgot
// and Kleene parts are optional; laws needing an absent part are inapplicable.
struct Instance {
  std::string name;
  MonadPtr monad;
  std::optional<ElgotInstance> elgot;
  std::optional<KleeneInstance> kleene;
  // Acceptance tolerance for approximate monads; 0 means exact equality.
  double tol = 0.0;
  // Restrict decision slots to pure decisions η∘d for base d : X → X+X.
  bool pure_decisions = false;
  std::string note;

  const Monad& m() const { return *monad; }
};

// Instance with the standard Elgot and, where available, Kleene structure.
Instance standard_instance(MonadPtr m);

enum class Mode { Exhaustive, Sampled };

std::string_view mode_name(Mode mode);

struct Budget {
  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  unsigned jobs = 1;
  // Largest exhaustive quantifier range of a single slot.
  std::uint64_t slot_cap = std::uint64_t{1} << 16;
  // Largest product of the unfiltered slot ranges of one exhaustive check.
  std::uint64_t case_cap = std::uint64_t{1} << 27;
  std::size_t max_failures = 3;
};

enum class Needs : unsigned { None = 0, Elgot = 1, Kleene = 2, Both = 3 };

struct LawInfo {
  std::string id;
  std::string suite;
  std::string statement;
  Needs needs = Needs::None;
  // Which of X, Y, Z the law quantifies over, e.g. "XY".
  std::string dims;
};

struct Witness {
  std::string slot;
  std::size_t dom = 0;
  std::size_t cod = 0;
  // "kleisli", "base" or "decision"
  std::string kind;
  std::string literal;
};

struct Failure {
  std::vector<Witness> witnesses;
  std::string lhs;
  std::string rhs;
  std::string error;
};

enum class Status { Pass, Fail, Inapplicable };

std::string_view status_name(Status status);

struct CheckReport {
  std::string law;
  std::string monad;
  std::vector<std::pair<std::string, std::size_t>> sizes;
  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t cases = 0;
  std::uint64_t premise_filtered = 0;
  Status status = Status::Pass;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;
  std::string note;
  double wall_ms = 0.0;
};

const std::vector<LawInfo>& law_catalog();
const LawInfo& law_info(std::string_view id);
bool is_law(std::string_view id);
std::vector<std::string> suite_names();
// Law ids of a suite (`monad`, `elgot`, `kleene`, `while`, `translations`,
// `all`), a single law id, or a comma-separated list of either.
// Throws ParseError otherwise.
std::vector<std::string> select_laws(std::string_view selection);

// Empty if applicable, otherwise the "inapplicable: ..." reason.
std::optional<std::string> inapplicable_reason(const Instance& inst, std::string_view law);

// Sizes projected onto the dimensions the law quantifies over.
std::vector<std::pair<std::string, std::size_t>> law_sizes(std::string_view law, const Sizes& s);

// Runs one law at one size tuple. Exhaustive mode throws NotEnumerable when a
// slot ranges over a non-enumerable space and BudgetExceeded past the caps.
CheckReport check_law(const Instance& inst, std::string_view law, const Sizes& sizes,
                      const Budget& budget);

// Naive exhaustive case count without running anything; saturates at 2^64-1.
std::uint64_t exhaustive_cases(const Instance& inst, std::string_view law, const Sizes& sizes);

}  // namespace iterlab
