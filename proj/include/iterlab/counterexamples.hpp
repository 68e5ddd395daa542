#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "iterlab/laws.hpp"

namespace iterlab {

enum class Expect { MustPass, MustFail, ReportOnly };

std::string_view expect_name(Expect expect);

struct Expectation {
  std::string law;
  Expect expect = Expect::MustPass;
  std::vector<Sizes> sizes;
};

// A concrete value the fixture must reproduce, compared as literal text.
struct Displayed {
  std::string what;
  std::string expected;
  std::string actual;

  bool ok() const { return expected == actual; }
};

// A (pseudo-)Elgot instance with a nonstandard iteration operator and the
// pass/fail matrix it must exhibit.
struct Fixture {
  std::string name;
  std::string summary;
  Instance instance;
  std::vector<Expectation> matrix;
  std::function<std::vector<Displayed>(const Instance&)> displayed;
};

struct LawVerdict {
  Expectation expectation;
  std::vector<CheckReport> reports;
  // pass, fail, or mixed over the size tuples
  std::string observed;
  bool violated = false;
};

struct FixtureResult {
  std::string name;
  std::vector<LawVerdict> laws;
  std::vector<Displayed> displayed;
  bool ok = true;
};

std::vector<std::string> fixture_names();
// Throws ParseError for an unknown name.
Fixture make_fixture(std::string_view name);
FixtureResult run_fixture(const Fixture& fixture, const Budget& budget);

// T_E X = T(X+E) with T X = X×(X+1)+1, extension transported from the
// reader-of-maybe monad (X+1)^2 through ρ and its canonical section, and
// least-fixpoint iteration above *.
MonadPtr make_retract_exception(std::size_t exceptions);
ElgotInstance retract_elgot(MonadPtr retract);
// Counts pairs on which ρ fails to be a congruence for the extension of
// (X+1)^2, in either argument, over all |X|,|Y| ≤ max_size.
std::size_t retract_congruence_violations(std::size_t max_size);

// JSON lines: one per law report with fixture and expectation fields, then
// one summary line with the displayed values.
std::vector<std::string> fixture_report_lines(const FixtureResult& result, bool timing = false);

}  // namespace iterlab
