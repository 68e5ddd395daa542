#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "iterlab/counterexamples.hpp"
#include "iterlab/errors.hpp"
#include "iterlab/harness.hpp"
#include "iterlab/kleene.hpp"
#include "iterlab/monads.hpp"

namespace {

using namespace iterlab;

constexpr int kUsage = 2;

int usage(const std::string& message) {
  std::cerr << "iterlab: " << message << "\n";
  return kUsage;
}

// Writes to the report path when given, otherwise to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw ParseError("cannot open report file '" + path + "'");
    }
  }
  void line(const std::string& text) { (file_.is_open() ? file_ : std::cout) << text << '\n'; }

 private:
  std::ofstream file_;
};

struct CheckArgs {
  std::string monad;
  std::string laws = "all";
  std::vector<std::string> sizes;
  std::string upto;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  unsigned jobs = 1;
  std::string report;
  std::optional<std::size_t> fuel;
  std::optional<double> tol;
  std::string decisions = "all";
  bool timing = false;
  bool skip_over_budget = false;
};

int run_check(const CheckArgs& a) {
  RunConfig config;
  config.monad = a.monad;
  config.laws = a.laws;
  config.sizes.clear();
  for (const auto& s : a.sizes) config.sizes.push_back(parse_sizes(s));
  if (!a.upto.empty()) {
    if (!config.sizes.empty()) throw ParseError("--sizes and --upto are exclusive");
    config.sizes.push_back(parse_sizes(a.upto));
    config.upto = true;
  }
  if (config.sizes.empty()) config.sizes.push_back(Sizes{});
  config.budget.mode = a.mode == "sampled" ? Mode::Sampled : Mode::Exhaustive;
  config.budget.seed = a.seed;
  config.budget.samples = a.samples;
  config.budget.jobs = std::max(1u, a.jobs);
  config.options.fuel = a.fuel;
  config.options.tol = a.tol;
  config.options.pure_decisions = a.decisions == "pure";
  config.timing = a.timing;
  config.skip_over_budget = a.skip_over_budget;

  RunOutcome outcome = run(config);
  Sink sink(a.report);
  for (const auto& r : outcome.reports) sink.line(report_line(r, a.timing));
  for (const auto& remark : outcome.remarks) std::cerr << remark << "\n";
  std::size_t failed = 0;
  for (const auto& r : outcome.reports) {
    if (r.status == Status::Fail) {
      ++failed;
      std::cerr << "FAIL " << r.law << " on " << r.monad << "\n";
    } else if (r.status == Status::Inapplicable) {
      std::cerr << r.law << ": " << r.note << "\n";
    }
  }
  std::cerr << outcome.reports.size() << " reports, " << failed << " failed\n";
  return outcome.exit_code;
}

int run_counterexamples(const std::string& fixture, const std::string& report, unsigned jobs,
                        bool timing) {
  std::vector<std::string> names = fixture.empty() ? fixture_names() : std::vector{fixture};
  Budget budget;
  budget.jobs = std::max(1u, jobs);
  Sink sink(report);
  bool ok = true;
  for (const auto& name : names) {
    FixtureResult result = run_fixture(make_fixture(name), budget);
    for (const auto& line : fixture_report_lines(result, timing)) sink.line(line);
    std::cerr << name << ": " << (result.ok ? "ok" : "VIOLATED") << "\n";
    for (const auto& v : result.laws) {
      std::cerr << "  " << v.expectation.law << " " << expect_name(v.expectation.expect)
                << " observed " << v.observed << (v.violated ? "  <- violated" : "") << "\n";
    }
    for (const auto& d : result.displayed) {
      std::cerr << "  " << d.what << " = " << d.actual;
      if (!d.ok()) std::cerr << "  <- expected " << d.expected;
      std::cerr << "\n";
    }
    ok = ok && result.ok;
  }
  return ok ? 0 : 1;
}

int run_closure(const std::string& literal) {
  MonadPtr m = make_powerset();
  std::size_t n = 0;
  for (std::size_t i = 0; i < literal.size(); ++i) {
    if (literal.compare(i, 2, "->") == 0) ++n;
  }
  if (n == 0) throw ParseError("expected a relation literal such as '0 -> {1} ; 1 -> {}'");
  Mor r = parse_mor(*m, literal, n);
  Mor s = star(standard_kleene(m), r);
  for (std::size_t x = 0; x < s.dom; ++x) {
    std::cout << x << " -> " << m->format(n, s[x]) << "\n";
  }
  return 0;
}

int run_laws() {
  for (const auto& info : law_catalog()) {
    std::cout << info.id << "\t" << info.suite << "\t" << info.statement << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iterlab: finite-model workbench for monadic iteration laws"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* cmd_check = app.add_subcommand("check", "check laws on a monad");
  cmd_check->add_option("--monad", check.monad, "monad selection: " + monad_vocabulary())
      ->required();
  cmd_check->add_option("--laws", check.laws, "suite, law id, or comma list")
      ->capture_default_str();
  cmd_check->add_option("--sizes", check.sizes, "carrier sizes X,Y,Z (repeatable)");
  cmd_check->add_option("--upto", check.upto, "every size tuple up to X,Y,Z");
  cmd_check->add_option("--mode", check.mode, "quantifier mode")
      ->check(CLI::IsMember({"exhaustive", "sampled"}))
      ->capture_default_str();
  cmd_check->add_option("--seed", check.seed, "sampling seed")->capture_default_str();
  cmd_check->add_option("--samples", check.samples, "sampled cases per law")
      ->capture_default_str();
  cmd_check->add_option("--jobs", check.jobs, "worker threads")
      ->envname("ITERLAB_JOBS")
      ->capture_default_str();
  cmd_check->add_option("--report", check.report, "write report lines to this file");
  cmd_check->add_option("--fuel", check.fuel, "depth bound of resumption monads");
  cmd_check->add_option("--tol", check.tol, "acceptance tolerance");
  cmd_check->add_option("--decisions", check.decisions, "decision slots: all or pure")
      ->check(CLI::IsMember({"all", "pure"}))
      ->capture_default_str();
  cmd_check->add_flag("--timing", check.timing, "include wallTimeMs in reports");
  cmd_check->add_flag("--skip-over-budget", check.skip_over_budget,
                      "skip size tuples beyond the exhaustive budget");

  std::string fixture, cx_report;
  unsigned cx_jobs = 1;
  bool cx_timing = false;
  auto* cmd_cx = app.add_subcommand("counterexamples", "run the separating fixtures");
  cmd_cx->add_option("--fixture", fixture, "one fixture name");
  cmd_cx->add_option("--report", cx_report, "write report lines to this file");
  cmd_cx->add_option("--jobs", cx_jobs, "worker threads")->envname("ITERLAB_JOBS");
  cmd_cx->add_flag("--timing", cx_timing, "include wallTimeMs in reports");

  std::vector<std::string> rows;
  auto* cmd_closure = app.add_subcommand("closure", "reflexive-transitive closure of a relation");
  cmd_closure->add_option("relation", rows, "powerset literal, e.g. '0 -> {1} ; 1 -> {}'; "
                                            "several arguments are joined as rows")
      ->required();

  auto* cmd_laws = app.add_subcommand("laws", "list the law catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*cmd_check) return run_check(check);
    if (*cmd_cx) return run_counterexamples(fixture, cx_report, cx_jobs, cx_timing);
    if (*cmd_closure) {
      std::string relation;
      for (const auto& row : rows) relation += (relation.empty() ? "" : ";") + row;
      return run_closure(relation);
    }
    if (*cmd_laws) return run_laws();
  } catch (const ParseError& e) {
    return usage(e.what());
  } catch (const NotEnumerable& e) {
    return usage(e.what());
  } catch (const BudgetExceeded& e) {
    return usage(std::string(e.what()) + " (narrow --sizes, use --mode sampled, or pass --skip-over-budget)");
  } catch (const Error& e) {
    std::cerr << "iterlab: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
