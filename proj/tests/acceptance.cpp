#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <deque>
#include <iostream>
#include <set>
#include <thread>

#include "iterlab/counterexamples.hpp"
#include "iterlab/errors.hpp"
#include "iterlab/harness.hpp"
#include "iterlab/kleene.hpp"
#include "iterlab/monads.hpp"

namespace {

using namespace iterlab;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("ITERLAB_JOBS")) return std::max(1, std::atoi(env));
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Tally {
  std::size_t reports = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failed;
  std::set<std::string> covered;

  void add(const std::string& monad, const RunOutcome& out) {
    for (const auto& r : out.reports) {
      ++reports;
      covered.insert(monad + "/" + r.law);
      if (r.status != Status::Pass) failed.push_back(r.law + " on " + monad);
    }
    for (const auto& remark : out.remarks) {
      if (remark.starts_with("skipped ") && remark.find(" at ") != std::string::npos) ++skipped;
    }
  }
  Verdict verdict(std::size_t expected_pairs) const {
    Verdict v;
    v.pass = failed.empty() && covered.size() == expected_pairs;
    v.detail = std::to_string(reports) + " reports over " + std::to_string(covered.size()) + "/" +
               std::to_string(expected_pairs) + " law-monad pairs";
    if (skipped) v.detail += ", " + std::to_string(skipped) + " size tuples over budget";
    if (!failed.empty()) v.detail += ", failing: " + failed.front();
    return v;
  }
};

RunConfig upto(const std::string& monad, const std::string& laws, unsigned jobs, bool skip) {
  RunConfig c;
  c.monad = monad;
  c.laws = laws;
  c.sizes = {Sizes{2, 2, 2}};
  c.upto = true;
  c.budget.jobs = jobs;
  c.skip_over_budget = skip;
  return c;
}

Verdict elgot_suite(unsigned jobs) {
  const std::string laws = "EL-Fix,EL-Nat,EL-NatR,EL-Cod,EL-Uni,EL-Din,EL-Sq";
  const std::vector<std::string> monads{"maybe", "exception:E=2,div=0", "powerset", "plotkin",
                                        "pstate:S=2"};
  Tally t;
  auto start = Clock::now();
  for (const auto& m : monads) t.add(m, run(upto(m, laws, jobs, false)));
  auto secs = std::chrono::duration<double>(Clock::now() - start).count();
  Verdict v = t.verdict(monads.size() * 7);
  v.detail += ", " + std::to_string(static_cast<int>(secs)) + " s";
  return v;
}

Verdict sampled_suite(unsigned jobs) {
  Tally t;
  auto sampled = [&](const std::string& monad, const std::string& laws) {
    RunConfig c;
    c.monad = monad;
    c.laws = laws;
    c.sizes = {Sizes{2, 2, 2}};
    c.budget.mode = Mode::Sampled;
    c.budget.samples = 1000;
    c.budget.jobs = jobs;
    auto out = run(c);
    for (const auto& r : out.reports) {
      if (r.cases - r.premise_filtered < 1000 && r.law == "EL-Fix") t.failed.push_back("too few cases");
    }
    t.add(monad, out);
  };
  sampled("subdist", "EL-Fix,EL-Uni");
  sampled("resin:I=2,k=4", "EL-Fix");
  sampled("resout:O=2,k=4", "EL-Fix");
  return t.verdict(4);
}

Verdict kleene_suite(unsigned jobs) {
  const std::vector<std::string> monads{"powerset", "ndwriter:M=z2", "ndstate:S=2",
                                        "state(S=2) of powerset", "writer(M=z2) of powerset"};
  Tally t;
  for (const auto& m : monads) t.add(m, run(upto(m, "kleene", jobs, true)));
  return t.verdict(monads.size() * select_laws("kleene").size());
}

// Breadth-first reflexive-transitive closure of a relation given as bitmasks.
std::vector<std::int64_t> closure_oracle(const std::vector<std::int64_t>& rel) {
  const std::size_t n = rel.size();
  std::vector<std::int64_t> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::int64_t seen = std::int64_t{1} << s;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if ((rel[u] >> v & 1) && !(seen >> v & 1)) {
          seen |= std::int64_t{1} << v;
          queue.push_back(v);
        }
      }
    }
    out[s] = seen;
  }
  return out;
}

Verdict closure_oracle_check() {
  auto m = make_powerset();
  auto k = standard_kleene(m);
  KleisliSpace space(*m, 4, 4);
  std::size_t mismatches = 0;
  for (std::uint64_t i = 0; i < space.count(); ++i) {
    Mor r = space.at(i);
    std::vector<std::int64_t> rel;
    for (const auto& v : r.table) rel.push_back(v[0]);
    auto expect = closure_oracle(rel);
    Mor s = star(k, r);
    for (std::size_t x = 0; x < 4; ++x) mismatches += s[x][0] != expect[x];
  }
  Verdict v;
  v.pass = space.count() == 65536 && mismatches == 0;
  v.detail = std::to_string(space.count()) + " relations, " + std::to_string(mismatches) +
             " mismatches";
  return v;
}

Verdict translations(unsigned jobs) {
  Tally t;
  std::size_t pairs = 0;
  for (const auto& m : {"maybe", "powerset", "pstate:S=2"}) {
    t.add(m, run(upto(m, "T-WIW,T-IWI", jobs, true)));
    pairs += 2;
  }
  for (const auto& m : {"powerset", "ndwriter:M=z2"}) {
    t.add(m, run(upto(m, "T-EK,T-KE", jobs, true)));
    pairs += 2;
  }
  for (const auto& m : {"powerset", "ndwriter:M=z2", "ndstate:S=2", "state(S=2) of powerset",
                        "writer(M=z2) of powerset"}) {
    t.add(m, run(upto(m, "EL-JoinUnit,T-WSW", jobs, true)));
    pairs += 2;
  }
  return t.verdict(pairs);
}

Verdict counterexample_matrices(unsigned jobs) {
  Budget b;
  b.jobs = jobs;
  Verdict v;
  for (const auto& name : fixture_names()) {
    FixtureResult r = run_fixture(make_fixture(name), b);
    if (r.ok) continue;
    v.pass = false;
    std::string what;
    for (const auto& l : r.laws) {
      if (l.violated) what += (what.empty() ? "" : ", ") + l.expectation.law;
    }
    for (const auto& d : r.displayed) {
      if (!d.ok()) what += (what.empty() ? "" : ", ") + d.what;
    }
    v.detail += (v.detail.empty() ? "" : "; ") + name + " violates " + what;
  }
  if (v.pass) v.detail = "all four fixtures match their matrices and displayed values";
  return v;
}

Verdict negative_controls(unsigned jobs) {
  Verdict v;
  RunConfig c;
  c.monad = "plotkin-candidate";
  c.laws = "KA-Neut";
  c.sizes = {Sizes{1, 1, 1}};
  c.budget.jobs = jobs;
  auto out = run(c);
  bool witness = out.exit_code == 1 && !out.reports.empty() &&
                 !out.reports[0].failures.empty() &&
                 !out.reports[0].failures[0].witnesses.empty();
  if (witness) {
    const auto& f = out.reports[0].failures[0];
    v.detail = "bottom witness " + f.witnesses[0].literal + ": " + f.lhs + " vs " + f.rhs;
  } else {
    v.pass = false;
    v.detail = "no join-neutrality witness";
  }
  for (const auto& m : {"maybe", "exception:E=2,div=0", "subdist"}) {
    RunConfig k = c;
    k.monad = m;
    k.laws = "kleene";
    auto r = run(k);
    bool rejected = r.exit_code == 3 && !r.reports.empty();
    for (const auto& rep : r.reports) {
      rejected = rejected && rep.status == Status::Inapplicable &&
                 rep.note.starts_with("inapplicable: no semilattice");
    }
    if (!rejected) {
      v.pass = false;
      v.detail += std::string("; kleene not rejected on ") + m;
    }
  }
  return v;
}

Verdict determinism() {
  auto lines = [](const std::string& monad, const std::string& laws, Mode mode, unsigned jobs) {
    RunConfig c;
    c.monad = monad;
    c.laws = laws;
    c.sizes = {Sizes{2, 2, 1}};
    c.budget.mode = mode;
    c.budget.seed = 17;
    c.budget.samples = 500;
    c.budget.jobs = jobs;
    std::string text;
    for (const auto& r : run(c).reports) text += report_line(r) + "\n";
    return text;
  };
  Verdict v;
  std::size_t bytes = 0;
  for (auto [monad, laws, mode] :
       {std::tuple{"plotkin-candidate", "kleene", Mode::Exhaustive},
        std::tuple{"powerset", "elgot", Mode::Exhaustive},
        std::tuple{"subdist", "EL-Fix,EL-Uni", Mode::Sampled}}) {
    auto a = lines(monad, laws, mode, 1), b = lines(monad, laws, mode, 8);
    bytes += a.size();
    if (a != b) {
      v.pass = false;
      v.detail = std::string("reports differ on ") + monad;
    }
  }
  if (v.pass) v.detail = std::to_string(bytes) + " report bytes identical for --jobs 1 and 8";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iterlab acceptance criteria"};
  std::vector<int> only, known_red;
  unsigned jobs = default_jobs();
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--known-red", known_red, "criteria whose FAIL does not fail the run");
  app.add_option("--jobs", jobs, "worker threads");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"Elgot suite exhaustive at sizes <= 2", [&] { return elgot_suite(jobs); }},
      {"sampled Elgot suite", [&] { return sampled_suite(jobs); }},
      {"Kleene suite within the per-slot cap", [&] { return kleene_suite(jobs); }},
      {"powerset star equals the closure oracle", [] { return closure_oracle_check(); }},
      {"translation roundtrips", [&] { return translations(jobs); }},
      {"counterexample matrices", [&] { return counterexample_matrices(jobs); }},
      {"negative controls", [&] { return negative_controls(jobs); }},
      {"determinism across worker counts", [] { return determinism(); }}};

  int status = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = Verdict{false, std::string("error: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ": "
              << v.detail << std::endl;
    const bool tolerated = std::find(known_red.begin(), known_red.end(), id) != known_red.end();
    if (!v.pass && !tolerated) status = 1;
  }
  return status;
}
