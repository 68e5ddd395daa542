#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iterlab/counterexamples.hpp"
#include "iterlab/errors.hpp"
#include "iterlab/harness.hpp"
#include "iterlab/kleene.hpp"
#include "iterlab/monads.hpp"

namespace py = pybind11;
using namespace iterlab;

namespace {

std::vector<std::string> check(const std::string& monad, const std::string& laws,
                               const std::vector<std::string>& sizes, bool upto,
                               const std::string& mode, std::uint64_t seed, std::uint64_t samples,
                               unsigned jobs) {
  RunConfig c;
  c.monad = monad;
  c.laws = laws;
  c.sizes.clear();
  for (const auto& s : sizes) c.sizes.push_back(parse_sizes(s));
  if (c.sizes.empty()) c.sizes.push_back(Sizes{});
  c.upto = upto;
  if (mode != "exhaustive" && mode != "sampled") throw ParseError("mode is exhaustive or sampled");
  c.budget.mode = mode == "sampled" ? Mode::Sampled : Mode::Exhaustive;
  c.budget.seed = seed;
  c.budget.samples = samples;
  c.budget.jobs = std::max(1u, jobs);
  RunOutcome out;
  {
    py::gil_scoped_release release;
    out = run(c);
  }
  std::vector<std::string> lines;
  for (const auto& r : out.reports) lines.push_back(report_line(r));
  return lines;
}

std::vector<std::string> counterexamples(const std::string& fixture) {
  std::vector<std::string> names = fixture.empty() ? fixture_names() : std::vector{fixture};
  std::vector<std::string> lines;
  for (const auto& name : names) {
    auto fx = make_fixture(name);
    FixtureResult r;
    {
      py::gil_scoped_release release;
      r = run_fixture(fx, Budget{});
    }
    for (auto& l : fixture_report_lines(r)) lines.push_back(std::move(l));
  }
  return lines;
}

std::vector<std::string> closure(const std::string& literal, std::size_t size) {
  auto m = make_powerset();
  Mor s = star(standard_kleene(m), parse_mor(*m, literal, size));
  std::vector<std::string> out;
  for (const auto& v : s.table) out.push_back(m->format(size, v));
  return out;
}

std::vector<py::tuple> laws() {
  std::vector<py::tuple> out;
  for (const auto& info : law_catalog()) {
    out.push_back(py::make_tuple(info.id, info.suite, info.statement));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_iterlab, m) {
  m.doc() = "finite-model workbench for monadic iteration laws";
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotEnumerable>(m, "NotEnumerable", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("check", &check, py::arg("monad"), py::arg("laws") = "all",
        py::arg("sizes") = std::vector<std::string>{}, py::arg("upto") = false,
        py::arg("mode") = "exhaustive", py::arg("seed") = 1, py::arg("samples") = 1000,
        py::arg("jobs") = 1, "Report lines, one JSON record per law and size tuple.");
  m.def("counterexamples", &counterexamples, py::arg("fixture") = "",
        "Report lines of the separating fixtures.");
  m.def("closure", &closure, py::arg("relation"), py::arg("size"),
        "Reflexive-transitive closure of a powerset relation literal.");
  m.def("laws", &laws, "The law catalog as (id, suite, statement) tuples.");
  m.def("monad_vocabulary", &monad_vocabulary);
  m.def("fixture_names", &fixture_names);
}
