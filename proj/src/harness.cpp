#include "iterlab/harness.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "iterlab/errors.hpp"
#include "iterlab/monads.hpp"
#include "report_json.hpp"

namespace iterlab {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::size_t to_size(std::string_view text, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("expected a nonnegative integer for " + std::string(what) + ", got '" +
                     std::string(text) + "'");
  }
  return v;
}

// `key=value,key=value` into a map, rejecting keys outside `allowed`.
std::map<std::string, std::string> parse_params(std::string_view text,
                                                const std::vector<std::string>& allowed,
                                                std::string_view monad) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item = trim(text.substr(pos, end - pos));
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      std::string keys;
      for (const auto& a : allowed) keys += (keys.empty() ? "" : ", ") + a;
      throw ParseError("unknown parameter '" + key + "' for " + std::string(monad) +
                       "; expected " + keys);
    }
    out[key] = trim(item.substr(eq + 1));
    pos = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

std::size_t param(const std::map<std::string, std::string>& p, const std::string& key,
                  std::size_t fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : to_size(it->second, key);
}

Instance finish(MonadPtr m, const InstanceOptions& options) {
  Instance inst = standard_instance(std::move(m));
  inst.pure_decisions = options.pure_decisions;
  return inst;
}

Instance parse_base_instance(std::string_view spec, const InstanceOptions& options) {
  std::string text = trim(spec);
  std::string head = text, rest;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    head = trim(text.substr(0, colon));
    rest = trim(text.substr(colon + 1));
  }
  auto no_params = [&] {
    if (!rest.empty()) throw ParseError(head + " takes no parameters");
  };
  if (head == "maybe") {
    no_params();
    return finish(make_maybe(), options);
  }
  if (head == "powerset") {
    no_params();
    return finish(make_powerset(), options);
  }
  if (head == "plotkin") {
    no_params();
    return finish(make_plotkin(), options);
  }
  if (head == "plotkin-candidate") {
    no_params();
    Instance inst = finish(make_plotkin(), options);
    inst.name = "plotkin-candidate";
    inst.kleene = plotkin_candidate();
    inst.note = "candidate semilattice: union with bottom {*}";
    return inst;
  }
  if (head == "subdist") {
    no_params();
    Instance inst = finish(make_subdist(), options);
    inst.tol = options.tol.value_or(1e-6);
    return inst;
  }
  if (head == "exception") {
    auto p = parse_params(rest, {"E", "div"}, head);
    std::size_t e = param(p, "E", 2), div = param(p, "div", 0);
    if (div >= e) throw ParseError("exception: div must index one of the E exceptions");
    return finish(make_exception(e, div), options);
  }
  if (head == "ndwriter") {
    auto p = parse_params(rest, {"M"}, head);
    return finish(make_ndwriter(parse_monoid(p.count("M") ? p["M"] : "satnat3")), options);
  }
  if (head == "pstate" || head == "ndstate") {
    auto p = parse_params(rest, {"S"}, head);
    std::size_t s = param(p, "S", 2);
    if (s == 0) throw ParseError(head + ": S must be positive");
    return finish(head == "pstate" ? make_pstate(s) : make_ndstate(s), options);
  }
  if (head == "resin" || head == "resout") {
    const std::string alphabet = head == "resin" ? "I" : "O";
    auto p = parse_params(rest, {alphabet, "k"}, head);
    std::size_t a = param(p, alphabet, 2);
    std::size_t k = options.fuel.value_or(param(p, "k", 4));
    if (a == 0 || k == 0) throw ParseError(head + ": alphabet and fuel must be positive");
    return finish(head == "resin" ? make_resumption_in(a, k) : make_resumption_out(a, k), options);
  }
  throw ParseError("unknown monad '" + text + "'; expected one of " + monad_vocabulary());
}

}  // namespace

std::string monad_vocabulary() {
  return "maybe, exception:E=2,div=0, powerset, plotkin, plotkin-candidate, ndwriter:M=satnat3, "
         "subdist, pstate:S=2, ndstate:S=2, resin:I=2,k=4, resout:O=2,k=4, "
         "state(S=2) of <monad>, writer(M=z2) of <monad>";
}

Instance parse_instance(std::string_view spec, const InstanceOptions& options) {
  std::string text = trim(spec);
  if (auto of = text.find(") of "); of != std::string::npos) {
    std::string outer = trim(text.substr(0, of + 1));
    Instance base = parse_instance(text.substr(of + 5), options);
    if (!base.kleene) {
      throw ParseError("transformers need a Kleene base; " + base.name + " has no semilattice");
    }
    KleeneInstance k;
    if (outer.starts_with("state(S=") && outer.back() == ')') {
      std::size_t s = to_size(outer.substr(8, outer.size() - 9), "S");
      if (s == 0) throw ParseError("state: S must be positive");
      k = state_transform(*base.kleene, s);
    } else if (outer.starts_with("writer(M=") && outer.back() == ')') {
      k = writer_transform(*base.kleene, parse_monoid(outer.substr(9, outer.size() - 10)));
    } else {
      throw ParseError("unknown transformer '" + outer + "'; expected state(S=n) or writer(M=...)");
    }
    Instance inst;
    inst.name = k.m().name();
    inst.monad = k.monad;
    inst.kleene = k;
    inst.elgot = standard_elgot(k.monad);
    inst.pure_decisions = options.pure_decisions;
    inst.tol = base.tol;
    return inst;
  }
  return parse_base_instance(text, options);
}

Sizes parse_sizes(std::string_view text) {
  std::vector<std::size_t> parts;
  std::string s = trim(text);
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    parts.push_back(to_size(trim(std::string_view(s).substr(pos, end - pos)), "sizes"));
    if (end == s.size()) break;
    pos = end + 1;
  }
  if (parts.size() > 3) throw ParseError("sizes take at most three components X,Y,Z");
  while (parts.size() < 3) parts.push_back(parts.back());
  return Sizes{parts[0], parts[1], parts[2]};
}

std::vector<Sizes> sizes_upto(const Sizes& bound) {
  std::vector<Sizes> out;
  for (std::size_t x = 1; x <= bound.x; ++x) {
    for (std::size_t y = 1; y <= bound.y; ++y) {
      for (std::size_t z = 1; z <= bound.z; ++z) out.push_back(Sizes{x, y, z});
    }
  }
  return out;
}

RunOutcome run(const RunConfig& config) {
  Instance inst = parse_instance(config.monad, config.options);
  auto laws = select_laws(config.laws);
  std::vector<Sizes> tuples;
  for (const auto& s : config.sizes) {
    if (config.upto) {
      for (const auto& t : sizes_upto(s)) tuples.push_back(t);
    } else {
      tuples.push_back(s);
    }
  }
  RunOutcome outcome;
  std::vector<std::string> usable;
  for (const auto& id : laws) {
    if (auto reason = inapplicable_reason(inst, id)) {
      outcome.remarks.push_back("skipped " + id + ": " + *reason);
    } else {
      usable.push_back(id);
    }
  }
  if (usable.empty()) {
    outcome.remarks.clear();
    for (const auto& id : laws) {
      CheckReport r = check_law(inst, id, tuples.empty() ? Sizes{} : tuples.front(), config.budget);
      outcome.reports.push_back(std::move(r));
    }
    outcome.exit_code = 3;
    return outcome;
  }
  if (config.budget.mode == Mode::Exhaustive && !inst.m().enumerable()) {
    throw NotEnumerable(inst.name + " is not enumerable; use --mode sampled");
  }
  for (const auto& id : usable) {
    std::vector<std::vector<std::pair<std::string, std::size_t>>> seen;
    for (const auto& t : tuples) {
      auto projected = law_sizes(id, t);
      if (std::find(seen.begin(), seen.end(), projected) != seen.end()) continue;
      seen.push_back(projected);
      try {
        outcome.reports.push_back(check_law(inst, id, t, config.budget));
      } catch (const BudgetExceeded& err) {
        if (!config.skip_over_budget) throw;
        outcome.remarks.push_back("skipped " + id + " at " + std::to_string(t.x) + "," +
                                  std::to_string(t.y) + "," + std::to_string(t.z) + ": " +
                                  err.what());
      }
    }
  }
  for (const auto& r : outcome.reports) {
    if (r.status == Status::Fail) outcome.exit_code = 1;
  }
  return outcome;
}

nlohmann::ordered_json detail::report_json(const CheckReport& report, bool timing) {
  nlohmann::ordered_json j;
  j["law"] = report.law;
  j["monad"] = report.monad;
  nlohmann::ordered_json sizes = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.sizes) sizes[k] = v;
  j["sizes"] = sizes;
  j["mode"] = mode_name(report.mode);
  if (report.mode == Mode::Sampled) j["seed"] = report.seed;
  j["cases"] = report.cases;
  j["premiseFiltered"] = report.premise_filtered;
  j["status"] = status_name(report.status);
  j["failureCount"] = report.failure_count;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    nlohmann::ordered_json jf;
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const auto& w : f.witnesses) {
      ws.push_back({{"slot", w.slot}, {"kind", w.kind}, {"dom", w.dom}, {"cod", w.cod},
                    {"literal", w.literal}});
    }
    jf["witnesses"] = ws;
    if (f.error.empty()) {
      jf["lhs"] = f.lhs;
      jf["rhs"] = f.rhs;
    } else {
      jf["error"] = f.error;
    }
    failures.push_back(jf);
  }
  j["failures"] = failures;
  if (!report.note.empty()) j["note"] = report.note;
  if (timing) j["wallTimeMs"] = report.wall_ms;
  return j;
}

std::string report_line(const CheckReport& report, bool timing) {
  return detail::report_json(report, timing).dump();
}

}  // namespace iterlab
