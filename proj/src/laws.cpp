#include "iterlab/laws.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "iterlab/errors.hpp"
#include "law_defs.hpp"

namespace iterlab {

using detail::Case;
using detail::Ctx;
using detail::LawDef;
using detail::Slot;
using detail::SlotKind;

std::string_view mode_name(Mode mode) {
  return mode == Mode::Exhaustive ? "exhaustive" : "sampled";
}

std::string_view status_name(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inapplicable: return "inapplicable";
  }
  return "";
}

Instance standard_instance(MonadPtr m) {
  Instance inst;
  inst.name = m->name();
  inst.monad = m;
  if (m->has_order()) inst.elgot = standard_elgot(m);
  if (m->has_join()) inst.kleene = standard_kleene(m);
  return inst;
}

const std::vector<LawInfo>& law_catalog() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> out;
    for (const auto& d : detail::law_defs()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

const LawInfo& law_info(std::string_view id) { return detail::law_def(id).info; }

bool is_law(std::string_view id) {
  const auto& defs = detail::law_defs();
  return std::any_of(defs.begin(), defs.end(), [&](const LawDef& d) { return d.info.id == id; });
}

std::vector<std::string> suite_names() {
  return {"monad", "elgot", "kleene", "while", "translations", "all"};
}

std::vector<std::string> select_laws(std::string_view selection) {
  std::vector<std::string> out;
  if (auto comma = selection.find(','); comma != std::string_view::npos) {
    for (auto part : {selection.substr(0, comma), selection.substr(comma + 1)}) {
      for (auto& id : select_laws(part)) {
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(std::move(id));
      }
    }
    return out;
  }
  if (is_law(selection)) {
    out.emplace_back(selection);
    return out;
  }
  const auto suites = suite_names();
  if (std::find(suites.begin(), suites.end(), selection) == suites.end()) {
    std::string vocab;
    for (const auto& s : suites) vocab += (vocab.empty() ? "" : ", ") + s;
    throw ParseError("unknown law or suite '" + std::string(selection) + "'; suites are " + vocab +
                     ", or a law id such as EL-Fix");
  }
  for (const auto& info : law_catalog()) {
    if (selection == "all" || info.suite == selection) out.push_back(info.id);
  }
  return out;
}

std::optional<std::string> inapplicable_reason(const Instance& inst, std::string_view law) {
  const auto needs = static_cast<unsigned>(law_info(law).needs);
  if ((needs & static_cast<unsigned>(Needs::Kleene)) && !inst.kleene) {
    return "inapplicable: no semilattice on " + inst.name;
  }
  if ((needs & static_cast<unsigned>(Needs::Elgot)) && !inst.elgot) {
    return "inapplicable: no iteration on " + inst.name;
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::size_t>> law_sizes(std::string_view law, const Sizes& s) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (char c : law_info(law).dims) {
    if (c == 'X') out.emplace_back("X", s.x);
    if (c == 'Y') out.emplace_back("Y", s.y);
    if (c == 'Z') out.emplace_back("Z", s.z);
  }
  return out;
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

bool enumerable_slot(const Instance& inst, const Slot& slot) {
  if (slot.kind == SlotKind::Base) return true;
  if (slot.kind == SlotKind::Decision && inst.pure_decisions) return true;
  return inst.m().enumerable();
}

std::uint64_t point_range(const Instance& inst, const Slot& slot, std::size_t cod) {
  if (slot.kind == SlotKind::Base) return cod;
  if (slot.kind == SlotKind::Decision && inst.pure_decisions) return cod;
  return inst.m().space_size(cod);
}

std::string join_notes(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

struct Partial {
  std::uint64_t evaluated = 0;
  std::uint64_t rejected = 0;
  std::uint64_t failed = 0;
  std::vector<Failure> failures;
};

class Runner {
 public:
  Runner(const Instance& inst, const LawDef& def, const Sizes& sizes, const Budget& budget)
      : inst_(inst), def_(def), ctx_{inst, inst.m(), sizes}, budget_(budget) {
    for (const auto& slot : def.slots) {
      doms_.push_back(slot.dom.eval(sizes));
      cods_.push_back(slot.cod.eval(sizes));
    }
  }

  const std::vector<Value>& candidates(std::size_t i) {
    const Slot& slot = def_.slots[i];
    const std::size_t cod = cods_[i];
    const int tag = slot.kind == SlotKind::Base ? 0
                    : (slot.kind == SlotKind::Decision && inst_.pure_decisions) ? 1
                                                                                : 2;
    auto key = std::make_pair(tag, cod);
    auto it = spaces_.find(key);
    if (it != spaces_.end()) return it->second;
    std::vector<Value> vals;
    if (tag == 0) {
      for (std::size_t j = 0; j < cod; ++j) vals.push_back(Value{static_cast<std::int64_t>(j)});
    } else if (tag == 1) {
      for (std::size_t j = 0; j < cod; ++j) vals.push_back(inst_.m().unit(cod, j));
    } else {
      vals = inst_.m().enumerate(cod);
    }
    return spaces_.emplace(key, std::move(vals)).first->second;
  }

  void prepare_exhaustive() {
    std::uint64_t unfiltered = 1;
    for (std::size_t i = 0; i < def_.slots.size(); ++i) {
      const Slot& slot = def_.slots[i];
      if (!enumerable_slot(inst_, slot)) {
        throw NotEnumerable(inst_.name + " is not enumerable; use --mode sampled");
      }
      std::uint64_t range = sat_pow(point_range(inst_, slot, cods_[i]), doms_[i]);
      if (range > budget_.slot_cap) {
        throw BudgetExceeded("slot " + slot.name + " of " + def_.info.id + " ranges over " +
                             std::to_string(range) + " morphisms; the per-slot cap is " +
                             std::to_string(budget_.slot_cap));
      }
      if (!slot.filter) unfiltered = sat_mul(unfiltered, range);
      candidates(i);
    }
    if (unfiltered > budget_.case_cap) {
      throw BudgetExceeded(def_.info.id + " needs " + std::to_string(unfiltered) +
                           " unfiltered cases; the cap is " + std::to_string(budget_.case_cap));
    }
  }

  // Candidate lists per point of slot i, filtered against the earlier slots.
  // Returns false if some point has no candidate.
  bool point_lists(std::size_t i, const Case& c, std::vector<std::vector<Value>>& store,
                   std::vector<const std::vector<Value>*>& lists) {
    const Slot& slot = def_.slots[i];
    const auto& all = candidates(i);
    lists.assign(doms_[i], &all);
    if (!slot.filter) return true;
    store.assign(doms_[i], {});
    for (std::size_t x = 0; x < doms_[i]; ++x) {
      for (const auto& v : all) {
        if (slot.filter(ctx_, c, x, v)) store[x].push_back(v);
      }
      if (store[x].empty()) return false;
      lists[x] = &store[x];
    }
    return true;
  }

  void evaluate(Case& c, Partial& out) {
    ++out.evaluated;
    Failure fail;
    bool ok = true;
    try {
      auto [lhs, rhs] = def_.body(ctx_, c);
      ok = inst_.tol > 0.0 ? close(inst_.m(), lhs, rhs, inst_.tol) : equal(inst_.m(), lhs, rhs);
      if (!ok && out.failures.size() < budget_.max_failures) {
        fail.lhs = format_mor(inst_.m(), lhs);
        fail.rhs = format_mor(inst_.m(), rhs);
      }
    } catch (const Error& err) {
      ok = false;
      fail.error = err.what();
    }
    if (ok) return;
    ++out.failed;
    if (out.failures.size() >= budget_.max_failures) return;
    for (std::size_t i = 0; i < def_.slots.size(); ++i) {
      const Slot& slot = def_.slots[i];
      Witness w;
      w.slot = slot.name;
      w.dom = doms_[i];
      w.cod = cods_[i];
      w.kind = slot.kind == SlotKind::Base       ? "base"
               : slot.kind == SlotKind::Decision ? "decision"
                                                 : "kleisli";
      w.literal = slot.kind == SlotKind::Base ? format_base(c.base(i)) : format_mor(inst_.m(), c[i]);
      fail.witnesses.push_back(std::move(w));
    }
    out.failures.push_back(std::move(fail));
  }

  // Enumerates slots i.. given the earlier ones.
  void descend(std::size_t i, Case& c, Partial& out) {
    if (i == def_.slots.size()) {
      evaluate(c, out);
      return;
    }
    std::vector<std::vector<Value>> store;
    std::vector<const std::vector<Value>*> lists;
    if (!point_lists(i, c, store, lists)) return;
    const SlotKind kind = def_.slots[i].kind;
    const std::size_t dom = doms_[i];
    c.shape(i, dom, cods_[i], kind);
    std::vector<std::size_t> digit(dom, 0);
    for (std::size_t x = 0; x < dom; ++x) c.set_point(i, x, (*lists[x])[0], kind);
    for (;;) {
      descend(i + 1, c, out);
      std::size_t x = 0;
      while (x < dom && ++digit[x] == lists[x]->size()) {
        digit[x] = 0;
        c.set_point(i, x, (*lists[x])[0], kind);
        ++x;
      }
      if (x == dom) break;
      c.set_point(i, x, (*lists[x])[digit[x]], kind);
    }
  }

  // Number of combinations of the first slot, which is split across jobs.
  std::uint64_t top_count(std::vector<std::vector<Value>>& store,
                          std::vector<const std::vector<Value>*>& lists) {
    Case empty(def_.slots.size());
    if (!point_lists(0, empty, store, lists)) return 0;
    std::uint64_t n = 1;
    for (const auto* l : lists) n *= l->size();
    return n;
  }

  void run_top_range(const std::vector<const std::vector<Value>*>& lists, std::uint64_t lo,
                     std::uint64_t hi, Partial& out) {
    Case c(def_.slots.size());
    const SlotKind kind = def_.slots[0].kind;
    const std::size_t dom = doms_[0];
    c.shape(0, dom, cods_[0], kind);
    std::vector<std::size_t> digit(dom, 0);
    std::uint64_t rest = lo;
    for (std::size_t x = 0; x < dom; ++x) {
      digit[x] = rest % lists[x]->size();
      rest /= lists[x]->size();
      c.set_point(0, x, (*lists[x])[digit[x]], kind);
    }
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      descend(1, c, out);
      std::size_t x = 0;
      while (x < dom && ++digit[x] == lists[x]->size()) {
        digit[x] = 0;
        c.set_point(0, x, (*lists[x])[0], kind);
        ++x;
      }
      if (x < dom) c.set_point(0, x, (*lists[x])[digit[x]], kind);
    }
  }

  std::optional<Mor> draw_slot(std::size_t i, const Case& c, Rng& rng) {
    const Slot& slot = def_.slots[i];
    if (slot.draw) return slot.draw(ctx_, c, rng);
    const std::size_t dom = doms_[i], cod = cods_[i];
    Mor mor{dom, cod, std::vector<Value>(dom)};
    const Monad& m = inst_.m();
    for (std::size_t x = 0; x < dom; ++x) {
      if (slot.kind == SlotKind::Base || (slot.kind == SlotKind::Decision && inst_.pure_decisions)) {
        if (cod == 0) return std::nullopt;
        std::uniform_int_distribution<std::size_t> pick(0, cod - 1);
        std::size_t j = pick(rng);
        mor[x] = slot.kind == SlotKind::Base ? Value{static_cast<std::int64_t>(j)} : m.unit(cod, j);
        if (slot.filter && !slot.filter(ctx_, c, x, mor[x])) {
          std::vector<Value> ok;
          for (const auto& v : candidates(i)) {
            if (slot.filter(ctx_, c, x, v)) ok.push_back(v);
          }
          if (ok.empty()) return std::nullopt;
          std::uniform_int_distribution<std::size_t> alt(0, ok.size() - 1);
          mor[x] = ok[alt(rng)];
        }
      } else if (!slot.filter) {
        mor[x] = m.sample(cod, rng);
      } else if (m.enumerable()) {
        std::vector<Value> ok;
        for (const auto& v : candidates(i)) {
          if (slot.filter(ctx_, c, x, v)) ok.push_back(v);
        }
        if (ok.empty()) return std::nullopt;
        std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
        mor[x] = ok[pick(rng)];
      } else {
        bool found = false;
        for (int attempt = 0; attempt < 64 && !found; ++attempt) {
          Value v = m.sample(cod, rng);
          if (slot.filter(ctx_, c, x, v)) {
            mor[x] = std::move(v);
            found = true;
          }
        }
        if (!found) return std::nullopt;
      }
    }
    return mor;
  }

  void run_samples(std::uint64_t lo, std::uint64_t hi, Partial& out) {
    Case c(def_.slots.size());
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      Rng rng = case_rng(budget_.seed, idx);
      bool ok = true;
      for (std::size_t i = 0; i < def_.slots.size() && ok; ++i) {
        auto mor = draw_slot(i, c, rng);
        if (!mor) {
          ok = false;
          break;
        }
        c.set(i, std::move(*mor), def_.slots[i].kind);
      }
      if (ok) {
        evaluate(c, out);
      } else {
        ++out.rejected;
      }
    }
  }

  const Instance& inst_;
  const LawDef& def_;
  Ctx ctx_;
  Budget budget_;
  std::vector<std::size_t> doms_;
  std::vector<std::size_t> cods_;
  std::map<std::pair<int, std::size_t>, std::vector<Value>> spaces_;
};

// Runs `work(lo, hi, partial)` over [0, total) in fixed chunks and folds the
// partial results in chunk order, so the outcome does not depend on `jobs`.
template <class Work>
Partial run_chunks(std::uint64_t total, unsigned jobs, std::size_t max_failures, Work work) {
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
  std::vector<Partial> parts(chunks);
  auto bounds = [&](std::uint64_t k) { return total / chunks * k + std::min(k, total % chunks); };
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      std::uint64_t k = next++;
      if (k >= chunks || failed) return;
      try {
        work(bounds(k), bounds(k + 1), parts[k]);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(chunks)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  Partial total_part;
  for (auto& p : parts) {
    total_part.evaluated += p.evaluated;
    total_part.rejected += p.rejected;
    total_part.failed += p.failed;
    for (auto& f : p.failures) {
      if (total_part.failures.size() < max_failures) total_part.failures.push_back(std::move(f));
    }
  }
  return total_part;
}

}  // namespace

std::uint64_t exhaustive_cases(const Instance& inst, std::string_view law, const Sizes& sizes) {
  const LawDef& def = detail::law_def(law);
  std::uint64_t total = 1;
  for (const auto& slot : def.slots) {
    total = sat_mul(total, sat_pow(point_range(inst, slot, slot.cod.eval(sizes)), slot.dom.eval(sizes)));
  }
  return total;
}

CheckReport check_law(const Instance& inst, std::string_view law, const Sizes& sizes,
                      const Budget& budget) {
  const LawDef& def = detail::law_def(law);
  CheckReport report;
  report.law = def.info.id;
  report.monad = inst.name;
  report.sizes = law_sizes(law, sizes);
  report.mode = budget.mode;
  report.seed = budget.mode == Mode::Sampled ? budget.seed : 0;
  if (auto reason = inapplicable_reason(inst, law)) {
    report.status = Status::Inapplicable;
    report.note = *reason;
    return report;
  }
  const auto start = std::chrono::steady_clock::now();
  Runner runner(inst, def, sizes, budget);
  Partial result;
  if (budget.mode == Mode::Exhaustive) {
    runner.prepare_exhaustive();
    report.cases = exhaustive_cases(inst, law, sizes);
    if (def.slots.empty()) {
      Case c(0);
      runner.evaluate(c, result);
    } else {
      std::vector<std::vector<Value>> store;
      std::vector<const std::vector<Value>*> lists;
      const std::uint64_t top = runner.top_count(store, lists);
      result = run_chunks(top, budget.jobs, budget.max_failures,
                          [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
                            runner.run_top_range(lists, lo, hi, out);
                          });
    }
    report.premise_filtered = report.cases - result.evaluated;
  } else {
    report.cases = budget.samples;
    for (std::size_t i = 0; i < def.slots.size(); ++i) {
      if (enumerable_slot(inst, def.slots[i])) runner.candidates(i);
    }
    result = run_chunks(budget.samples, budget.jobs, budget.max_failures,
                        [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
                          runner.run_samples(lo, hi, out);
                        });
    report.premise_filtered = result.rejected;
  }
  report.failure_count = result.failed;
  report.failures = std::move(result.failures);
  report.status = result.failed == 0 ? Status::Pass : Status::Fail;
  report.note = join_notes({inst.note, inst.m().note()});
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace iterlab
