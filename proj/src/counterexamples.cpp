#include "iterlab/counterexamples.hpp"

#include <algorithm>
#include <chrono>

#include "iterlab/elgot.hpp"
#include "iterlab/errors.hpp"
#include "iterlab/monads.hpp"
#include "report_json.hpp"

namespace iterlab {

namespace {

// ------------------------------------------------------- retract monad
//
// T n = n×(n+1)+1 with ⋆ encoded as -1 and (a,b) as a·(n+1)+b, where b = n
// stands for ⊥ in the second component. T_E n = T(n+E).

constexpr std::int64_t kStar = -1;

struct Pair {
  std::size_t a;
  std::size_t b;
};

std::int64_t encode(std::size_t a, std::size_t b, std::size_t m) {
  return static_cast<std::int64_t>(a * (m + 1) + b);
}

Pair decode(std::int64_t v, std::size_t m) {
  auto u = static_cast<std::size_t>(v);
  return {u / (m + 1), u % (m + 1)};
}

class RetractMonad final : public Monad {
 public:
  explicit RetractMonad(std::size_t exceptions) : e_(exceptions) {}

  std::string name() const override { return "retract:E=" + std::to_string(e_); }

  Value unit(std::size_t n, std::size_t x) const override {
    return Value{encode(x, x, n + e_)};
  }

  Value extend(const Mor& f, const Value& v) const override {
    if (v[0] == kStar) return v;
    const std::size_t n = f.dom, y = f.cod, mx = n + e_, my = y + e_;
    auto component = [&](std::size_t elem, bool first) -> std::size_t {
      if (elem >= n) return y + (elem - n);
      const Value& fv = f[elem];
      if (fv[0] == kStar) return my;
      Pair p = decode(fv[0], my);
      return first ? p.a : p.b;
    };
    Pair p = decode(v[0], mx);
    std::size_t a = component(p.a, true);
    if (a == my) return Value{kStar};
    std::size_t b = p.b == mx ? my : component(p.b, false);
    return Value{encode(a, b, my)};
  }

  bool valid(std::size_t n, const Value& v) const override {
    const std::size_t m = n + e_;
    return v.size() == 1 && v[0] >= kStar && v[0] < static_cast<std::int64_t>(m * (m + 1));
  }

  std::vector<Value> enumerate(std::size_t n) const override {
    const std::size_t m = n + e_;
    std::vector<Value> out{Value{kStar}};
    for (std::size_t c = 0; c < m * (m + 1); ++c) out.push_back(Value{static_cast<std::int64_t>(c)});
    return out;
  }

  std::string format(std::size_t n, const Value& v) const override {
    if (v[0] == kStar) return "*";
    const std::size_t m = n + e_;
    Pair p = decode(v[0], m);
    return "(" + element(n, p.a) + ", " + (p.b == m ? std::string("bot") : element(n, p.b)) + ")";
  }

  Value parse(std::size_t n, Scanner& in) const override {
    const std::size_t m = n + e_;
    if (in.accept("*")) return Value{kStar};
    in.expect("(");
    std::size_t a = parse_element(n, in);
    in.expect(",");
    std::size_t b = in.accept_word("bot") ? m : parse_element(n, in);
    in.expect(")");
    return Value{encode(a, b, m)};
  }

  std::size_t exceptions() const { return e_; }

  bool has_order() const override { return true; }
  Value bottom(std::size_t) const override { return Value{kStar}; }
  bool leq(const Value& a, const Value& b) const override {
    return a[0] == kStar || a == b;
  }
  std::string order_name() const override { return "flat, bottom *"; }

  std::string note() const override {
    return "quotient of reader-of-maybe through its canonical section";
  }

 private:
  std::string element(std::size_t n, std::size_t i) const {
    return i < n ? "inl " + std::to_string(i) : "inr " + std::to_string(i - n);
  }
  std::size_t parse_element(std::size_t n, Scanner& in) const {
    if (in.accept_word("inl")) return in.index(n);
    if (!in.accept_word("inr")) in.fail("expected 'inl INT', 'inr INT' or 'bot'");
    return n + in.index(e_);
  }

  std::size_t e_;
};

// ------------------------------------------------------------ fixtures

Instance custom(std::string name, MonadPtr m, Iteration it, std::string note) {
  Instance inst;
  inst.name = std::move(name);
  inst.monad = m;
  inst.elgot = ElgotInstance{m, std::move(it), note};
  inst.note = std::move(note);
  return inst;
}

std::vector<Sizes> up_to(std::size_t x, std::size_t y, std::size_t z) {
  std::vector<Sizes> out;
  for (std::size_t a = 1; a <= x; ++a) {
    for (std::size_t b = 1; b <= y; ++b) {
      for (std::size_t c = 1; c <= z; ++c) out.push_back(Sizes{a, b, c});
    }
  }
  return out;
}

Mor parse_at(const Monad& m, std::string_view text, std::size_t dom, std::size_t cod) {
  Mor f = parse_mor(m, text, cod);
  if (f.dom != dom) throw ShapeError("fixture literal has the wrong domain");
  return f;
}

Fixture fixpoint_fixture() {
  MonadPtr m = make_ndwriter(Monoid::satnat(3));
  Iteration it = [m](const Mor& f) {
    const std::size_t y = f.cod - f.dom;
    return compose(*m, copair(eta(*m, y), constant_bottom(*m, f.dom, y)), f);
  };
  Fixture fx;
  fx.name = "fixpoint";
  fx.summary = "one-step unfolding on nondeterministic writer: natural and uniform, no fixpoint";
  fx.instance = custom("ndwriter:M=satnat3 with one-step iteration", m, it,
                       "f† = [η, !]·f with ! the empty set");
  fx.matrix = {{"EL-Fix", Expect::MustFail, {Sizes{1, 1, 1}}},
               {"EL-Nat", Expect::MustPass, {Sizes{1, 1, 1}}},
               {"EL-Cod", Expect::MustPass, {Sizes{1, 1, 1}}},
               {"EL-Uni", Expect::MustPass, {Sizes{1, 1, 1}}}};
  fx.displayed = [](const Instance& inst) {
    const Monad& m = inst.m();
    Mor f = parse_at(m, "0 -> {(1,0),(1,1)}", 1, 2);
    Mor fd = dagger(*inst.elgot, f);
    Mor unfolded = compose(m, copair(eta(m, 1), fd), f);
    bool natural = true;
    for (std::size_t a = 1; a <= 2; ++a) {
      for (std::size_t b = 1; b <= 2; ++b) {
        for (const auto& h : enumerate_base(a, b)) {
          natural = natural && m.equal(map_value(m, h, m.bottom(a)), m.bottom(b));
        }
      }
    }
    return std::vector<Displayed>{
        {"Th·p = p for all h at sizes ≤ 2", "holds", natural ? "holds" : "fails"},
        {"f", "0 -> {(1,0),(1,1)}", format_mor(m, f)},
        {"f†", "0 -> {(1,0)}", format_mor(m, fd)},
        {"[η, f†]·f", "0 -> {(1,0),(2,0)}", format_mor(m, unfolded)}};
  };
  return fx;
}

Fixture naturality_fixture() {
  MonadPtr m = make_powerset();
  Iteration it = [m](const Mor& f) {
    const std::size_t y = f.cod - f.dom;
    Value all{static_cast<std::int64_t>((std::uint64_t{1} << y) - 1)};
    return Mor{f.dom, y, std::vector<Value>(f.dom, all)};
  };
  Fixture fx;
  fx.name = "naturality";
  fx.summary = "constant full-set iteration on powerset: codiagonal and uniform, not natural";
  fx.instance = custom("powerset with full-set iteration", m, it, "f† x = Y for every x");
  fx.matrix = {{"EL-Nat", Expect::MustFail, up_to(2, 2, 2)},
               {"EL-Cod", Expect::MustPass, up_to(2, 2, 2)},
               {"EL-Uni", Expect::MustPass, up_to(2, 2, 2)},
               {"EL-Fix", Expect::ReportOnly, up_to(2, 2, 2)}};
  fx.displayed = [](const Instance& inst) {
    const Monad& m = inst.m();
    Mor f = parse_at(m, "0 -> {0}", 1, 2);
    Mor g = parse_at(m, "0 -> {}", 1, 1);
    Mor lhs = compose(m, g, dagger(*inst.elgot, f));
    Mor rhs = dagger(*inst.elgot, compose(m, copair(compose(m, inl_eta(m, 1, 1), g),
                                                    inr_eta(m, 1, 1)),
                                          f));
    return std::vector<Displayed>{{"g·f†", "0 -> {}", format_mor(m, lhs)},
                                  {"([ηinl·g, ηinr]·f)†", "0 -> {0}", format_mor(m, rhs)}};
  };
  return fx;
}

Fixture uniformity_fixture() {
  MonadPtr m = make_exception(2, 0);
  MonadPtr at_one = make_exception(2, 0), elsewhere = make_exception(2, 1);
  Iteration it = [at_one, elsewhere](const Mor& f) {
    return least_fixpoint(f.dom == 1 ? *at_one : *elsewhere, f);
  };
  Fixture fx;
  fx.name = "uniformity";
  fx.summary = "least fixpoints with a bottom depending on |X|: natural with fixpoints, not uniform";
  fx.instance = custom("exception:E=2 with size-dependent divergence", m, it,
                       "divergence is raise 0 on singleton X and raise 1 otherwise");
  fx.matrix = {{"EL-Uni", Expect::MustFail, up_to(3, 2, 2)},
               {"EL-Fix", Expect::MustPass, up_to(3, 2, 2)},
               {"EL-Nat", Expect::MustPass, up_to(3, 2, 2)},
               {"EL-Cod", Expect::MustPass, up_to(3, 2, 2)}};
  fx.displayed = [](const Instance& inst) {
    const Monad& m = inst.m();
    Mor f = inr_eta(m, 1, 3);
    Mor g = inr_eta(m, 1, 1);
    Mor gh = compose(m, dagger(*inst.elgot, g), pure(m, terminal(3)));
    return std::vector<Displayed>{
        {"f†", "0 -> raise 1 ; 1 -> raise 1 ; 2 -> raise 1", format_mor(m, dagger(*inst.elgot, f))},
        {"g†·h", "0 -> raise 0 ; 1 -> raise 0 ; 2 -> raise 0", format_mor(m, gh)}};
  };
  return fx;
}

Fixture strong_uniformity_fixture() {
  MonadPtr m = make_retract_exception(1);
  Fixture fx;
  fx.name = "strong-uniformity";
  fx.summary = "retract of reader-of-maybe with one exception: uniform, not strongly uniform";
  fx.instance = custom("retract:E=1", m, retract_elgot(m).iterate,
                       "least fixpoint above * in the flat order");
  std::vector<Sizes> small{Sizes{1, 1, 1}, Sizes{2, 1, 1}};
  fx.matrix = {{"MON-Unit-L", Expect::ReportOnly, small},
               {"MON-Unit-R", Expect::ReportOnly, small},
               {"MON-Assoc", Expect::ReportOnly, {Sizes{1, 1, 1}}},
               {"EL-Fix", Expect::MustPass, small},
               {"EL-Nat", Expect::MustPass, small},
               {"EL-Cod", Expect::MustPass, small},
               {"EL-Uni", Expect::MustPass, small},
               {"EL-SUni", Expect::MustFail, {Sizes{1, 1, 1}}}};
  fx.displayed = [](const Instance& inst) {
    const Monad& m = inst.m();
    const ElgotInstance& e = *inst.elgot;
    Mor h = parse_at(m, "0 -> (inl 0, inr 0)", 1, 1);
    Mor f = parse_at(m, "0 -> (inr 0, inl 1)", 1, 2);
    Mor fd = dagger(e, f);
    Mor fdh = compose(m, fd, h);
    Mor dx = delta(e, 1, 1);
    bool delta_ok = equal(m, compose(m, dx, h), dx);
    Mor route = copair(inl_eta(m, 1, 1), compose(m, inr_eta(m, 1, 1), h));
    bool step_ok = equal(m, compose(m, f, h), compose(m, route, f));
    return std::vector<Displayed>{
        {"h", "0 -> (inl 0, inr 0)", format_mor(m, h)},
        {"f", "0 -> (inr 0, inl 1)", format_mor(m, f)},
        {"δ·h = δ", "holds", delta_ok ? "holds" : "fails"},
        {"f·h = [ηinl, ηinr·h]·f", "holds", step_ok ? "holds" : "fails"},
        {"f†", "0 -> (inr 0, bot)", format_mor(m, fd)},
        {"f†·h", "0 -> (inr 0, inr 0)", format_mor(m, fdh)},
        {"ρ congruence violations at sizes ≤ 2", "0",
         std::to_string(retract_congruence_violations(2))}};
  };
  return fx;
}

}  // namespace

std::string_view expect_name(Expect expect) {
  switch (expect) {
    case Expect::MustPass: return "mustPass";
    case Expect::MustFail: return "mustFail";
    case Expect::ReportOnly: return "reportOnly";
  }
  return "reportOnly";
}

MonadPtr make_retract_exception(std::size_t exceptions) {
  return std::make_shared<RetractMonad>(exceptions);
}

ElgotInstance retract_elgot(MonadPtr retract) {
  if (!dynamic_cast<const RetractMonad*>(retract.get())) {
    throw ShapeError("retract_elgot needs a retract monad");
  }
  ElgotInstance out;
  out.monad = retract;
  out.iterate = [retract](const Mor& f) { return least_fixpoint(*retract, f); };
  out.note = "least fixpoint above *";
  return out;
}

std::size_t retract_congruence_violations(std::size_t max_size) {
  // Values of S n = (n+1)^2 as pairs with n standing for ⊥.
  auto rho = [](Pair p, std::size_t n) -> std::int64_t {
    return p.a == n ? kStar : encode(p.a, p.b, n);
  };
  auto pairs = [](std::size_t n) {
    std::vector<Pair> out;
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; b <= n; ++b) out.push_back({a, b});
    }
    return out;
  };
  std::size_t violations = 0;
  for (std::size_t nx = 1; nx <= max_size; ++nx) {
    for (std::size_t ny = 1; ny <= max_size; ++ny) {
      const auto sx = pairs(nx), sy = pairs(ny);
      // All f : X → SY in mixed radix.
      std::vector<std::vector<Pair>> fs{{}};
      for (std::size_t x = 0; x < nx; ++x) {
        std::vector<std::vector<Pair>> next;
        for (const auto& f : fs) {
          for (const auto& v : sy) {
            next.push_back(f);
            next.back().push_back(v);
          }
        }
        fs = std::move(next);
      }
      auto ext = [&](const std::vector<Pair>& f, Pair s) {
        return Pair{s.a == nx ? ny : f[s.a].a, s.b == nx ? ny : f[s.b].b};
      };
      auto image = [&](const std::vector<Pair>& f) {
        std::vector<std::int64_t> out;
        for (const auto& v : f) out.push_back(rho(v, ny));
        return out;
      };
      for (const auto& f : fs) {
        for (const auto& s : sx) {
          for (const auto& t : sx) {
            if (rho(s, nx) == rho(t, nx) && rho(ext(f, s), ny) != rho(ext(f, t), ny)) ++violations;
          }
        }
        for (const auto& g : fs) {
          if (image(f) != image(g)) continue;
          for (const auto& s : sx) {
            if (rho(ext(f, s), ny) != rho(ext(g, s), ny)) ++violations;
          }
        }
      }
    }
  }
  return violations;
}

std::vector<std::string> fixture_names() {
  return {"fixpoint", "naturality", "uniformity", "strong-uniformity"};
}

Fixture make_fixture(std::string_view name) {
  if (name == "fixpoint") return fixpoint_fixture();
  if (name == "naturality") return naturality_fixture();
  if (name == "uniformity") return uniformity_fixture();
  if (name == "strong-uniformity") return strong_uniformity_fixture();
  std::string names;
  for (const auto& n : fixture_names()) names += (names.empty() ? "" : ", ") + n;
  throw ParseError("unknown fixture '" + std::string(name) + "'; expected one of " + names);
}

FixtureResult run_fixture(const Fixture& fixture, const Budget& budget) {
  FixtureResult out;
  out.name = fixture.name;
  for (const auto& ex : fixture.matrix) {
    LawVerdict v;
    v.expectation = ex;
    std::size_t fails = 0;
    for (const auto& s : ex.sizes) {
      v.reports.push_back(check_law(fixture.instance, ex.law, s, budget));
      if (v.reports.back().status == Status::Fail) ++fails;
    }
    v.observed = fails == 0 ? "pass" : fails == v.reports.size() ? "fail" : "mixed";
    v.violated = (ex.expect == Expect::MustPass && fails > 0) ||
                 (ex.expect == Expect::MustFail && fails == 0);
    if (v.violated) out.ok = false;
    out.laws.push_back(std::move(v));
  }
  if (fixture.displayed) {
    out.displayed = fixture.displayed(fixture.instance);
    for (const auto& d : out.displayed) {
      if (!d.ok()) out.ok = false;
    }
  }
  return out;
}

std::vector<std::string> fixture_report_lines(const FixtureResult& result, bool timing) {
  std::vector<std::string> lines;
  for (const auto& v : result.laws) {
    for (const auto& r : v.reports) {
      nlohmann::ordered_json j;
      j["fixture"] = result.name;
      j["expect"] = expect_name(v.expectation.expect);
      nlohmann::ordered_json body = detail::report_json(r, timing);
      for (const auto& [key, value] : body.items()) j[key] = value;
      lines.push_back(j.dump());
    }
  }
  nlohmann::ordered_json summary;
  summary["fixture"] = result.name;
  nlohmann::ordered_json laws = nlohmann::ordered_json::array();
  for (const auto& v : result.laws) {
    laws.push_back({{"law", v.expectation.law},
                    {"expect", expect_name(v.expectation.expect)},
                    {"observed", v.observed},
                    {"violated", v.violated}});
  }
  summary["laws"] = laws;
  nlohmann::ordered_json shown = nlohmann::ordered_json::array();
  for (const auto& d : result.displayed) {
    shown.push_back({{"what", d.what}, {"expected", d.expected}, {"actual", d.actual},
                     {"ok", d.ok()}});
  }
  summary["displayed"] = shown;
  summary["ok"] = result.ok;
  lines.push_back(summary.dump());
  return lines;
}

}  // namespace iterlab
