#include <doctest.h>

#include <json.hpp>

#include "iterlab/counterexamples.hpp"
#include "iterlab/elgot.hpp"
#include "iterlab/errors.hpp"

using namespace iterlab;

namespace {

const LawVerdict& verdict(const FixtureResult& r, std::string_view law) {
  for (const auto& v : r.laws) {
    if (v.expectation.law == law) return v;
  }
  throw ParseError("no verdict for " + std::string(law));
}

const Displayed& shown(const FixtureResult& r, std::string_view what) {
  for (const auto& d : r.displayed) {
    if (d.what == what) return d;
  }
  throw ParseError("nothing displayed as " + std::string(what));
}

}  // namespace

TEST_CASE("fixture names resolve") {
  CHECK(fixture_names().size() == 4);
  for (const auto& n : fixture_names()) CHECK(make_fixture(n).name == n);
  CHECK_THROWS_AS(make_fixture("nope"), ParseError);
}

TEST_CASE("one-step unfolding has no fixpoint") {
  auto r = run_fixture(make_fixture("fixpoint"), Budget{});
  CHECK(r.ok);
  CHECK(verdict(r, "EL-Fix").observed == "fail");
  for (const char* law : {"EL-Nat", "EL-Cod", "EL-Uni"}) CHECK(verdict(r, law).observed == "pass");
  CHECK(shown(r, "f†").actual == "0 -> {(1,0)}");
  CHECK(shown(r, "[η, f†]·f").actual == "0 -> {(1,0),(2,0)}");
  CHECK(shown(r, "Th·p = p for all h at sizes ≤ 2").actual == "holds");
  const auto& fix = verdict(r, "EL-Fix").reports.at(0);
  REQUIRE_FALSE(fix.failures.empty());
  CHECK(fix.failures[0].witnesses.size() == 1);
}

TEST_CASE("full-set iteration is not natural") {
  auto r = run_fixture(make_fixture("naturality"), Budget{});
  CHECK(r.ok);
  CHECK(verdict(r, "EL-Nat").observed != "pass");
  CHECK(verdict(r, "EL-Cod").observed == "pass");
  CHECK(verdict(r, "EL-Uni").observed == "pass");
  CHECK(verdict(r, "EL-Fix").expectation.expect == Expect::ReportOnly);
  CHECK(verdict(r, "EL-Fix").reports.size() == 8);
  CHECK(shown(r, "g·f†").actual == "0 -> {}");
  CHECK(shown(r, "([ηinl·g, ηinr]·f)†").actual == "0 -> {0}");
}

TEST_CASE("size-dependent divergence breaks uniformity only") {
  auto r = run_fixture(make_fixture("uniformity"), Budget{});
  CHECK(r.ok);
  CHECK(verdict(r, "EL-Uni").observed != "pass");
  for (const char* law : {"EL-Fix", "EL-Nat", "EL-Cod"}) CHECK(verdict(r, law).observed == "pass");
  CHECK(shown(r, "f†").actual == "0 -> raise 1 ; 1 -> raise 1 ; 2 -> raise 1");
  CHECK(shown(r, "g†·h").actual == "0 -> raise 0 ; 1 -> raise 0 ; 2 -> raise 0");
}

TEST_CASE("retract values round-trip through the literal grammar") {
  auto m = make_retract_exception(1);
  for (std::size_t n = 0; n <= 2; ++n) {
    auto all = m->enumerate(n);
    // T(n+1) has (n+1)(n+2)+1 values.
    CHECK(all.size() == (n + 1) * (n + 2) + 1);
    for (const auto& v : all) {
      CHECK(m->valid(n, v));
      std::string text = m->format(n, v);
      Scanner in(text);
      CHECK(m->parse(n, in) == v);
    }
  }
  CHECK(m->format(1, m->unit(1, 0)) == "(inl 0, inl 0)");
}

TEST_CASE("retract unit laws hold exhaustively") {
  auto m = make_retract_exception(1);
  for (std::size_t x = 1; x <= 2; ++x) {
    for (std::size_t y = 1; y <= 2; ++y) {
      for (const auto& f : enumerate_kleisli(*m, x, y)) {
        CHECK(equal(*m, compose(*m, f, eta(*m, x)), f));
        CHECK(equal(*m, compose(*m, eta(*m, y), f), f));
      }
    }
  }
}

TEST_CASE("retraction is not a congruence in the morphism argument") {
  // S n = (n+1)^2 with the diagonal extension; ⊥ is n.
  const std::size_t X = 2, Y = 1, bot = Y;
  struct P {
    std::size_t a, b;
  };
  std::vector<P> f{{0, 0}, {bot, 0}}, g{{0, 0}, {bot, bot}};
  auto ext = [&](const std::vector<P>& k, P s) {
    return P{s.a == X ? bot : k[s.a].a, s.b == X ? bot : k[s.b].b};
  };
  // ρ identifies every pair with first component ⊥, so ρ∘f = ρ∘g.
  P s{0, 1};
  P lhs = ext(f, s), rhs = ext(g, s);
  CHECK(lhs.a == 0);
  CHECK(rhs.a == 0);
  CHECK(lhs.b != rhs.b);
  // A violation needs two distinct points to read from.
  CHECK(retract_congruence_violations(1) == 0);
  CHECK(retract_congruence_violations(2) > 0);
}

TEST_CASE("retract extension is not associative") {
  auto m = make_retract_exception(1);
  Mor f = parse_mor(*m, "0 -> (inr 0, inl 0)", 1);
  Mor g = parse_mor(*m, "0 -> (inl 0, inr 0)", 1);
  Mor h = parse_mor(*m, "0 -> *", 1);
  Mor left = compose(*m, h, compose(*m, g, f));
  Mor right = compose(*m, compose(*m, h, g), f);
  CHECK(format_mor(*m, left) == "0 -> (inr 0, inr 0)");
  CHECK(format_mor(*m, right) == "0 -> (inr 0, bot)");
}

TEST_CASE("strong uniformity fixture reproduces the separating values") {
  auto r = run_fixture(make_fixture("strong-uniformity"), Budget{});
  CHECK(shown(r, "f†").ok());
  CHECK(shown(r, "f†").actual == "0 -> (inr 0, bot)");
  CHECK(shown(r, "f†·h").actual == "0 -> (inr 0, inr 0)");
  CHECK(shown(r, "δ·h = δ").actual == "holds");
  CHECK(shown(r, "f·h = [ηinl, ηinr·h]·f").actual == "holds");
  CHECK(verdict(r, "EL-SUni").observed == "fail");
  CHECK_FALSE(verdict(r, "EL-SUni").violated);
  CHECK(verdict(r, "EL-Fix").observed == "pass");
  CHECK(verdict(r, "EL-Uni").observed == "pass");
  CHECK(verdict(r, "MON-Assoc").observed == "fail");
  // Broken associativity propagates to the laws that compose iterates.
  CHECK(verdict(r, "EL-Nat").violated);
  CHECK(verdict(r, "EL-Cod").violated);
  CHECK_FALSE(r.ok);
}

TEST_CASE("fixture report lines carry the expectation") {
  auto r = run_fixture(make_fixture("fixpoint"), Budget{});
  auto lines = fixture_report_lines(r);
  REQUIRE(lines.size() == 5);
  auto first = nlohmann::ordered_json::parse(lines.front());
  CHECK(first["fixture"] == "fixpoint");
  CHECK(first["expect"] == "mustFail");
  CHECK(first["law"] == "EL-Fix");
  auto last = nlohmann::ordered_json::parse(lines.back());
  CHECK(last["ok"] == true);
  CHECK(last["laws"].size() == 4);
}

TEST_CASE("fixture outcomes do not depend on the worker count") {
  Budget many;
  many.jobs = 4;
  auto a = fixture_report_lines(run_fixture(make_fixture("uniformity"), Budget{}));
  auto b = fixture_report_lines(run_fixture(make_fixture("uniformity"), many));
  CHECK(a == b);
}
