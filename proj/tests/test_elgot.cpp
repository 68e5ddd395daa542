#include <doctest.h>

#include "iterlab/elgot.hpp"
#include "iterlab/errors.hpp"
#include "iterlab/monads.hpp"

using namespace iterlab;

namespace {

Mor fix_step(const Monad& m, const Mor& f, const Mor& g) {
  return compose(m, copair(eta(m, g.cod), g), f);
}

// f† is a fixpoint, lies below every other fixpoint, and the functional is
// monotone, over every f : X → T(Y+X) and g : X → TY at the given sizes.
void lfp_properties(MonadPtr m, std::size_t x, std::size_t y) {
  auto e = standard_elgot(m);
  KleisliSpace fs(*m, x, y + x);
  auto gs = enumerate_kleisli(*m, x, y);
  for (std::uint64_t i = 0; i < fs.count(); ++i) {
    Mor f = fs.at(i);
    Mor fd = dagger(e, f);
    REQUIRE(equal(*m, fix_step(*m, f, fd), fd));
    for (const auto& g : gs) {
      if (equal(*m, fix_step(*m, f, g), g)) REQUIRE(leq(*m, fd, g));
    }
    for (const auto& g1 : gs) {
      for (const auto& g2 : gs) {
        if (leq(*m, g1, g2)) REQUIRE(leq(*m, fix_step(*m, f, g1), fix_step(*m, f, g2)));
      }
    }
  }
}

}  // namespace

TEST_CASE("maybe iteration examples") {
  auto m = make_maybe();
  auto e = standard_elgot(m);
  Mor loop = inr_eta(*m, 1, 1);
  CHECK(format_mor(*m, dagger(e, loop)) == "0 -> bot");
  Mor exit = parse_mor(*m, "0 -> inl 0", 2);
  CHECK(format_mor(*m, dagger(e, exit)) == "0 -> inl 0");
  Mor chain = parse_mor(*m, "0 -> inl 3 ; 1 -> inl 1 ; 2 -> bot", 5);
  CHECK(format_mor(*m, dagger(e, chain)) == "0 -> inl 1 ; 1 -> inl 1 ; 2 -> bot");
}

TEST_CASE("subdist geometric loop converges to the Dirac exit") {
  auto m = make_subdist();
  auto e = standard_elgot(m);
  Mor f = parse_mor(*m, "0 -> 0:0.5 + 1:0.5", 2);
  Mor fd = dagger(e, f);
  CHECK(weight(fd[0], 0) == doctest::Approx(1.0).epsilon(1e-6));
  Mor lossy = parse_mor(*m, "0 -> 0:0.25 + 1:0.5", 2);
  CHECK(weight(dagger(e, lossy)[0], 0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("subdist iteration reports non-convergence with a residual") {
  auto m = make_subdist();
  auto e = standard_elgot(m);
  Mor slow = parse_mor(*m, "0 -> 0:0.000001 + 1:0.999999", 2);
  try {
    dagger(e, slow);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& err) {
    CHECK(err.residual() > 0.0);
  }
}

TEST_CASE("delta is constant bottom") {
  for (auto m : {make_maybe(), make_exception(2, 1), make_powerset(), make_plotkin(),
                 make_pstate(2), make_ndstate(2), make_ndwriter(Monoid::cyclic(2)),
                 make_subdist(), make_resumption_in(2, 4)}) {
    auto e = standard_elgot(m);
    for (std::size_t x = 0; x <= 2; ++x) {
      for (std::size_t y = 0; y <= 2; ++y) {
        CHECK(equal(*m, delta(e, x, y), constant_bottom(*m, x, y)));
      }
    }
  }
  auto ps = make_pstate(2);
  CHECK(format_mor(*ps, delta(standard_elgot(ps), 1, 1)) == "0 -> [s0: bot, s1: bot]");
  auto pw = make_powerset();
  CHECK(format_mor(*pw, delta(standard_elgot(pw), 1, 1)) == "0 -> {}");
}

TEST_CASE("least fixpoint properties on finite orders") {
  lfp_properties(make_maybe(), 2, 2);
  lfp_properties(make_exception(2, 0), 2, 1);
  lfp_properties(make_powerset(), 2, 1);
  lfp_properties(make_plotkin(), 1, 2);
  lfp_properties(make_pstate(2), 1, 1);
}

TEST_CASE("resumption iteration unfolds to the fuel") {
  auto m = make_resumption_out(2, 3);
  auto e = standard_elgot(m);
  Mor f = parse_mor(*m, "0 -> out 1 (ret 1)", 2);
  CHECK(format_mor(*m, dagger(e, f)) == "0 -> out 1 (out 1 (out 1 (?)))");
  Mor silent = parse_mor(*m, "0 -> ret 1", 2);
  CHECK(format_mor(*m, dagger(e, silent)) == "0 -> bot");
}

TEST_CASE("no order, no iteration") {
  struct Bare : Monad {
    std::string name() const override { return "bare"; }
    Value unit(std::size_t, std::size_t x) const override { return Value{std::int64_t(x)}; }
    Value extend(const Mor& f, const Value& v) const override { return f[std::size_t(v[0])]; }
    bool valid(std::size_t, const Value&) const override { return true; }
    std::vector<Value> enumerate(std::size_t) const override { return {}; }
    std::string format(std::size_t, const Value&) const override { return ""; }
    Value parse(std::size_t, Scanner&) const override { return {}; }
  };
  CHECK_THROWS_AS(standard_elgot(std::make_shared<Bare>()), Inapplicable);
}
