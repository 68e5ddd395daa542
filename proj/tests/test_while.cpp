#include <doctest.h>

#include "iterlab/monads.hpp"
#include "iterlab/while.hpp"

using namespace iterlab;

TEST_CASE("decision combinators") {
  auto m = make_maybe();
  const Monad& t = *m;
  Mor tt = dec_true(t, 2), ff = dec_false(t, 2);
  Mor p = parse_mor(t, "0 -> inl 1 ; 1 -> bot", 2);
  Mor q = parse_mor(t, "0 -> inl 0 ; 1 -> inl 0", 2);
  CHECK(equal(t, ite(t, tt, p, q), p));
  CHECK(equal(t, ite(t, ff, p, q), q));
  CHECK(equal(t, dec_not(t, tt), ff));
  CHECK(equal(t, dec_or(t, ff, tt), tt));
  auto e = standard_elgot(m);
  CHECK(equal(t, guard(e, tt), eta(t, 2)));
  CHECK(equal(t, guard(e, ff), delta(e, 2, 2)));
  for (const auto& b : enumerate_kleisli(t, 2, 4)) {
    REQUIRE(equal(t, dec_and(t, b, tt), ite(t, b, tt, ff)));
  }
}

TEST_CASE("while examples") {
  auto m = make_maybe();
  auto e = standard_elgot(m);
  const Monad& t = *m;
  Mor p = parse_mor(t, "0 -> inl 1 ; 1 -> inl 0", 2);
  CHECK(equal(t, while_op(e, dec_false(t, 2), p), eta(t, 2)));
  CHECK(equal(t, while_op(e, dec_true(t, 2), eta(t, 2)), delta(e, 2, 2)));

  auto pw = make_powerset();
  auto ep = standard_elgot(pw);
  Mor b = parse_mor(*pw, "0 -> {2} ; 1 -> {1}", 4);
  Mor step = parse_mor(*pw, "0 -> {1} ; 1 -> {}", 2);
  CHECK(format_mor(*pw, while_op(ep, b, step)) == "0 -> {1} ; 1 -> {1}");
  CHECK(equal(*pw, while_direct(*pw, b, step), while_op(ep, b, step)));
}

TEST_CASE("do-while examples") {
  auto m = make_maybe();
  auto e = standard_elgot(m);
  const Monad& t = *m;
  Mor p = parse_mor(t, "0 -> inl 1 ; 1 -> bot", 2);
  CHECK(equal(t, do_while(e, eta(t, 2), dec_false(t, 2)), eta(t, 2)));
  CHECK(equal(t, do_while(e, p, dec_false(t, 2)), p));
  CHECK(equal(t, do_while(e, eta(t, 2), dec_true(t, 2)), delta(e, 2, 2)));
}

TEST_CASE("iteration from while on trivial loops") {
  auto m = make_maybe();
  auto e = standard_elgot(m);
  const Monad& t = *m;
  CHECK(equal(t, elgot_from_while(e, inl_eta(t, 2, 2)), eta(t, 2)));
  CHECK(equal(t, elgot_from_while(e, inr_eta(t, 2, 2)), delta(e, 2, 2)));
}

TEST_CASE("while evaluation paths and do-while forms agree exhaustively") {
  for (auto m : {make_maybe(), make_powerset(), make_exception(2, 1), make_pstate(2)}) {
    auto e = standard_elgot(m);
    std::size_t x = m->name().starts_with("pstate") ? 1 : 2;
    auto bs = enumerate_kleisli(*m, x, 2 * x);
    auto ps = enumerate_kleisli(*m, x, x);
    for (const auto& b : bs) {
      for (const auto& p : ps) {
        REQUIRE(equal(*m, while_op(e, b, p), while_direct(*m, b, p)));
        REQUIRE(equal(*m, do_while(e, p, b), do_while_closed(e, p, b)));
      }
    }
  }
}

TEST_CASE("degenerate decisions") {
  auto m = make_pstate(2);
  auto e = standard_elgot(m);
  for (const auto& p : enumerate_kleisli(*m, 1, 1)) {
    REQUIRE(equal(*m, while_op(e, dec_false(*m, 1), p), eta(*m, 1)));
    REQUIRE(equal(*m, while_op(e, dec_true(*m, 1), p), dagger(e, compose(*m, inr_eta(*m, 1, 1), p))));
  }
}

TEST_CASE("Kleene translations agree with native operators on powerset") {
  auto m = make_powerset();
  auto e = standard_elgot(m);
  auto k = standard_kleene(m);
  for (const auto& p : enumerate_kleisli(*m, 2, 2)) {
    REQUIRE(equal(*m, star_from_while(e, k, p), star(k, p)));
    REQUIRE(equal(*m, star_from_elgot(e, k, p), star(k, p)));
  }
  for (const auto& f : enumerate_kleisli(*m, 1, 3)) {
    REQUIRE(equal(*m, elgot_from_star(k, f), dagger(e, f)));
  }
}
