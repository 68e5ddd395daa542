#include <doctest.h>

#include <set>

#include "iterlab/errors.hpp"
#include "iterlab/monads.hpp"

using namespace iterlab;

namespace {

// Checks the three monad laws directly on values and Kleisli tables.
void monad_laws(const Monad& m, std::size_t maxsize) {
  for (std::size_t x = 0; x <= maxsize; ++x) {
    auto tx = m.enumerate(x);
    auto id = eta(m, x);
    for (const auto& v : tx) REQUIRE(m.equal(m.extend(id, v), v));
    for (std::size_t y = 0; y <= maxsize; ++y) {
      for (const auto& f : enumerate_kleisli(m, x, y)) {
        for (std::size_t i = 0; i < x; ++i) REQUIRE(m.equal(m.extend(f, m.unit(x, i)), f[i]));
        for (std::size_t z = 0; z <= maxsize; ++z) {
          if (KleisliSpace(m, y, z).count() > 700) continue;
          for (const auto& g : enumerate_kleisli(m, y, z)) {
            auto gf = compose(m, g, f);
            for (const auto& v : tx) {
              REQUIRE(m.equal(m.extend(gf, v), m.extend(g, m.extend(f, v))));
            }
          }
        }
      }
    }
  }
}

void sampled_monad_laws(const Monad& m, std::size_t n, int rounds, double tol) {
  Rng rng(7);
  for (int r = 0; r < rounds; ++r) {
    auto v = m.sample(n, rng);
    REQUIRE(m.valid(n, v));
    auto f = sample_kleisli(m, n, n, rng);
    auto g = sample_kleisli(m, n, n, rng);
    REQUIRE(m.close(m.extend(eta(m, n), v), v, tol));
    for (std::size_t x = 0; x < n; ++x) REQUIRE(m.close(m.extend(f, m.unit(n, x)), f[x], tol));
    REQUIRE(m.close(m.extend(compose(m, g, f), v), m.extend(g, m.extend(f, v)), tol));
  }
}

void literal_roundtrip(const Monad& m, std::size_t dom, std::size_t cod) {
  for (const auto& f : enumerate_kleisli(m, dom, cod)) {
    auto text = format_mor(m, f);
    REQUIRE(equal(m, parse_mor(m, text, cod), f));
  }
}

}  // namespace

TEST_CASE("monad laws hold exhaustively on enumerable instances") {
  monad_laws(*make_maybe(), 3);
  monad_laws(*make_exception(2, 0), 3);
  monad_laws(*make_powerset(), 2);
  monad_laws(*make_plotkin(), 2);
  monad_laws(*make_ndwriter(Monoid::cyclic(2)), 2);
  monad_laws(*make_ndwriter(Monoid::satnat(3)), 1);
  monad_laws(*make_pstate(2), 2);
  monad_laws(*make_ndstate(2), 1);
}

TEST_CASE("sampled monad laws for subdist and resumptions") {
  sampled_monad_laws(*make_subdist(), 3, 1000, 1e-9);
  sampled_monad_laws(*make_resumption_in(2, 4), 2, 1000, 0);
  sampled_monad_laws(*make_resumption_out(2, 4), 2, 1000, 0);
}

TEST_CASE("unit examples") {
  auto maybe = make_maybe();
  auto e = eta(*maybe, 2);
  CHECK(maybe->format(2, e[0]) == "inl 0");
  CHECK(maybe->format(2, e[1]) == "inl 1");
  auto pow = make_powerset();
  CHECK(pow->format(1, eta(*pow, 1)[0]) == "{0}");
  auto sd = make_subdist();
  CHECK(weight(eta(*sd, 1)[0], 0) == 1.0);
}

TEST_CASE("extension examples") {
  auto pow = make_powerset();
  Mor f = parse_mor(*pow, "0 -> {1} ; 1 -> {0,2}", 3);
  CHECK(pow->format(3, pow->extend(f, Value{3})) == "{0,1,2}");
  CHECK(pow->format(3, pow->extend(f, Value{0})) == "{}");

  auto ex = make_exception(2, 0);
  Mor g = parse_mor(*ex, "0 -> inl 1 ; 1 -> raise 0", 2);
  CHECK(ex->extend(g, Value{enc::raise(1)}) == Value{enc::raise(1)});
  CHECK(ex->extend(g, Value{0}) == Value{1});

  auto sd = make_subdist();
  Mor h = parse_mor(*sd, "0 -> 0:0.5 + 1:0.5 ; 1 -> 1:0.25", 2);
  auto d = sd->extend(h, subdist_value({0.5, 0.5}));
  CHECK(weight(d, 0) == doctest::Approx(0.25));
  CHECK(weight(d, 1) == doctest::Approx(0.375));
}

TEST_CASE("ndwriter composes monoid elements as n then m") {
  Monoid nc = Monoid::from_table("nc", 0, {0, 1, 2, 1, 1, 1, 2, 2, 2});
  auto w = make_ndwriter(nc);
  Mor f = parse_mor(*w, "0 -> {(2,0)}", 1);
  Scanner in("{(1,0)}");
  CHECK(w->format(1, w->extend(f, w->parse(1, in))) == "{(2,0)}");
}

TEST_CASE("Kleisli enumeration counts") {
  CHECK(enumerate_kleisli(*make_maybe(), 1, 1).size() == 2);
  // |P(2)|^2 = 4^2
  auto pow = enumerate_kleisli(*make_powerset(), 2, 2);
  CHECK(pow.size() == 16);
  std::set<std::string> distinct;
  auto p = make_powerset();
  for (const auto& f : pow) distinct.insert(format_mor(*p, f));
  CHECK(distinct.size() == 16);
  CHECK(KleisliSpace(*make_powerset(), 2, 4).count() == 256);
  CHECK_THROWS_AS(enumerate_kleisli(*make_subdist(), 1, 1), NotEnumerable);
  CHECK_THROWS_AS(KleisliSpace(*make_resumption_in(2, 4), 1, 1), NotEnumerable);
  CHECK(KleisliSpace(*make_pstate(2), 2, 2).count() == 625);
  CHECK(KleisliSpace(*make_plotkin(), 1, 2).count() == 7);
  CHECK(KleisliSpace(*make_ndstate(2), 1, 1).count() == 16);
}

TEST_CASE("morphism literals round-trip") {
  literal_roundtrip(*make_maybe(), 2, 2);
  literal_roundtrip(*make_exception(2, 1), 2, 2);
  literal_roundtrip(*make_powerset(), 2, 2);
  literal_roundtrip(*make_plotkin(), 2, 2);
  literal_roundtrip(*make_ndwriter(Monoid::satnat(3)), 1, 2);
  literal_roundtrip(*make_pstate(2), 1, 2);
  literal_roundtrip(*make_ndstate(2), 1, 1);
  for (auto m : {make_subdist(), make_resumption_in(2, 3), make_resumption_out(3, 4)}) {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      auto f = sample_kleisli(*m, 2, 3, rng);
      REQUIRE(equal(*m, parse_mor(*m, format_mor(*m, f), 3), f));
    }
  }
}

TEST_CASE("literal syntax") {
  auto w = make_ndwriter(Monoid::satnat(3));
  CHECK(format_mor(*w, parse_mor(*w, "0 -> {(1,0),(1,1)}", 2)) == "0 -> {(1,0),(1,1)}");
  auto ps = make_pstate(2);
  CHECK(format_mor(*ps, parse_mor(*ps, "0 -> [s0: (1,0), s1: bot]", 2)) ==
        "0 -> [s0: (1,0), s1: bot]");
  auto sd = make_subdist();
  CHECK(format_mor(*sd, parse_mor(*sd, "0 -> 0 ; 1 -> 1:0.5", 2)) == "0 -> 0 ; 1 -> 1:0.5");
  auto pl = make_plotkin();
  CHECK(format_mor(*pl, parse_mor(*pl, "0 -> {1,*}", 2)) == "0 -> {1,*}");
  CHECK_THROWS_AS(parse_mor(*pl, "0 -> {}", 2), ParseError);
  auto ri = make_resumption_in(2, 2);
  CHECK(format_mor(*ri, parse_mor(*ri, "0 -> in(ret 0, in(?, bot))", 1)) ==
        "0 -> in(ret 0, in(?, bot))");
  CHECK_THROWS_AS(parse_mor(*ri, "0 -> ?", 1), ParseError);
  CHECK_THROWS_AS(parse_mor(*make_maybe(), "0 -> inl 2", 2), ParseError);
}

TEST_CASE("resumption extension cuts at fuel") {
  auto ro = make_resumption_out(2, 2);
  Mor f = parse_mor(*ro, "0 -> out 1 (out 0 (ret 0))", 1);
  Scanner in("out 0 (ret 0)");
  auto v = ro->parse(1, in);
  CHECK(ro->format(1, ro->extend(f, v)) == "out 0 (out 1 (?))");
  CHECK(ro->valid(1, ro->extend(f, v)));
}

TEST_CASE("monoids") {
  auto z2 = Monoid::cyclic(2);
  CHECK(z2.op(1, 1) == 0);
  auto s3 = Monoid::satnat(3);
  CHECK(s3.size == 4);
  CHECK(s3.op(2, 3) == 3);
  CHECK(parse_monoid("satnat3").table == s3.table);
  CHECK(parse_monoid("z3").size == 3);
  CHECK(parse_monoid("table(0 1 ; 1 1)").unit == 0);
  CHECK_THROWS_AS(Monoid::from_table("bad", 0, {0, 1, 2, 1, 2, 0, 2, 1, 0}), ShapeError);
  CHECK_THROWS_AS(parse_monoid("table(0 1 ; 1 0 ; 1)"), ParseError);
  CHECK_THROWS_AS(parse_monoid("q2"), ParseError);
}

TEST_CASE("orders") {
  auto pl = make_plotkin();
  auto star = pl->bottom(2);
  for (const auto& v : pl->enumerate(2)) CHECK(pl->leq(star, v));
  auto all = pl->enumerate(2);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (pl->leq(a, b) && pl->leq(b, a)) CHECK(a == b);
      for (const auto& c : all) {
        if (pl->leq(a, b) && pl->leq(b, c)) CHECK(pl->leq(a, c));
      }
    }
  }
  auto ps = make_pstate(2);
  for (const auto& v : ps->enumerate(1)) CHECK(ps->leq(ps->bottom(1), v));
  auto ex = make_exception(3, 2);
  CHECK(ex->bottom(1) == Value{enc::raise(2)});
}
