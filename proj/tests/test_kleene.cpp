#include <doctest.h>

#include <deque>

#include "iterlab/errors.hpp"
#include "iterlab/kleene.hpp"
#include "iterlab/monads.hpp"

using namespace iterlab;

namespace {

// Reflexive-transitive closure by breadth-first search from every node.
std::vector<std::uint64_t> closure_bfs(const std::vector<std::uint64_t>& succ) {
  const std::size_t n = succ.size();
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    out[s] |= 1u << s;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if ((succ[u] >> v & 1) && !(out[s] >> v & 1)) {
          out[s] |= std::uint64_t{1} << v;
          queue.push_back(v);
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("powerset star examples") {
  auto k = standard_kleene(make_powerset());
  Mor f = parse_mor(k.m(), "0 -> {1} ; 1 -> {}", 2);
  CHECK(format_mor(k.m(), star(k, f)) == "0 -> {0,1} ; 1 -> {1}");
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(equal(k.m(), star(k, eta(k.m(), n)), eta(k.m(), n)));
    CHECK(equal(k.m(), star(k, bot(k, n, n)), eta(k.m(), n)));
  }
}

TEST_CASE("powerset star matches the BFS closure on all relations over 4 elements") {
  auto k = standard_kleene(make_powerset());
  const std::size_t n = 4;
  std::size_t mismatches = 0;
  for (std::uint64_t r = 0; r < (1u << 16); ++r) {
    std::vector<std::uint64_t> succ(n);
    Mor f{n, n, {}};
    for (std::size_t i = 0; i < n; ++i) {
      succ[i] = (r >> (4 * i)) & 0xF;
      f.table.push_back(Value{static_cast<std::int64_t>(succ[i])});
    }
    auto oracle = closure_bfs(succ);
    Mor s = star(k, f);
    for (std::size_t i = 0; i < n; ++i) {
      if (static_cast<std::uint64_t>(s[i][0]) != oracle[i]) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("left and right unfolding give the same star") {
  for (auto m : {make_powerset(), make_ndwriter(Monoid::cyclic(2)), make_ndstate(2)}) {
    auto k = standard_kleene(m);
    std::size_t n = m->name() == "powerset" ? 3 : 1;
    KleisliSpace space(*m, n, n);
    for (std::uint64_t i = 0; i < space.count(); ++i) {
      Mor f = space.at(i);
      REQUIRE(equal(*m, star_left(*m, k.lattice, f), star_right(*m, k.lattice, f)));
    }
  }
}

TEST_CASE("semilattice joins") {
  auto k = standard_kleene(make_ndwriter(Monoid::satnat(3)));
  Mor f = parse_mor(k.m(), "0 -> {(1,0)}", 1);
  Mor g = parse_mor(k.m(), "0 -> {(2,0)}", 1);
  CHECK(format_mor(k.m(), join(k, f, g)) == "0 -> {(1,0),(2,0)}");
  CHECK(equal(k.m(), join(k, f, bot(k, 1, 1)), f));
  CHECK(leq(k, f, join(k, f, g)));
  CHECK_FALSE(leq(k, g, f));
  CHECK_THROWS_AS(join(k, f, bot(k, 2, 1)), ShapeError);
}

TEST_CASE("monads without binary choice expose no semilattice") {
  CHECK_THROWS_AS(standard_kleene(make_maybe()), Inapplicable);
  CHECK_THROWS_AS(standard_kleene(make_exception(2, 0)), Inapplicable);
  CHECK_THROWS_AS(standard_kleene(make_subdist()), Inapplicable);
  CHECK_THROWS_AS(standard_kleene(make_plotkin()), Inapplicable);
}

TEST_CASE("plotkin candidate bottom is not neutral") {
  auto k = plotkin_candidate();
  Mor f = parse_mor(k.m(), "0 -> {0}", 1);
  CHECK_FALSE(equal(k.m(), join(k, f, bot(k, 1, 1)), f));
  CHECK(format_mor(k.m(), join(k, f, bot(k, 1, 1))) == "0 -> {0,*}");
}

TEST_CASE("state transform of powerset") {
  auto k = state_transform(standard_kleene(make_powerset()), 2);
  CHECK(k.m().name() == "state(S=2) of powerset");
  CHECK(format_mor(k.m(), eta(k.m(), 2)) == "0 -> [s0: {0}, s1: {1}] ; 1 -> [s0: {2}, s1: {3}]");
  CHECK(format_mor(k.m(), bot(k, 1, 1)) == "0 -> [s0: {}, s1: {}]");
  // Swap the state and loop: from s0 the star reaches both states.
  Mor f = parse_mor(k.m(), "0 -> [s0: {1}, s1: {0}]", 1);
  CHECK(format_mor(k.m(), star(k, f)) == "0 -> [s0: {0,1}, s1: {0,1}]");
  CHECK(k.m().enumerate(1).size() == 16);
  for (const auto& v : k.m().enumerate(1)) {
    CHECK(k.m().valid(1, v));
    std::string text = k.m().format(1, v);
    Scanner in(text);
    CHECK(k.m().parse(1, in) == v);
  }
}

TEST_CASE("strength of powerset respects the Kleene structure") {
  auto k = standard_kleene(make_powerset());
  CHECK_FALSE(check_strength(k, 2, 2).has_value());
  CHECK_FALSE(check_strength(k, 4, 2).has_value());
}

TEST_CASE("writer transform of a Kleene instance with a broken strength is rejected") {
  auto k = standard_kleene(make_powerset());
  k.lattice.bot = [](std::size_t n) { return Value{n ? 1 : 0}; };
  CHECK_THROWS_AS(writer_transform(k, Monoid::cyclic(2)), TransformRejected);
}

TEST_CASE("writer transform of powerset agrees with ndwriter") {
  auto wt = writer_transform(standard_kleene(make_powerset()), Monoid::satnat(3));
  auto nd = standard_kleene(make_ndwriter(Monoid::satnat(3)));
  CHECK(equal(nd.m(), eta(wt.m(), 2), eta(nd.m(), 2)));
  KleisliSpace fs(nd.m(), 1, 1);
  for (std::uint64_t i = 0; i < fs.count(); ++i) {
    Mor f = fs.at(i);
    REQUIRE(equal(nd.m(), star(wt, f), star(nd, f)));
    for (std::uint64_t j = 0; j < fs.count(); j += 7) {
      Mor g = fs.at(j);
      REQUIRE(equal(nd.m(), compose(wt.m(), g, f), compose(nd.m(), g, f)));
    }
  }
}

TEST_CASE("writer lifting identities") {
  auto wt = writer_transform(standard_kleene(make_powerset()), Monoid::cyclic(2));
  auto basep = make_powerset();
  const Monad& base = *basep;
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    Mor f = sample_kleisli(wt.m(), 2, 2, rng);
    // f°⟨ε,id⟩ = f for every f
    REQUIRE(equal(base, writer_restrict(wt, writer_lift(wt, f)), f));
    // (g⟨ε,id⟩)° = g for g of the form h°
    Mor g = writer_lift(wt, sample_kleisli(wt.m(), 2, 2, rng));
    REQUIRE(equal(base, writer_lift(wt, writer_restrict(wt, g)), g));
  }
}
