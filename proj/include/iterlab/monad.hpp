#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "iterlab/core.hpp"
#include "iterlab/literal.hpp"
#include "iterlab/value.hpp"

namespace iterlab {

// A Kleisli morphism dom → T cod as a total table of monadic values.
struct Mor {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<Value> table;

  const Value& operator[](std::size_t x) const { return table[x]; }
  Value& operator[](std::size_t x) { return table[x]; }
};

// One concrete monad on finite carriers, given as a Kleisli triple plus the
// optional order and semilattice structure the iteration operators need.
// Carriers are passed by size only; values over a carrier of size n are
// whatever the monad's encoding says they are.
class Monad {
 public:
  virtual ~Monad() = default;

  virtual std::string name() const = 0;

  virtual Value unit(std::size_t n, std::size_t x) const = 0;
  // f^κ(v) for f : X → TY and v ∈ TX.
  virtual Value extend(const Mor& f, const Value& v) const = 0;
  // f^κ applied to each value; monads that preprocess f override this.
  virtual std::vector<Value> extend_all(const Mor& f, const std::vector<Value>& vs) const;

  virtual bool equal(const Value& a, const Value& b) const { return a == b; }
  // Equality used when judging law checks; only approximate monads differ.
  virtual bool close(const Value& a, const Value& b, double tol) const {
    (void)tol;
    return equal(a, b);
  }
  virtual bool valid(std::size_t n, const Value& v) const = 0;

  virtual bool enumerable() const { return true; }
  // Number of values in T n. Throws NotEnumerable for infinite spaces.
  virtual std::uint64_t space_size(std::size_t n) const;
  // All values of T n in a fixed order, simplest first.
  virtual std::vector<Value> enumerate(std::size_t n) const = 0;
  // Default draws uniformly from the enumeration.
  virtual Value sample(std::size_t n, Rng& rng) const;

  virtual std::string format(std::size_t n, const Value& v) const = 0;
  virtual Value parse(std::size_t n, Scanner& in) const = 0;

  // Pointed order used for least-fixpoint iteration. Monads with a
  // semilattice get the order derived from join unless they override.
  virtual bool has_order() const { return has_join(); }
  virtual Value bottom(std::size_t n) const { return bot(n); }
  virtual bool leq(const Value& a, const Value& b) const { return equal(join(a, b), b); }
  // Stopping test between successive fixpoint approximants.
  virtual bool settled(const Value& previous, const Value& next) const {
    return equal(previous, next);
  }
  virtual double distance(const Value& a, const Value& b) const { return equal(a, b) ? 0.0 : 1.0; }
  virtual std::size_t iteration_cap() const { return std::size_t{1} << 20; }
  virtual std::string order_name() const { return has_join() ? "join order" : "none"; }

  // Bounded join-semilattice structure on each T n.
  virtual bool has_join() const { return false; }
  virtual Value bot(std::size_t n) const;
  virtual Value join(const Value& a, const Value& b) const;

  // Free-form modeling caveat carried into reports.
  virtual std::string note() const { return {}; }
};

using MonadPtr = std::shared_ptr<const Monad>;

// Kleisli category operations.
Mor eta(const Monad& m, std::size_t n);
// η ∘ h
Mor pure(const Monad& m, const BaseFun& h);
// g · f  (= f ; g)
Mor compose(const Monad& m, const Mor& g, const Mor& f);
// [f, g] : A+B → TC
Mor copair(const Mor& f, const Mor& g);
// η ∘ inl : a → T(a+b)   and   η ∘ inr : b → T(a+b)
Mor inl_eta(const Monad& m, std::size_t a, std::size_t b);
Mor inr_eta(const Monad& m, std::size_t a, std::size_t b);
// T h applied to one value.
Value map_value(const Monad& m, const BaseFun& h, const Value& v);
// μ_X = id^κ, presented as the Kleisli morphism |TX| → TX whose table is the
// enumeration of TX; extending it flattens values of T(TX).
Mor mu(const Monad& m, std::size_t n);

bool equal(const Monad& m, const Mor& a, const Mor& b);
bool close(const Monad& m, const Mor& a, const Mor& b, double tol);

// Exhaustive quantifier over Kleisli morphisms X → TY.
class KleisliSpace {
 public:
  KleisliSpace(const Monad& m, std::size_t dom, std::size_t cod);

  std::uint64_t count() const { return count_; }
  const std::vector<Value>& values() const { return values_; }
  // index-th morphism in mixed-radix order, element 0 least significant.
  Mor at(std::uint64_t index) const;

 private:
  std::size_t dom_;
  std::size_t cod_;
  std::vector<Value> values_;
  std::uint64_t count_ = 0;
};

std::vector<Mor> enumerate_kleisli(const Monad& m, std::size_t dom, std::size_t cod);
Mor sample_kleisli(const Monad& m, std::size_t dom, std::size_t cod, Rng& rng);

// Morphism literal `0 -> v ; 1 -> v ; ...` using the monad's value syntax.
std::string format_mor(const Monad& m, const Mor& f);
Mor parse_mor(const Monad& m, std::string_view text, std::size_t cod);

}  // namespace iterlab
