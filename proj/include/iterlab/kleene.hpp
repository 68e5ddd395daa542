#pragma once

#include <functional>
#include <optional>
#include <string>

#include "iterlab/monad.hpp"
#include "iterlab/monads.hpp"

namespace iterlab {

struct Semilattice {
  std::function<Value(std::size_t)> bot;
  std::function<Value(const Value&, const Value&)> join;
};

// f : X → TX  ↦  f* : X → TX
using Star = std::function<Mor(const Mor& f)>;

struct KleeneInstance {
  MonadPtr monad;
  Semilattice lattice;
  Star star;
  std::string note;

  const Monad& m() const { return *monad; }
};

Mor join(const KleeneInstance& k, const Mor& f, const Mor& g);
Mor bot(const KleeneInstance& k, std::size_t x, std::size_t y);
// f ≤ g iff f ∨ g = g
bool leq(const KleeneInstance& k, const Mor& f, const Mor& g);
Mor star(const KleeneInstance& k, const Mor& f);

// Least fixpoint of g ↦ η ∨ g·f, and of g ↦ η ∨ f·g, both from ⊥.
Mor star_right(const Monad& m, const Semilattice& s, const Mor& f);
Mor star_left(const Monad& m, const Semilattice& s, const Mor& f);

// Kleene structure of a monad that carries its own semilattice.
KleeneInstance standard_kleene(MonadPtr m);
// Union with bottom {*} on the plotkin monad; exists only to exhibit that the
// candidate ⊥ is not neutral.
KleeneInstance plotkin_candidate();

// (T(−×S))^S, structure carried over the bijection X → T'Y ≅ X×S → T(Y×S).
KleeneInstance state_transform(const KleeneInstance& base, std::size_t states);
// T(M×−) with f ↦ f° lifting. Throws TransformRejected if the strength of the
// base does not respect its Kleene structure.
KleeneInstance writer_transform(const KleeneInstance& base, Monoid monoid);

// τ : A×TY → T(A×Y), τ(a, v) = T(y ↦ (a,y))(v)
Value strength(const Monad& m, std::size_t a, std::size_t a_size, std::size_t y, const Value& v);
// Returns the name of the first violated strength equation, checking every
// Kleisli morphism with carriers up to max_size and |A| = a_size.
std::optional<std::string> check_strength(const KleeneInstance& k, std::size_t a_size,
                                          std::size_t max_size);

// f° : M×X → T(M×Y) for f : X → T(M×Y), over the writer transform.
Mor writer_lift(const KleeneInstance& writer, const Mor& f);
// ⟨ε, id⟩ : X → M×X followed by f, i.e. the restriction of g : M×X → T(M×Y).
Mor writer_restrict(const KleeneInstance& writer, const Mor& g);

}  // namespace iterlab
