#pragma once

#include "iterlab/elgot.hpp"
#include "iterlab/kleene.hpp"
#include "iterlab/monad.hpp"

namespace iterlab {

// Decisions are Kleisli morphisms b : X → T(X+X); inl is "false", inr "true".

// if b then p else q = [q, p]·b
Mor ite(const Monad& m, const Mor& b, const Mor& p, const Mor& q);
Mor dec_false(const Monad& m, std::size_t x);
Mor dec_true(const Monad& m, std::size_t x);
// b ∧ c = if b then c else ff
Mor dec_and(const Monad& m, const Mor& b, const Mor& c);
// b ∨ c = if b then tt else c
Mor dec_or(const Monad& m, const Mor& b, const Mor& c);
// ~b = if b then ff else tt
Mor dec_not(const Monad& m, const Mor& b);
// b? = if b then η else δ
Mor guard(const ElgotInstance& e, const Mor& b);
Mor guard(const KleeneInstance& k, const Mor& b);

// while b p = ([η inl, η inr·p]·b)†
Mor while_op(const ElgotInstance& e, const Mor& b, const Mor& p);
// Least fixpoint of q ↦ [η, q·p]·b computed directly from bottom.
Mor while_direct(const Monad& m, const Mor& b, const Mor& p);
// dw p b = while(b, p)·p
Mor do_while(const ElgotInstance& e, const Mor& p, const Mor& b);
// dw p b = (b·p)†
Mor do_while_closed(const ElgotInstance& e, const Mor& p, const Mor& b);

// f† = [η, δ]·while(η(inl+inr), [η inl, f])·η inr, using only while.
Mor elgot_from_while(const ElgotInstance& e, const Mor& f);
// p* = while(ff ∨ tt, p), with ∨ the semilattice join of decisions.
Mor star_from_while(const ElgotInstance& e, const KleeneInstance& k, const Mor& p);
// while b p = (b?; p)*; (~b)?
Mor while_from_star(const KleeneInstance& k, const Mor& b, const Mor& p);
// f† = ([η, δ]·f)·([δ, η]·f)*  with δ = ⊥
Mor elgot_from_star(const KleeneInstance& k, const Mor& f);
// f* = (η inl ∨ η inr·f)†
Mor star_from_elgot(const ElgotInstance& e, const KleeneInstance& k, const Mor& f);

// Iteration operators defined by the translations, for roundtrip checks.
ElgotInstance elgot_via_while(const ElgotInstance& e);
ElgotInstance elgot_via_star(const KleeneInstance& k);
KleeneInstance kleene_via_elgot(const ElgotInstance& e, const KleeneInstance& k);
KleeneInstance kleene_via_while(const ElgotInstance& e, const KleeneInstance& k);

}  // namespace iterlab
