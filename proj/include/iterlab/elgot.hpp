#pragma once

#include <functional>
#include <string>

#include "iterlab/monad.hpp"

namespace iterlab {

// f : X → T(Y+X)  ↦  f† : X → TY. The target Y is recovered as |cod| - |dom|.
using Iteration = std::function<Mor(const Mor& f)>;

struct ElgotInstance {
  MonadPtr monad;
  Iteration iterate;
  std::string note;

  const Monad& m() const { return *monad; }
};

// Least fixpoint of g ↦ [η, g]·f, iterating from the constant-bottom morphism.
// Throws ConvergenceError when the monad's iteration cap is hit.
Mor least_fixpoint(const Monad& m, const Mor& f);

// Elgot structure induced by the monad's pointed order.
ElgotInstance standard_elgot(MonadPtr m);

Mor constant_bottom(const Monad& m, std::size_t x, std::size_t y);
Mor dagger(const ElgotInstance& e, const Mor& f);
// δ = (η inr)† : X → TY
Mor delta(const ElgotInstance& e, std::size_t x, std::size_t y);

// Pointwise order on Kleisli morphisms.
bool leq(const Monad& m, const Mor& a, const Mor& b);

}  // namespace iterlab
