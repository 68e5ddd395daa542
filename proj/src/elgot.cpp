#include "iterlab/elgot.hpp"

#include <algorithm>

#include "iterlab/errors.hpp"

namespace iterlab {

namespace {

std::size_t target_size(const Mor& f) {
  if (f.cod < f.dom) throw ShapeError("iteration: codomain is not a sum Y+X");
  return f.cod - f.dom;
}

}  // namespace

Mor constant_bottom(const Monad& m, std::size_t x, std::size_t y) {
  if (!m.has_order()) throw Inapplicable("inapplicable: no order on " + m.name());
  return Mor{x, y, std::vector<Value>(x, m.bottom(y))};
}

Mor least_fixpoint(const Monad& m, const Mor& f) {
  const std::size_t y = target_size(f);
  Mor g = constant_bottom(m, f.dom, y);
  Mor step = copair(eta(m, y), g);
  const std::size_t cap = m.iteration_cap();
  for (std::size_t round = 0; round < cap; ++round) {
    bool stable = true;
    double residual = 0.0;
    Mor next{f.dom, y, {}};
    next.table.reserve(f.dom);
    for (std::size_t x = 0; x < f.dom; ++x) {
      next.table.push_back(m.extend(step, f[x]));
      if (!m.settled(g[x], next[x])) {
        stable = false;
        residual = std::max(residual, m.distance(g[x], next[x]));
      }
    }
    if (stable) return next;
    g = std::move(next);
    std::copy(g.table.begin(), g.table.end(), step.table.begin() + static_cast<std::ptrdiff_t>(y));
    if (round + 1 == cap) {
      throw ConvergenceError("fixpoint iteration on " + m.name() + " did not settle within " +
                                 std::to_string(cap) + " steps (residual " +
                                 std::to_string(residual) + ")",
                             residual);
    }
  }
  return g;
}

ElgotInstance standard_elgot(MonadPtr m) {
  if (!m->has_order()) throw Inapplicable("inapplicable: no order on " + m->name());
  ElgotInstance e;
  e.monad = m;
  e.iterate = [m](const Mor& f) { return least_fixpoint(*m, f); };
  e.note = m->note();
  return e;
}

Mor dagger(const ElgotInstance& e, const Mor& f) {
  target_size(f);
  return e.iterate(f);
}

Mor delta(const ElgotInstance& e, std::size_t x, std::size_t y) {
  return dagger(e, inr_eta(e.m(), y, x));
}

bool leq(const Monad& m, const Mor& a, const Mor& b) {
  if (a.dom != b.dom || a.cod != b.cod) return false;
  for (std::size_t x = 0; x < a.dom; ++x) {
    if (!m.leq(a[x], b[x])) return false;
  }
  return true;
}

}  // namespace iterlab
