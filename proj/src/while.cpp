#include "iterlab/while.hpp"

#include "iterlab/errors.hpp"

namespace iterlab {

namespace {

void check_decision(const Mor& b) {
  if (b.cod != 2 * b.dom) throw ShapeError("decision must map X to T(X+X)");
}

}  // namespace

Mor ite(const Monad& m, const Mor& b, const Mor& p, const Mor& q) {
  check_decision(b);
  if (p.dom != b.dom || q.dom != b.dom || p.cod != q.cod) throw ShapeError("ite: shapes differ");
  return compose(m, copair(q, p), b);
}

Mor dec_false(const Monad& m, std::size_t x) { return inl_eta(m, x, x); }

Mor dec_true(const Monad& m, std::size_t x) { return inr_eta(m, x, x); }

Mor dec_and(const Monad& m, const Mor& b, const Mor& c) {
  return ite(m, b, c, dec_false(m, b.dom));
}

Mor dec_or(const Monad& m, const Mor& b, const Mor& c) {
  return ite(m, b, dec_true(m, b.dom), c);
}

Mor dec_not(const Monad& m, const Mor& b) {
  return ite(m, b, dec_false(m, b.dom), dec_true(m, b.dom));
}

Mor guard(const ElgotInstance& e, const Mor& b) {
  return ite(e.m(), b, eta(e.m(), b.dom), delta(e, b.dom, b.dom));
}

Mor guard(const KleeneInstance& k, const Mor& b) {
  return ite(k.m(), b, eta(k.m(), b.dom), bot(k, b.dom, b.dom));
}

Mor while_op(const ElgotInstance& e, const Mor& b, const Mor& p) {
  check_decision(b);
  const Monad& m = e.m();
  const std::size_t x = b.dom;
  return dagger(e, compose(m, copair(inl_eta(m, x, x), compose(m, inr_eta(m, x, x), p)), b));
}

Mor while_direct(const Monad& m, const Mor& b, const Mor& p) {
  check_decision(b);
  const std::size_t x = b.dom;
  if (!m.has_order()) throw Inapplicable("inapplicable: no order on " + m.name());
  Mor q{x, x, std::vector<Value>(x, m.bottom(x))};
  const Mor unit = eta(m, x);
  for (std::size_t round = 0; round < m.iteration_cap(); ++round) {
    Mor next = compose(m, copair(unit, compose(m, q, p)), b);
    bool stable = true;
    for (std::size_t i = 0; i < x && stable; ++i) stable = m.settled(q[i], next[i]);
    if (stable) return next;
    q = std::move(next);
  }
  throw ConvergenceError("while iteration on " + m.name() + " did not settle", 1.0);
}

Mor do_while(const ElgotInstance& e, const Mor& p, const Mor& b) {
  return compose(e.m(), while_op(e, b, p), p);
}

Mor do_while_closed(const ElgotInstance& e, const Mor& p, const Mor& b) {
  check_decision(b);
  return dagger(e, compose(e.m(), b, p));
}

Mor elgot_from_while(const ElgotInstance& e, const Mor& f) {
  const Monad& m = e.m();
  const std::size_t x = f.dom;
  if (f.cod < x) throw ShapeError("iteration: codomain is not a sum Y+X");
  const std::size_t y = f.cod - x;
  Mor decide = pure(m, sum_map(inl_fun(y, x), inr_fun(y, x)));
  Mor body = copair(inl_eta(m, y, x), f);
  Mor loop = while_op(e, decide, body);
  Mor exit = copair(eta(m, y), delta(e, x, y));
  return compose(m, exit, compose(m, loop, inr_eta(m, y, x)));
}

Mor star_from_while(const ElgotInstance& e, const KleeneInstance& k, const Mor& p) {
  const std::size_t x = p.dom;
  Mor choose = join(k, dec_false(e.m(), x), dec_true(e.m(), x));
  return while_op(e, choose, p);
}

Mor while_from_star(const KleeneInstance& k, const Mor& b, const Mor& p) {
  const Monad& m = k.m();
  Mor body = compose(m, p, guard(k, b));
  return compose(m, guard(k, dec_not(m, b)), star(k, body));
}

Mor elgot_from_star(const KleeneInstance& k, const Mor& f) {
  const Monad& m = k.m();
  const std::size_t x = f.dom;
  if (f.cod < x) throw ShapeError("iteration: codomain is not a sum Y+X");
  const std::size_t y = f.cod - x;
  Mor exit = compose(m, copair(eta(m, y), bot(k, x, y)), f);
  Mor loop = compose(m, copair(bot(k, y, x), eta(m, x)), f);
  return compose(m, exit, star(k, loop));
}

Mor star_from_elgot(const ElgotInstance& e, const KleeneInstance& k, const Mor& f) {
  const Monad& m = e.m();
  const std::size_t x = f.dom;
  Mor body = join(k, inl_eta(m, x, x), compose(m, inr_eta(m, x, x), f));
  return dagger(e, body);
}

ElgotInstance elgot_via_while(const ElgotInstance& e) {
  ElgotInstance out = e;
  out.iterate = [e](const Mor& f) { return elgot_from_while(e, f); };
  return out;
}

ElgotInstance elgot_via_star(const KleeneInstance& k) {
  ElgotInstance out;
  out.monad = k.monad;
  out.iterate = [k](const Mor& f) { return elgot_from_star(k, f); };
  out.note = k.note;
  return out;
}

KleeneInstance kleene_via_elgot(const ElgotInstance& e, const KleeneInstance& k) {
  KleeneInstance out = k;
  out.star = [e, k](const Mor& f) { return star_from_elgot(e, k, f); };
  return out;
}

KleeneInstance kleene_via_while(const ElgotInstance& e, const KleeneInstance& k) {
  KleeneInstance out = k;
  out.star = [e, k](const Mor& f) { return star_from_while(e, k, f); };
  return out;
}

}  // namespace iterlab
