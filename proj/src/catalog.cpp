#include <algorithm>

#include "iterlab/errors.hpp"
#include "iterlab/while.hpp"
#include "law_defs.hpp"

namespace iterlab::detail {

namespace {

Slot kl(std::string name, Dim dom, Dim cod, PointFilter filter = {}, SlotDraw draw = {}) {
  return Slot{std::move(name), SlotKind::Kleisli, dom, cod, std::move(filter), std::move(draw)};
}

Slot base(std::string name, Dim dom, Dim cod) {
  return Slot{std::move(name), SlotKind::Base, dom, cod, {}, {}};
}

Slot dec(std::string name, Dim dom, PointFilter filter = {}) {
  return Slot{std::move(name), SlotKind::Decision, dom, dom + dom, std::move(filter), {}};
}

LawDef law(std::string id, std::string suite, std::string statement, Needs needs,
           std::string dims, std::vector<Slot> slots, Body body) {
  return LawDef{LawInfo{std::move(id), std::move(suite), std::move(statement), needs,
                        std::move(dims)},
                std::move(slots), std::move(body)};
}

Mor dg(const Ctx& c, const Mor& f) { return dagger(c.e(), f); }
Mor comp(const Ctx& c, const Mor& g, const Mor& f) { return compose(c.m, g, f); }
Mor jn(const Ctx& c, const Mor& f, const Mor& g) { return join(c.k(), f, g); }
Mor st(const Ctx& c, const Mor& f) { return star(c.k(), f); }
Mor wh(const Ctx& c, const Mor& b, const Mor& p) { return while_op(c.e(), b, p); }
Mor dw(const Ctx& c, const Mor& p, const Mor& b) { return do_while(c.e(), p, b); }

// ηinl·u as a decision: "false", moving to u(x).
Mor ff_after(const Ctx& c, const BaseFun& u) {
  return pure(c.m, compose(inl_fun(u.cod, u.cod), u));
}

// Premise ηh;b = ηu;ff read pointwise on b: b(h x) = η inl u(x).
PointFilter and_premise(std::size_t h_slot, std::size_t u_slot) {
  return [=](const Ctx& c, const Case& k, std::size_t y, const Value& v) {
    const BaseFun& h = k.base(h_slot);
    const BaseFun& u = k.base(u_slot);
    for (std::size_t x = 0; x < h.dom; ++x) {
      if (h(x) == y && !c.m.equal(v, c.m.unit(2 * c.X(), u(x)))) return false;
    }
    return true;
  };
}

// Premise ηh;b = if c then ηt;tt else ηu;ff read pointwise on c:
// b(h z) = T(inl∘u + inr∘t)(c z).
PointFilter uni_decision_premise(std::size_t b_slot, std::size_t h_slot, std::size_t t_slot,
                                 std::size_t u_slot) {
  return [=](const Ctx& c, const Case& k, std::size_t z, const Value& v) {
    const std::size_t x = c.X();
    BaseFun branch = copair_base(compose(inl_fun(x, x), k.base(u_slot)),
                                 compose(inr_fun(x, x), k.base(t_slot)));
    return c.m.equal(k[b_slot][k.base(h_slot)(z)], map_value(c.m, branch, v));
  };
}

// Premise ηs;p = q;ηt read pointwise on q: p(s z) = T(t)(q z).
PointFilter uni_step_premise(std::size_t p_slot, std::size_t s_slot, std::size_t t_slot) {
  return [=](const Ctx& c, const Case& k, std::size_t z, const Value& v) {
    return c.m.equal(k[p_slot][k.base(s_slot)(z)], map_value(c.m, k.base(t_slot), v));
  };
}

// Uniformity premise g·ηh = T(id+h)·f read pointwise on f.
bool uni_premise(const Ctx& c, const Case& k, std::size_t x, const Value& v) {
  const BaseFun& h = k.base(0);
  BaseFun shift = sum_map(identity(c.Y()), h);
  return c.m.equal(k[1][h(x)], map_value(c.m, shift, v));
}

// Sampling for Uniformity: g takes values over Y + im h only, and f is the
// image of g·ηh under a section of h, so the premise holds by construction.
std::optional<Mor> uni_draw_g(const Ctx& c, const Case& k, Rng& rng) {
  const BaseFun& h = k.base(0);
  std::vector<std::size_t> im(h.table);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  const std::size_t y = c.Y(), z = c.Z();
  BaseFun embed = copair_base(inl_fun(y, z), compose(inr_fun(y, z), BaseFun{im.size(), z, im}));
  Mor g{z, y + z, std::vector<Value>(z)};
  for (std::size_t i = 0; i < z; ++i) g[i] = map_value(c.m, embed, c.m.sample(y + im.size(), rng));
  return g;
}

std::optional<Mor> uni_draw_f(const Ctx& c, const Case& k, Rng& rng) {
  const BaseFun& h = k.base(0);
  const std::size_t x = c.X(), y = c.Y(), z = c.Z();
  Mor f{x, y + x, std::vector<Value>(x)};
  if (x == 0) return f;
  std::vector<std::vector<std::size_t>> pre(z);
  for (std::size_t i = 0; i < x; ++i) pre[h(i)].push_back(i);
  std::vector<std::size_t> section(z, 0);
  for (std::size_t j = 0; j < z; ++j) {
    if (pre[j].empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, pre[j].size() - 1);
    section[j] = pre[j][pick(rng)];
  }
  BaseFun back = copair_base(inl_fun(y, x), compose(inr_fun(y, x), BaseFun{z, x, section}));
  for (std::size_t i = 0; i < x; ++i) f[i] = map_value(c.m, back, k[1][h(i)]);
  return f;
}

std::vector<LawDef> build() {
  const Dim X = kX, Y = kY, Z = kZ;
  std::vector<LawDef> d;

  // Monad laws.
  d.push_back(law("MON-Unit-L", "monad", "f·η = f", Needs::None, "XY", {kl("f", X, Y)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {comp(c, k[0], eta(c.m, c.X())), k[0]};
                  }));
  d.push_back(law("MON-Unit-R", "monad", "η·f = f", Needs::None, "XY", {kl("f", X, Y)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {comp(c, eta(c.m, c.Y()), k[0]), k[0]};
                  }));
  d.push_back(law("MON-Assoc", "monad", "h·(g·f) = (h·g)·f", Needs::None, "XYZ",
                  {kl("f", X, Y), kl("g", Y, Z), kl("h", Z, X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {comp(c, k[2], comp(c, k[1], k[0])), comp(c, comp(c, k[2], k[1]), k[0])};
                  }));

  // Elgot iteration.
  d.push_back(law("EL-Fix", "elgot", "[η, f†]·f = f†", Needs::Elgot, "XY", {kl("f", X, Y + X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    Mor fd = dg(c, k[0]);
                    return {comp(c, copair(eta(c.m, c.Y()), fd), k[0]), fd};
                  }));
  d.push_back(law("EL-Nat", "elgot", "g·f† = ([η inl·g, η inr]·f)†", Needs::Elgot, "XYZ",
                  {kl("f", X, Y + X), kl("g", Y, Z)}, [](const Ctx& c, Case& k) -> Sides {
                    const Mor& fd = k.memo(0, 0, [&] { return dg(c, k[0]); });
                    const std::size_t x = c.X(), z = c.Z();
                    Mor step = copair(comp(c, inl_eta(c.m, z, x), k[1]), inr_eta(c.m, z, x));
                    return {comp(c, k[1], fd), dg(c, comp(c, step, k[0]))};
                  }));
  d.push_back(law("EL-NatR", "elgot", "η inr·f† = ([η inl·η inr, η inr]·f)†", Needs::Elgot,
                  "XYZ", {kl("f", X, Y + X)}, [](const Ctx& c, Case& k) -> Sides {
                    const std::size_t x = c.X(), y = c.Y(), z = c.Z();
                    Mor g = inr_eta(c.m, z, y);
                    Mor step = copair(comp(c, inl_eta(c.m, z + y, x), g), inr_eta(c.m, z + y, x));
                    return {comp(c, g, dg(c, k[0])), dg(c, comp(c, step, k[0]))};
                  }));
  d.push_back(law("EL-Cod", "elgot", "f†† = ([η, η inr]·f)†", Needs::Elgot, "XY",
                  {kl("f", X, Y + X + X)}, [](const Ctx& c, Case& k) -> Sides {
                    const std::size_t x = c.X(), y = c.Y();
                    Mor merge = copair(eta(c.m, y + x), inr_eta(c.m, y, x));
                    return {dg(c, dg(c, k[0])), dg(c, comp(c, merge, k[0]))};
                  }));
  d.push_back(law("EL-Uni", "elgot", "g·ηh = T(id+h)·f implies g†·ηh = f†", Needs::Elgot, "XYZ",
                  {base("h", X, Z), kl("g", Z, Y + Z, {}, uni_draw_g),
                   kl("f", X, Y + X, uni_premise, uni_draw_f)},
                  [](const Ctx& c, Case& k) -> Sides {
                    const Mor& gd = k.memo(0, 1, [&] { return dg(c, k[1]); });
                    return {comp(c, gd, pure(c.m, k.base(0))), dg(c, k[2])};
                  }));
  d.push_back(law(
      "EL-SUni", "elgot", "δ·h = δ and g·h = [η inl, η inr·h]·f imply g†·h = f†", Needs::Elgot,
      "XYZ",
      {kl("h", X, Z,
          [](const Ctx& c, const Case&, std::size_t x, const Value& v) {
            Mor dz = delta(c.e(), c.Z(), c.Y());
            Mor dx = delta(c.e(), c.X(), c.Y());
            return c.m.equal(c.m.extend(dz, v), dx[x]);
          }),
       kl("g", Z, Y + Z),
       kl("f", X, Y + X,
          [](const Ctx& c, const Case& k, std::size_t x, const Value& v) {
            const Mor& route = k.memo(1, 0, [&] {
              const std::size_t y = c.Y(), z = c.Z();
              return copair(inl_eta(c.m, y, z), comp(c, inr_eta(c.m, y, z), k[0]));
            });
            return c.m.equal(c.m.extend(k[1], k[0][x]), c.m.extend(route, v));
          })},
      [](const Ctx& c, Case& k) -> Sides {
        const Mor& gd = k.memo(2, 1, [&] { return dg(c, k[1]); });
        return {comp(c, gd, k[0]), dg(c, k[2])};
      }));
  d.push_back(law("EL-Din", "elgot", "([η inl, g]·f)† = [η, ([η inl, f]·g)†]·f", Needs::Elgot,
                  "XYZ", {kl("f", X, Y + Z), kl("g", Z, Y + X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    const std::size_t x = c.X(), y = c.Y(), z = c.Z();
                    Mor lhs = dg(c, comp(c, copair(inl_eta(c.m, y, x), k[1]), k[0]));
                    Mor inner = dg(c, comp(c, copair(inl_eta(c.m, y, z), k[0]), k[1]));
                    return {lhs, comp(c, copair(eta(c.m, y), inner), k[0])};
                  }));
  d.push_back(law("EL-Sq", "elgot", "f† = ([η inl, f]·f)†", Needs::Elgot, "XY",
                  {kl("f", X, Y + X)}, [](const Ctx& c, Case& k) -> Sides {
                    Mor twice = comp(c, copair(inl_eta(c.m, c.Y(), c.X()), k[0]), k[0]);
                    return {dg(c, k[0]), dg(c, twice)};
                  }));
  d.push_back(law("EL-JoinUnit", "elgot", "(η inl ∨ η inr)† = η", Needs::Both, "X", {},
                  [](const Ctx& c, Case&) -> Sides {
                    const std::size_t x = c.X();
                    return {dg(c, jn(c, inl_eta(c.m, x, x), inr_eta(c.m, x, x))), eta(c.m, x)};
                  }));

  // Kleene structure; f;g is written g·f.
  d.push_back(law("KA-Idem", "kleene", "f ∨ f = f", Needs::Kleene, "XY", {kl("f", X, Y)},
                  [](const Ctx& c, Case& k) -> Sides { return {jn(c, k[0], k[0]), k[0]}; }));
  d.push_back(law("KA-Comm", "kleene", "f ∨ g = g ∨ f", Needs::Kleene, "XY",
                  {kl("f", X, Y), kl("g", X, Y)}, [](const Ctx& c, Case& k) -> Sides {
                    return {jn(c, k[0], k[1]), jn(c, k[1], k[0])};
                  }));
  d.push_back(law("KA-Neut", "kleene", "f ∨ ⊥ = f", Needs::Kleene, "XY", {kl("f", X, Y)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {jn(c, k[0], bot(c.k(), c.X(), c.Y())), k[0]};
                  }));
  d.push_back(law("KA-JAssoc", "kleene", "f ∨ (g ∨ h) = (f ∨ g) ∨ h", Needs::Kleene, "XY",
                  {kl("f", X, Y), kl("g", X, Y), kl("h", X, Y)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {jn(c, k[0], jn(c, k[1], k[2])), jn(c, jn(c, k[0], k[1]), k[2])};
                  }));
  d.push_back(law("KA-SAssoc", "kleene", "f;(g;h) = (f;g);h", Needs::Kleene, "XYZ",
                  {kl("f", X, Y), kl("g", Y, Z), kl("h", Z, X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {comp(c, comp(c, k[2], k[1]), k[0]), comp(c, k[2], comp(c, k[1], k[0]))};
                  }));
  d.push_back(law("KA-RStrict", "kleene", "f;⊥ = ⊥", Needs::Kleene, "XYZ", {kl("f", X, Y)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {comp(c, bot(c.k(), c.Y(), c.Z()), k[0]), bot(c.k(), c.X(), c.Z())};
                  }));
  d.push_back(law("KA-RNeut", "kleene", "f;η = f", Needs::Kleene, "XY", {kl("f", X, Y)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {comp(c, eta(c.m, c.Y()), k[0]), k[0]};
                  }));
  d.push_back(law("KA-RDist", "kleene", "(f ∨ g);h = f;h ∨ g;h", Needs::Kleene, "XYZ",
                  {kl("f", X, Y), kl("g", X, Y), kl("h", Y, Z)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {comp(c, k[2], jn(c, k[0], k[1])),
                            jn(c, comp(c, k[2], k[0]), comp(c, k[2], k[1]))};
                  }));
  d.push_back(law("KA-LStrict", "kleene", "⊥;f = ⊥", Needs::Kleene, "XYZ", {kl("f", X, Y)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {comp(c, k[0], bot(c.k(), c.Z(), c.X())), bot(c.k(), c.Z(), c.Y())};
                  }));
  d.push_back(law("KA-LNeut", "kleene", "η;f = f", Needs::Kleene, "XY", {kl("f", X, Y)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {comp(c, k[0], eta(c.m, c.X())), k[0]};
                  }));
  d.push_back(law("KA-LDist", "kleene", "f;(g ∨ h) = f;g ∨ f;h", Needs::Kleene, "XYZ",
                  {kl("f", X, Y), kl("g", Y, Z), kl("h", Y, Z)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {comp(c, jn(c, k[1], k[2]), k[0]),
                            jn(c, comp(c, k[1], k[0]), comp(c, k[2], k[0]))};
                  }));
  d.push_back(law("KA-RUnfold", "kleene", "f* = η ∨ f;f*", Needs::Kleene, "X", {kl("f", X, X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    Mor s = st(c, k[0]);
                    return {s, jn(c, eta(c.m, c.X()), comp(c, s, k[0]))};
                  }));
  d.push_back(law("KA-RInd", "kleene", "f;g ≤ f implies f;g* ≤ f", Needs::Kleene, "XY",
                  {kl("g", Y, Y),
                   kl("f", X, Y,
                      [](const Ctx& c, const Case& k, std::size_t, const Value& v) {
                        return c.m.equal(c.k().lattice.join(c.m.extend(k[0], v), v), v);
                      })},
                  [](const Ctx& c, Case& k) -> Sides {
                    const Mor& gs = k.memo(0, 0, [&] { return st(c, k[0]); });
                    return {jn(c, comp(c, gs, k[1]), k[1]), k[1]};
                  }));
  d.push_back(law("KA-LUnfold", "kleene", "f* = η ∨ f*;f", Needs::Kleene, "X", {kl("f", X, X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    Mor s = st(c, k[0]);
                    return {s, jn(c, eta(c.m, c.X()), comp(c, k[0], s))};
                  }));
  d.push_back(law("KA-LInd", "kleene", "f;g ≤ g implies f*;g ≤ g", Needs::Kleene, "XY",
                  {kl("g", X, Y),
                   kl("f", X, X,
                      [](const Ctx& c, const Case& k, std::size_t x, const Value& v) {
                        const Value& gx = k[0][x];
                        return c.m.equal(c.k().lattice.join(c.m.extend(k[0], v), gx), gx);
                      })},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {jn(c, comp(c, k[0], st(c, k[1])), k[0]), k[0]};
                  }));
  d.push_back(law("AX1", "kleene", "f* = η ∨ f*·f", Needs::Kleene, "X", {kl("f", X, X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    Mor s = st(c, k[0]);
                    return {s, jn(c, eta(c.m, c.X()), comp(c, s, k[0]))};
                  }));
  d.push_back(law("AX2", "kleene", "η* = η", Needs::Kleene, "X", {},
                  [](const Ctx& c, Case&) -> Sides {
                    return {st(c, eta(c.m, c.X())), eta(c.m, c.X())};
                  }));
  d.push_back(law("AX3", "kleene", "f* = (f ∨ η)*", Needs::Kleene, "X", {kl("f", X, X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {st(c, k[0]), st(c, jn(c, k[0], eta(c.m, c.X())))};
                  }));
  d.push_back(law("AX4", "kleene", "h·f = f·g implies h*·f = f·g*", Needs::Kleene, "XY",
                  {kl("f", X, Y), kl("h", Y, Y),
                   kl("g", X, X,
                      [](const Ctx& c, const Case& k, std::size_t x, const Value& v) {
                        return c.m.equal(c.m.extend(k[0], v), c.m.extend(k[1], k[0][x]));
                      })},
                  [](const Ctx& c, Case& k) -> Sides {
                    const Mor& hs = k.memo(0, 1, [&] { return st(c, k[1]); });
                    return {comp(c, hs, k[0]), comp(c, k[0], st(c, k[2]))};
                  }));
  d.push_back(law("LEM-StarSum", "kleene", "(f ∨ g)* = f*·(g·f*)*", Needs::Kleene, "X",
                  {kl("f", X, X), kl("g", X, X)}, [](const Ctx& c, Case& k) -> Sides {
                    const Mor& fs = k.memo(0, 0, [&] { return st(c, k[0]); });
                    return {st(c, jn(c, k[0], k[1])), comp(c, fs, st(c, comp(c, k[1], fs)))};
                  }));
  d.push_back(law("LEM-CopairJoin", "kleene", "[f1, g1] ∨ [f2, g2] = [f1 ∨ f2, g1 ∨ g2]",
                  Needs::Kleene, "XYZ",
                  {kl("f1", X, Z), kl("g1", Y, Z), kl("f2", X, Z), kl("g2", Y, Z)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {jn(c, copair(k[0], k[1]), copair(k[2], k[3])),
                            copair(jn(c, k[0], k[2]), jn(c, k[1], k[3]))};
                  }));

  // While and do-while.
  d.push_back(law("W-Fix", "while", "while b p = if b then p;(while b p) else η", Needs::Elgot,
                  "X", {dec("b", X), kl("p", X, X)}, [](const Ctx& c, Case& k) -> Sides {
                    Mor w = wh(c, k[0], k[1]);
                    Mor unfold = ite(c.m, k[0], comp(c, w, k[1]), eta(c.m, c.X()));
                    return {w, unfold};
                  }));
  d.push_back(law("W-Or", "while", "while (b ∨ c) p = (while b p);while c (p;while b p)",
                  Needs::Elgot, "X", {dec("b", X), kl("p", X, X), dec("c", X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    const Mor& wb = k.memo(0, 1, [&] { return wh(c, k[0], k[1]); });
                    Mor rhs = comp(c, wh(c, k[2], comp(c, wb, k[1])), wb);
                    return {wh(c, dec_or(c.m, k[0], k[2]), k[1]), rhs};
                  }));
  d.push_back(law("W-And", "while",
                  "ηh;b = ηu;ff implies while (b ∧ (c ∨ ηu;ff)) p = while b (if c then p else ηh)",
                  Needs::Elgot, "X",
                  {base("h", X, X), base("u", X, X), dec("b", X, and_premise(0, 1)), dec("c", X),
                   kl("p", X, X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    Mor guard = dec_and(c.m, k[2], dec_or(c.m, k[3], ff_after(c, k.base(1))));
                    Mor body = ite(c.m, k[3], k[4], pure(c.m, k.base(0)));
                    return {wh(c, guard, k[4]), wh(c, k[2], body)};
                  }));
  d.push_back(law("W-Uni", "while",
                  "ηh;b = if c then ηh';tt else ηu;ff and ηh';p = q;ηh imply "
                  "ηh;while b p = (while c q);ηu",
                  Needs::Elgot, "XZ",
                  {base("h", Z, X), base("h'", Z, X), base("u", Z, X), dec("b", X), kl("p", X, X),
                   dec("c", Z, uni_decision_premise(3, 0, 1, 2)),
                   kl("q", Z, Z, uni_step_premise(4, 1, 0))},
                  [](const Ctx& c, Case& k) -> Sides {
                    const Mor& wb = k.memo(0, 4, [&] { return wh(c, k[3], k[4]); });
                    return {comp(c, wb, pure(c.m, k.base(0))),
                            comp(c, pure(c.m, k.base(2)), wh(c, k[5], k[6]))};
                  }));
  d.push_back(law("DW-Fix", "while", "dw p b = p;if b then (dw p b) else η", Needs::Elgot, "X",
                  {kl("p", X, X), dec("b", X)}, [](const Ctx& c, Case& k) -> Sides {
                    Mor w = dw(c, k[0], k[1]);
                    return {w, comp(c, ite(c.m, k[1], w, eta(c.m, c.X())), k[0])};
                  }));
  d.push_back(law("DW-Or", "while", "dw p (b ∨ c) = dw (dw p b) c", Needs::Elgot, "X",
                  {kl("p", X, X), dec("b", X), dec("c", X)}, [](const Ctx& c, Case& k) -> Sides {
                    const Mor& inner = k.memo(0, 1, [&] { return dw(c, k[0], k[1]); });
                    return {dw(c, k[0], dec_or(c.m, k[1], k[2])), dw(c, inner, k[2])};
                  }));
  d.push_back(law("DW-And", "while",
                  "ηh;b = ηu;ff implies if c then dw p (b ∧ (c ∨ ηu;ff)) else ηu = "
                  "dw (if c then p else ηh) b",
                  Needs::Elgot, "X",
                  {base("h", X, X), base("u", X, X), dec("b", X, and_premise(0, 1)), dec("c", X),
                   kl("p", X, X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    const Mor& b = k[2];
                    const Mor& cc = k[3];
                    const Mor& p = k[4];
                    Mor guard = dec_and(c.m, b, dec_or(c.m, cc, ff_after(c, k.base(1))));
                    Mor lhs = ite(c.m, cc, dw(c, p, guard), pure(c.m, k.base(1)));
                    return {lhs, dw(c, ite(c.m, cc, p, pure(c.m, k.base(0))), b)};
                  }));
  d.push_back(law("DW-Uni", "while",
                  "ηh;p = q;ηh' and ηh';b = if c then ηh;tt else ηu;ff imply "
                  "ηh;dw p b = (dw q c);ηu",
                  Needs::Elgot, "XZ",
                  {base("h", Z, X), base("h'", Z, X), base("u", Z, X), kl("p", X, X), dec("b", X),
                   kl("q", Z, Z, uni_step_premise(3, 0, 1)),
                   dec("c", Z, uni_decision_premise(4, 1, 0, 2))},
                  [](const Ctx& c, Case& k) -> Sides {
                    const Mor& wb = k.memo(0, 4, [&] { return dw(c, k[3], k[4]); });
                    return {comp(c, wb, pure(c.m, k.base(0))),
                            comp(c, pure(c.m, k.base(2)), dw(c, k[5], k[6]))};
                  }));
  d.push_back(law("W-Paths", "while", "while b p agrees with the least fixpoint of q ↦ [η, q·p]·b",
                  Needs::Elgot, "X", {dec("b", X), kl("p", X, X)},
                  [](const Ctx& c, Case& k) -> Sides {
                    return {wh(c, k[0], k[1]), while_direct(c.m, k[0], k[1])};
                  }));
  d.push_back(law("DW-Paths", "while", "p;while b p = (b·p)†", Needs::Elgot, "X",
                  {kl("p", X, X), dec("b", X)}, [](const Ctx& c, Case& k) -> Sides {
                    return {dw(c, k[0], k[1]), do_while_closed(c.e(), k[0], k[1])};
                  }));

  // Translations.
  d.push_back(law("T-WIW", "translations",
                  "η inr;(while η(inl+inr) [η inl, f]);[η, δ] = f†", Needs::Elgot, "XY",
                  {kl("f", X, Y + X)}, [](const Ctx& c, Case& k) -> Sides {
                    return {elgot_from_while(c.e(), k[0]), dg(c, k[0])};
                  }));
  d.push_back(law("T-DW", "translations",
                  "η inr;(dw [η inl, f] η(inl+inr));[η, δ] = f†", Needs::Elgot, "XY",
                  {kl("f", X, Y + X)}, [](const Ctx& c, Case& k) -> Sides {
                    const std::size_t x = c.X(), y = c.Y();
                    Mor decide = pure(c.m, sum_map(inl_fun(y, x), inr_fun(y, x)));
                    Mor loop = dw(c, copair(inl_eta(c.m, y, x), k[0]), decide);
                    Mor exit = copair(eta(c.m, y), delta(c.e(), x, y));
                    return {comp(c, exit, comp(c, loop, inr_eta(c.m, y, x))), dg(c, k[0])};
                  }));
  d.push_back(law("T-IWI", "translations",
                  "the iteration defined from while gives back while b p", Needs::Elgot, "X",
                  {dec("b", X), kl("p", X, X)}, [](const Ctx& c, Case& k) -> Sides {
                    const std::size_t x = c.X();
                    Mor body = comp(c, copair(inl_eta(c.m, x, x), comp(c, inr_eta(c.m, x, x), k[1])),
                                    k[0]);
                    return {elgot_from_while(c.e(), body), wh(c, k[0], k[1])};
                  }));
  d.push_back(law("T-EK", "translations",
                  "([η, δ]·f)·([δ, η]·f)* with f* = (η inl ∨ η inr·f)† gives f†", Needs::Both, "XY",
                  {kl("f", X, Y + X)}, [](const Ctx& c, Case& k) -> Sides {
                    return {elgot_from_star(kleene_via_elgot(c.e(), c.k()), k[0]), dg(c, k[0])};
                  }));
  d.push_back(law("T-KE", "translations",
                  "(η inl ∨ η inr·f)† with f† = ([η, δ]·f)·([δ, η]·f)* gives f*", Needs::Kleene,
                  "X", {kl("f", X, X)}, [](const Ctx& c, Case& k) -> Sides {
                    return {star_from_elgot(elgot_via_star(c.k()), c.k(), k[0]), st(c, k[0])};
                  }));
  d.push_back(law("T-WSW", "translations",
                  "(b?;p)*;(~b)? with p* = while (ff ∨ tt) p gives while b p", Needs::Both, "X",
                  {dec("b", X), kl("p", X, X)}, [](const Ctx& c, Case& k) -> Sides {
                    return {while_from_star(kleene_via_while(c.e(), c.k()), k[0], k[1]),
                            wh(c, k[0], k[1])};
                  }));
  d.push_back(law("T-SW", "translations", "while (ff ∨ tt) p = p*", Needs::Both, "X",
                  {kl("p", X, X)}, [](const Ctx& c, Case& k) -> Sides {
                    return {star_from_while(c.e(), c.k(), k[0]), st(c, k[0])};
                  }));
  return d;
}

}  // namespace

const std::vector<LawDef>& law_defs() {
  static const std::vector<LawDef> defs = build();
  return defs;
}

const LawDef& law_def(std::string_view id) {
  for (const auto& d : law_defs()) {
    if (d.info.id == id) return d;
  }
  throw ParseError("unknown law '" + std::string(id) + "'");
}

}  // namespace iterlab::detail
