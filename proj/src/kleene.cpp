#include "iterlab/kleene.hpp"

#include "iterlab/errors.hpp"

namespace iterlab {

Mor join(const KleeneInstance& k, const Mor& f, const Mor& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw ShapeError("join: endpoints differ");
  Mor h{f.dom, f.cod, {}};
  h.table.reserve(f.dom);
  for (std::size_t x = 0; x < f.dom; ++x) h.table.push_back(k.lattice.join(f[x], g[x]));
  return h;
}

Mor bot(const KleeneInstance& k, std::size_t x, std::size_t y) {
  return Mor{x, y, std::vector<Value>(x, k.lattice.bot(y))};
}

bool leq(const KleeneInstance& k, const Mor& f, const Mor& g) {
  return equal(k.m(), join(k, f, g), g);
}

Mor star(const KleeneInstance& k, const Mor& f) {
  if (f.dom != f.cod) throw ShapeError("star: not an endomorphism");
  return k.star(f);
}

namespace {

template <typename Step>
Mor star_iterate(const Monad& m, const Semilattice& s, const Mor& f, Step step) {
  if (f.dom != f.cod) throw ShapeError("star: not an endomorphism");
  const std::size_t n = f.dom;
  const Mor unit = eta(m, n);
  Mor g{n, n, std::vector<Value>(n, s.bot(n))};
  for (std::size_t round = 0; round < m.iteration_cap(); ++round) {
    Mor next = step(g);
    for (std::size_t x = 0; x < n; ++x) next[x] = s.join(unit[x], next[x]);
    if (equal(m, next, g)) return next;
    g = std::move(next);
  }
  throw ConvergenceError("star iteration on " + m.name() + " did not settle", 1.0);
}

}  // namespace

Mor star_right(const Monad& m, const Semilattice& s, const Mor& f) {
  return star_iterate(m, s, f, [&](const Mor& g) { return compose(m, g, f); });
}

Mor star_left(const Monad& m, const Semilattice& s, const Mor& f) {
  return star_iterate(m, s, f, [&](const Mor& g) { return compose(m, f, g); });
}

KleeneInstance standard_kleene(MonadPtr m) {
  if (!m->has_join()) throw Inapplicable("inapplicable: no semilattice on " + m->name());
  KleeneInstance k;
  k.monad = m;
  k.lattice.bot = [m](std::size_t n) { return m->bot(n); };
  k.lattice.join = [m](const Value& a, const Value& b) { return m->join(a, b); };
  k.star = [m, lattice = k.lattice](const Mor& f) { return star_right(*m, lattice, f); };
  k.note = m->note();
  return k;
}

KleeneInstance plotkin_candidate() {
  auto m = make_plotkin();
  KleeneInstance k;
  k.monad = m;
  k.lattice.bot = [m](std::size_t n) { return m->bottom(n); };
  k.lattice.join = [](const Value& a, const Value& b) { return Value{a[0] | b[0]}; };
  k.star = [m, lattice = k.lattice](const Mor& f) { return star_right(*m, lattice, f); };
  k.note = "candidate semilattice on plotkin: union with bottom {*}";
  return k;
}

Value strength(const Monad& m, std::size_t a, std::size_t a_size, std::size_t y, const Value& v) {
  BaseFun pairing{y, a_size * y, {}};
  for (std::size_t j = 0; j < y; ++j) pairing.table.push_back(a * y + j);
  return map_value(m, pairing, v);
}

std::optional<std::string> check_strength(const KleeneInstance& k, std::size_t a_size,
                                          std::size_t max_size) {
  const Monad& m = k.m();
  for (std::size_t y = 0; y <= max_size; ++y) {
    auto values = m.enumerate(y);
    for (std::size_t a = 0; a < a_size; ++a) {
      if (!m.equal(strength(m, a, a_size, y, k.lattice.bot(y)), k.lattice.bot(a_size * y))) {
        return "strength preserves bottom";
      }
      for (const auto& v : values) {
        for (const auto& w : values) {
          Value lhs = strength(m, a, a_size, y, k.lattice.join(v, w));
          Value rhs = k.lattice.join(strength(m, a, a_size, y, v), strength(m, a, a_size, y, w));
          if (!m.equal(lhs, rhs)) return "strength preserves joins";
        }
      }
    }
    KleisliSpace space(m, y, y);
    for (std::uint64_t i = 0; i < space.count(); ++i) {
      Mor f = space.at(i);
      Mor fs = star(k, f);
      Mor lifted{a_size * y, a_size * y, {}};
      for (std::size_t a = 0; a < a_size; ++a) {
        for (std::size_t z = 0; z < y; ++z) lifted.table.push_back(strength(m, a, a_size, y, f[z]));
      }
      Mor ls = star(k, lifted);
      for (std::size_t a = 0; a < a_size; ++a) {
        for (std::size_t z = 0; z < y; ++z) {
          if (!m.equal(strength(m, a, a_size, y, fs[z]), ls[a * y + z])) {
            return "strength preserves star";
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// -------------------------------------------------------- state transform

class StateTMonad final : public Monad {
 public:
  StateTMonad(KleeneInstance base, std::size_t states) : base_(std::move(base)), s_(states) {
    if (states == 0) throw ShapeError("state transform: S must be non-empty");
  }

  std::string name() const override {
    return "state(S=" + std::to_string(s_) + ") of " + base_.m().name();
  }
  Value unit(std::size_t n, std::size_t x) const override {
    std::vector<Value> parts;
    for (std::size_t s = 0; s < s_; ++s) parts.push_back(base_.m().unit(n * s_, x * s_ + s));
    return pack(parts);
  }
  Value extend(const Mor& f, const Value& v) const override {
    return extend_lifted(to_base(f), v);
  }
  std::vector<Value> extend_all(const Mor& f, const std::vector<Value>& vs) const override {
    Mor F = to_base(f);
    std::vector<Value> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(extend_lifted(F, v));
    return out;
  }
  bool equal(const Value& a, const Value& b) const override {
    if (a == b) return true;
    auto pa = split(a), pb = split(b);
    if (pa.size() != pb.size()) return false;
    for (std::size_t s = 0; s < pa.size(); ++s) {
      if (!base_.m().equal(pa[s], pb[s])) return false;
    }
    return true;
  }
  bool valid(std::size_t n, const Value& v) const override {
    std::vector<Value> parts;
    if (!try_split(v, parts) || parts.size() != s_) return false;
    for (const auto& p : parts) {
      if (!base_.m().valid(n * s_, p)) return false;
    }
    return true;
  }
  std::vector<Value> enumerate(std::size_t n) const override {
    auto inner = base_.m().enumerate(n * s_);
    double total = 1;
    for (std::size_t s = 0; s < s_; ++s) total *= static_cast<double>(inner.size());
    if (total > 1e7) throw BudgetExceeded(name() + ": value space too large to enumerate");
    std::vector<Value> out;
    std::vector<std::size_t> digit(s_, 0);
    if (inner.empty()) return out;
    for (;;) {
      std::vector<Value> parts;
      for (std::size_t s = 0; s < s_; ++s) parts.push_back(inner[digit[s]]);
      out.push_back(pack(parts));
      std::size_t s = 0;
      while (s < s_ && ++digit[s] == inner.size()) digit[s++] = 0;
      if (s == s_) break;
    }
    return out;
  }
  Value sample(std::size_t n, Rng& rng) const override {
    std::vector<Value> parts;
    for (std::size_t s = 0; s < s_; ++s) parts.push_back(base_.m().sample(n * s_, rng));
    return pack(parts);
  }
  bool enumerable() const override { return base_.m().enumerable(); }
  std::string format(std::size_t n, const Value& v) const override {
    auto parts = split(v);
    std::string out = "[";
    for (std::size_t s = 0; s < parts.size(); ++s) {
      if (s) out += ", ";
      out += "s" + std::to_string(s) + ": " + base_.m().format(n * s_, parts[s]);
    }
    return out + "]";
  }
  Value parse(std::size_t n, Scanner& in) const override {
    std::vector<Value> parts;
    in.expect("[");
    for (std::size_t s = 0; s < s_; ++s) {
      if (s) in.expect(",");
      in.expect("s");
      if (in.index(s_) != s) in.fail("state components must be listed in order");
      in.expect(":");
      parts.push_back(base_.m().parse(n * s_, in));
    }
    in.expect("]");
    return pack(parts);
  }
  bool has_join() const override { return true; }
  Value bot(std::size_t n) const override {
    return pack(std::vector<Value>(s_, base_.lattice.bot(n * s_)));
  }
  Value join(const Value& a, const Value& b) const override {
    Value out;
    out.reserve(std::max(a.size(), b.size()));
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      const auto la = static_cast<std::size_t>(a[i]), lb = static_cast<std::size_t>(b[j]);
      if (la == 1 && lb == 1) {
        const Value part = base_.lattice.join(Value{a[i + 1]}, Value{b[j + 1]});
        out.push_back(static_cast<std::int64_t>(part.size()));
        out.insert(out.end(), part.begin(), part.end());
        i += 2;
        j += 2;
        continue;
      }
      const Value pa(a.begin() + static_cast<std::ptrdiff_t>(i + 1),
                     a.begin() + static_cast<std::ptrdiff_t>(i + 1 + la));
      const Value pb(b.begin() + static_cast<std::ptrdiff_t>(j + 1),
                     b.begin() + static_cast<std::ptrdiff_t>(j + 1 + lb));
      const Value part = base_.lattice.join(pa, pb);
      out.push_back(static_cast<std::int64_t>(part.size()));
      out.insert(out.end(), part.begin(), part.end());
      i += 1 + la;
      j += 1 + lb;
    }
    return out;
  }
  std::string order_name() const override { return "pointwise, inherited"; }
  std::string note() const override { return base_.note; }

  // f : X → T'Y  ↦  X×S → T(Y×S)
  Value extend_lifted(const Mor& F, const Value& v) const {
    auto parts = split(v);
    for (auto& p : parts) p = base_.m().extend(F, p);
    return pack(parts);
  }
  Mor to_base(const Mor& f) const {
    Mor F{f.dom * s_, f.cod * s_, {}};
    F.table.reserve(F.dom);
    for (std::size_t x = 0; x < f.dom; ++x) {
      auto parts = split(f[x]);
      for (auto& p : parts) F.table.push_back(std::move(p));
    }
    return F;
  }
  Mor from_base(const Mor& F) const {
    Mor f{F.dom / s_, F.cod / s_, {}};
    for (std::size_t x = 0; x < f.dom; ++x) {
      std::vector<Value> parts(F.table.begin() + static_cast<std::ptrdiff_t>(x * s_),
                               F.table.begin() + static_cast<std::ptrdiff_t>((x + 1) * s_));
      f.table.push_back(pack(parts));
    }
    return f;
  }

  const KleeneInstance& base() const { return base_; }

 private:
  static Value pack(const std::vector<Value>& parts) {
    Value v;
    for (const auto& p : parts) {
      v.push_back(static_cast<std::int64_t>(p.size()));
      v.insert(v.end(), p.begin(), p.end());
    }
    return v;
  }
  static bool try_split(const Value& v, std::vector<Value>& parts) {
    std::size_t pos = 0;
    while (pos < v.size()) {
      if (v[pos] < 0) return false;
      std::size_t len = static_cast<std::size_t>(v[pos++]);
      if (pos + len > v.size()) return false;
      parts.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(pos),
                         v.begin() + static_cast<std::ptrdiff_t>(pos + len));
      pos += len;
    }
    return true;
  }
  static std::vector<Value> split(const Value& v) {
    std::vector<Value> parts;
    if (!try_split(v, parts)) throw ShapeError("state transform: malformed value");
    return parts;
  }

  KleeneInstance base_;
  std::size_t s_;
};

// ------------------------------------------------------- writer transform

class WriterTMonad final : public Monad {
 public:
  WriterTMonad(KleeneInstance base, Monoid monoid) : base_(std::move(base)), w_(std::move(monoid)) {}

  std::string name() const override { return "writer(M=" + w_.name + ") of " + base_.m().name(); }
  Value unit(std::size_t n, std::size_t x) const override {
    return base_.m().unit(n * w_.size, x * w_.size + w_.unit);
  }
  Value extend(const Mor& f, const Value& v) const override {
    return base_.m().extend(lift(f), v);
  }
  std::vector<Value> extend_all(const Mor& f, const std::vector<Value>& vs) const override {
    return base_.m().extend_all(lift(f), vs);
  }
  bool equal(const Value& a, const Value& b) const override { return base_.m().equal(a, b); }
  bool valid(std::size_t n, const Value& v) const override {
    return base_.m().valid(n * w_.size, v);
  }
  bool enumerable() const override { return base_.m().enumerable(); }
  std::vector<Value> enumerate(std::size_t n) const override {
    return base_.m().enumerate(n * w_.size);
  }
  Value sample(std::size_t n, Rng& rng) const override { return base_.m().sample(n * w_.size, rng); }
  std::string format(std::size_t n, const Value& v) const override {
    return base_.m().format(n * w_.size, v);
  }
  Value parse(std::size_t n, Scanner& in) const override { return base_.m().parse(n * w_.size, in); }
  bool has_join() const override { return true; }
  Value bot(std::size_t n) const override { return base_.lattice.bot(n * w_.size); }
  Value join(const Value& a, const Value& b) const override { return base_.lattice.join(a, b); }
  std::string order_name() const override { return "inherited"; }
  std::string note() const override { return base_.note; }

  // f° (m, x) = T(•×id)(τ(m, f(x)))
  Mor lift(const Mor& f) const {
    const std::size_t k = w_.size;
    Mor g{f.dom * k, f.cod * k, {}};
    g.table.reserve(g.dom);
    std::vector<Mor> shift;
    for (std::size_t m = 0; m < k; ++m) {
      BaseFun h{f.cod * k, f.cod * k, {}};
      for (std::size_t i = 0; i < f.cod * k; ++i) h.table.push_back((i / k) * k + w_.op(m, i % k));
      shift.push_back(pure(base_.m(), h));
    }
    for (std::size_t x = 0; x < f.dom; ++x) {
      for (std::size_t m = 0; m < k; ++m) g.table.push_back(base_.m().extend(shift[m], f[x]));
    }
    return g;
  }
  Mor restrict(const Mor& g) const {
    const std::size_t k = w_.size;
    Mor f{g.dom / k, g.cod / k, {}};
    for (std::size_t x = 0; x < f.dom; ++x) f.table.push_back(g[x * k + w_.unit]);
    return f;
  }

  const KleeneInstance& base() const { return base_; }

 private:
  KleeneInstance base_;
  Monoid w_;
};

const WriterTMonad& as_writer(const KleeneInstance& k) {
  auto w = dynamic_cast<const WriterTMonad*>(k.monad.get());
  if (!w) throw ShapeError(k.m().name() + " is not a writer transform");
  return *w;
}

}  // namespace

KleeneInstance state_transform(const KleeneInstance& base, std::size_t states) {
  auto m = std::make_shared<StateTMonad>(base, states);
  KleeneInstance k;
  k.monad = m;
  k.lattice.bot = [m](std::size_t n) { return m->bot(n); };
  k.lattice.join = [m](const Value& a, const Value& b) { return m->join(a, b); };
  k.star = [m](const Mor& f) { return m->from_base(star(m->base(), m->to_base(f))); };
  k.note = base.note;
  return k;
}

KleeneInstance writer_transform(const KleeneInstance& base, Monoid monoid) {
  if (auto bad = check_strength(base, monoid.size, 2)) {
    throw TransformRejected("writer transform rejected: " + *bad + " fails on " + base.m().name());
  }
  auto m = std::make_shared<WriterTMonad>(base, std::move(monoid));
  KleeneInstance k;
  k.monad = m;
  k.lattice.bot = [m](std::size_t n) { return m->bot(n); };
  k.lattice.join = [m](const Value& a, const Value& b) { return m->join(a, b); };
  k.star = [m](const Mor& f) { return m->restrict(star(m->base(), m->lift(f))); };
  k.note = base.note;
  return k;
}

Mor writer_lift(const KleeneInstance& writer, const Mor& f) { return as_writer(writer).lift(f); }

Mor writer_restrict(const KleeneInstance& writer, const Mor& g) {
  return as_writer(writer).restrict(g);
}

}  // namespace iterlab
