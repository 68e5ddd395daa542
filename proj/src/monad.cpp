#include "iterlab/monad.hpp"

#include <limits>

#include "iterlab/errors.hpp"

namespace iterlab {

std::uint64_t Monad::space_size(std::size_t n) const {
  if (!enumerable()) throw NotEnumerable(name() + " is not enumerable; use --mode sampled");
  return enumerate(n).size();
}

Value Monad::sample(std::size_t n, Rng& rng) const {
  auto all = enumerate(n);
  if (all.empty()) throw ShapeError("sample: empty value space");
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

Value Monad::bot(std::size_t) const {
  throw Inapplicable("inapplicable: no semilattice on " + name());
}

Value Monad::join(const Value&, const Value&) const {
  throw Inapplicable("inapplicable: no semilattice on " + name());
}

Mor eta(const Monad& m, std::size_t n) {
  Mor f{n, n, {}};
  f.table.reserve(n);
  for (std::size_t x = 0; x < n; ++x) f.table.push_back(m.unit(n, x));
  return f;
}

Mor pure(const Monad& m, const BaseFun& h) {
  Mor f{h.dom, h.cod, {}};
  f.table.reserve(h.dom);
  for (std::size_t x = 0; x < h.dom; ++x) f.table.push_back(m.unit(h.cod, h.table[x]));
  return f;
}

Mor compose(const Monad& m, const Mor& g, const Mor& f) {
  if (f.cod != g.dom) {
    throw ShapeError("compose: " + std::to_string(f.cod) + " vs " + std::to_string(g.dom));
  }
  return Mor{f.dom, g.cod, m.extend_all(g, f.table)};
}

std::vector<Value> Monad::extend_all(const Mor& f, const std::vector<Value>& vs) const {
  std::vector<Value> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(extend(f, v));
  return out;
}

Mor copair(const Mor& f, const Mor& g) {
  if (f.cod != g.cod) throw ShapeError("copair: codomains differ");
  Mor h{f.dom + g.dom, f.cod, {}};
  h.table.reserve(h.dom);
  h.table.insert(h.table.end(), f.table.begin(), f.table.end());
  h.table.insert(h.table.end(), g.table.begin(), g.table.end());
  return h;
}

Mor inl_eta(const Monad& m, std::size_t a, std::size_t b) { return pure(m, inl_fun(a, b)); }

Mor inr_eta(const Monad& m, std::size_t a, std::size_t b) { return pure(m, inr_fun(a, b)); }

Value map_value(const Monad& m, const BaseFun& h, const Value& v) {
  return m.extend(pure(m, h), v);
}

Mor mu(const Monad& m, std::size_t n) {
  auto all = m.enumerate(n);
  Mor f{all.size(), n, {}};
  f.table = std::move(all);
  return f;
}

bool equal(const Monad& m, const Mor& a, const Mor& b) {
  if (a.dom != b.dom || a.cod != b.cod) return false;
  for (std::size_t x = 0; x < a.dom; ++x) {
    if (!m.equal(a.table[x], b.table[x])) return false;
  }
  return true;
}

bool close(const Monad& m, const Mor& a, const Mor& b, double tol) {
  if (a.dom != b.dom || a.cod != b.cod) return false;
  for (std::size_t x = 0; x < a.dom; ++x) {
    if (!m.close(a.table[x], b.table[x], tol)) return false;
  }
  return true;
}

KleisliSpace::KleisliSpace(const Monad& m, std::size_t dom, std::size_t cod)
    : dom_(dom), cod_(cod) {
  if (!m.enumerable()) throw NotEnumerable(m.name() + " is not enumerable; use --mode sampled");
  values_ = m.enumerate(cod);
  count_ = 1;
  const std::uint64_t base = values_.size();
  for (std::size_t x = 0; x < dom; ++x) {
    if (base != 0 && count_ > std::numeric_limits<std::uint64_t>::max() / base) {
      throw BudgetExceeded("Kleisli space too large");
    }
    count_ *= base;
  }
}

Mor KleisliSpace::at(std::uint64_t index) const {
  Mor f{dom_, cod_, {}};
  f.table.reserve(dom_);
  const std::uint64_t base = values_.size();
  for (std::size_t x = 0; x < dom_; ++x) {
    f.table.push_back(values_[index % base]);
    index /= base;
  }
  return f;
}

std::vector<Mor> enumerate_kleisli(const Monad& m, std::size_t dom, std::size_t cod) {
  KleisliSpace space(m, dom, cod);
  std::vector<Mor> all;
  all.reserve(space.count());
  for (std::uint64_t i = 0; i < space.count(); ++i) all.push_back(space.at(i));
  return all;
}

Mor sample_kleisli(const Monad& m, std::size_t dom, std::size_t cod, Rng& rng) {
  Mor f{dom, cod, {}};
  f.table.reserve(dom);
  for (std::size_t x = 0; x < dom; ++x) f.table.push_back(m.sample(cod, rng));
  return f;
}

std::string format_mor(const Monad& m, const Mor& f) {
  std::string out;
  for (std::size_t x = 0; x < f.dom; ++x) {
    if (x) out += " ; ";
    out += std::to_string(x) + " -> " + m.format(f.cod, f.table[x]);
  }
  return out;
}

Mor parse_mor(const Monad& m, std::string_view text, std::size_t cod) {
  Scanner in(text);
  Mor f{0, cod, {}};
  if (in.at_end()) return f;
  do {
    auto x = in.integer();
    if (x != static_cast<std::int64_t>(f.table.size())) {
      in.fail("clauses must list domain elements in order");
    }
    in.expect("->");
    Value v = m.parse(cod, in);
    if (!m.valid(cod, v)) in.fail("value not valid for " + m.name());
    f.table.push_back(std::move(v));
  } while (in.accept(";"));
  if (!in.at_end()) in.fail("trailing input");
  f.dom = f.table.size();
  return f;
}

}  // namespace iterlab
