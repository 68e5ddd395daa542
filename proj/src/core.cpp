#include "iterlab/core.hpp"

#include <limits>

#include "iterlab/errors.hpp"
#include "iterlab/literal.hpp"

namespace iterlab {

std::string Carrier::label(std::size_t i) const {
  return i < labels.size() ? labels[i] : std::to_string(i);
}

BaseFun identity(std::size_t n) {
  BaseFun f{n, n, {}};
  f.table.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.table[i] = i;
  return f;
}

BaseFun constant(std::size_t dom, std::size_t cod, std::size_t target) {
  if (dom > 0 && target >= cod) throw ShapeError("constant: target outside codomain");
  return BaseFun{dom, cod, std::vector<std::size_t>(dom, target)};
}

BaseFun compose(const BaseFun& g, const BaseFun& f) {
  if (f.cod != g.dom) throw ShapeError("compose: codomain/domain mismatch");
  BaseFun h{f.dom, g.cod, {}};
  h.table.resize(f.dom);
  for (std::size_t i = 0; i < f.dom; ++i) h.table[i] = g.table[f.table[i]];
  return h;
}

BaseFun inl_fun(std::size_t a, std::size_t b) {
  BaseFun f{a, a + b, {}};
  for (std::size_t i = 0; i < a; ++i) f.table.push_back(i);
  return f;
}

BaseFun inr_fun(std::size_t a, std::size_t b) {
  BaseFun f{b, a + b, {}};
  for (std::size_t j = 0; j < b; ++j) f.table.push_back(a + j);
  return f;
}

Coproduct sum(const Carrier& a, const Carrier& b) {
  Coproduct c;
  c.carrier.size = a.size + b.size;
  if (!a.labels.empty() || !b.labels.empty()) {
    for (std::size_t i = 0; i < a.size; ++i) c.carrier.labels.push_back("inl " + a.label(i));
    for (std::size_t j = 0; j < b.size; ++j) c.carrier.labels.push_back("inr " + b.label(j));
  }
  c.inl = inl_fun(a.size, b.size);
  c.inr = inr_fun(a.size, b.size);
  return c;
}

Product prod(const Carrier& a, const Carrier& b) {
  Product p;
  p.carrier.size = a.size * b.size;
  p.fst = proj1(a.size, b.size);
  p.snd = proj2(a.size, b.size);
  if (!a.labels.empty() || !b.labels.empty()) {
    for (std::size_t i = 0; i < a.size; ++i) {
      for (std::size_t j = 0; j < b.size; ++j) {
        p.carrier.labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
      }
    }
  }
  return p;
}

BaseFun copair_base(const BaseFun& f, const BaseFun& g) {
  if (f.cod != g.cod) throw ShapeError("copair: codomains differ");
  BaseFun h{f.dom + g.dom, f.cod, f.table};
  h.table.insert(h.table.end(), g.table.begin(), g.table.end());
  return h;
}

BaseFun pair_base(const BaseFun& f, const BaseFun& g) {
  if (f.dom != g.dom) throw ShapeError("pair: domains differ");
  BaseFun h{f.dom, f.cod * g.cod, {}};
  h.table.resize(f.dom);
  for (std::size_t i = 0; i < f.dom; ++i) h.table[i] = f.table[i] * g.cod + g.table[i];
  return h;
}

BaseFun proj1(std::size_t a, std::size_t b) {
  BaseFun f{a * b, a, {}};
  for (std::size_t k = 0; k < a * b; ++k) f.table.push_back(k / b);
  return f;
}

BaseFun proj2(std::size_t a, std::size_t b) {
  BaseFun f{a * b, b, {}};
  for (std::size_t k = 0; k < a * b; ++k) f.table.push_back(k % b);
  return f;
}

BaseFun terminal(std::size_t n) { return BaseFun{n, 1, std::vector<std::size_t>(n, 0)}; }

BaseFun sum_map(const BaseFun& f, const BaseFun& g) {
  BaseFun h{f.dom + g.dom, f.cod + g.cod, {}};
  for (auto t : f.table) h.table.push_back(t);
  for (auto t : g.table) h.table.push_back(f.cod + t);
  return h;
}

std::uint64_t count_base(std::size_t dom, std::size_t cod) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dom; ++i) {
    if (cod != 0 && n > std::numeric_limits<std::uint64_t>::max() / cod) {
      throw BudgetExceeded("base function space too large");
    }
    n *= cod;
  }
  return n;
}

BaseFun base_at(std::size_t dom, std::size_t cod, std::uint64_t index) {
  BaseFun f{dom, cod, std::vector<std::size_t>(dom, 0)};
  for (std::size_t x = 0; x < dom; ++x) {
    f.table[x] = static_cast<std::size_t>(index % cod);
    index /= cod;
  }
  return f;
}

std::vector<BaseFun> enumerate_base(std::size_t dom, std::size_t cod) {
  std::vector<BaseFun> all;
  std::uint64_t n = count_base(dom, cod);
  all.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) all.push_back(base_at(dom, cod, i));
  return all;
}

std::string format_base(const BaseFun& f) {
  std::string out;
  for (std::size_t x = 0; x < f.dom; ++x) {
    if (x) out += " ; ";
    out += std::to_string(x) + " -> " + std::to_string(f.table[x]);
  }
  return out;
}

BaseFun parse_base(std::string_view text, std::size_t cod) {
  Scanner in(text);
  BaseFun f{0, cod, {}};
  if (in.at_end()) return f;
  do {
    std::size_t x = static_cast<std::size_t>(in.integer());
    if (x != f.table.size()) in.fail("clauses must list domain elements in order");
    in.expect("->");
    f.table.push_back(in.index(cod));
  } while (in.accept(";"));
  if (!in.at_end()) in.fail("trailing input");
  f.dom = f.table.size();
  return f;
}

}  // namespace iterlab
