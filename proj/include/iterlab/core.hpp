#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iterlab {

// A finite enumerated set. Elements are the indices 0..size-1; labels are
// display names only and never take part in equality.
struct Carrier {
  std::size_t size = 0;
  std::vector<std::string> labels;

  static Carrier of(std::size_t n) { return Carrier{n, {}}; }
  std::string label(std::size_t i) const;
  bool operator==(const Carrier& other) const { return size == other.size; }
};

// A pure (base) function between carriers, stored as a total table.
struct BaseFun {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<std::size_t> table;

  std::size_t operator()(std::size_t x) const { return table[x]; }
  bool operator==(const BaseFun&) const = default;
};

BaseFun identity(std::size_t n);
BaseFun constant(std::size_t dom, std::size_t cod, std::size_t target);
// g ∘ f
BaseFun compose(const BaseFun& g, const BaseFun& f);

// Binary coproduct A+B: left block then right block.
struct Coproduct {
  Carrier carrier;
  BaseFun inl;
  BaseFun inr;
};
Coproduct sum(const Carrier& a, const Carrier& b);

// Binary product A×B with row-major pairing (a,b) ↦ a·|B| + b.
struct Product {
  Carrier carrier;
  BaseFun fst;
  BaseFun snd;
};
Product prod(const Carrier& a, const Carrier& b);

BaseFun inl_fun(std::size_t a, std::size_t b);
BaseFun inr_fun(std::size_t a, std::size_t b);

// [f, g] : A+B → C
BaseFun copair_base(const BaseFun& f, const BaseFun& g);
// ⟨f, g⟩ : X → A×B
BaseFun pair_base(const BaseFun& f, const BaseFun& g);
// The two projections out of a product of the given sizes.
BaseFun proj1(std::size_t a, std::size_t b);
BaseFun proj2(std::size_t a, std::size_t b);
// The unique map to the one-element carrier.
BaseFun terminal(std::size_t n);
// f + g : A+B → C+D
BaseFun sum_map(const BaseFun& f, const BaseFun& g);

std::uint64_t count_base(std::size_t dom, std::size_t cod);
// Decodes the index-th base function in mixed-radix order (element 0 is the
// least significant digit).
BaseFun base_at(std::size_t dom, std::size_t cod, std::uint64_t index);
std::vector<BaseFun> enumerate_base(std::size_t dom, std::size_t cod);

// Literal form `0 -> 1 ; 1 -> 0`.
std::string format_base(const BaseFun& f);
BaseFun parse_base(std::string_view text, std::size_t cod);

}  // namespace iterlab
