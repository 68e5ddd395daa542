#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "iterlab/monad.hpp"

namespace iterlab {

// Finite monoid (M, ε, •) given by its full composition table.
struct Monoid {
  std::string name;
  std::size_t size = 0;
  std::size_t unit = 0;
  std::vector<std::size_t> table;  // row-major, table[a*size+b] = a • b

  std::size_t op(std::size_t a, std::size_t b) const { return table[a * size + b]; }
  bool commutative() const;

  // Validates the unit and associativity laws over the whole table.
  static Monoid from_table(std::string name, std::size_t unit, std::vector<std::size_t> table);
  static Monoid cyclic(std::size_t n);
  // {0..k} under addition saturating at k.
  static Monoid satnat(std::size_t k);
};

// `z2`, `z<N>`, `satnat<K>`, or `table(r0 ; r1 ; ...)` with space-separated rows;
// the unit of a custom table is found by search.
Monoid parse_monoid(std::string_view text);

MonadPtr make_maybe();
MonadPtr make_exception(std::size_t exceptions, std::size_t divergence);
MonadPtr make_powerset();
MonadPtr make_plotkin();
MonadPtr make_ndwriter(Monoid m);
MonadPtr make_subdist();
MonadPtr make_pstate(std::size_t states);
MonadPtr make_ndstate(std::size_t states);
MonadPtr make_resumption_in(std::size_t inputs, std::size_t fuel);
MonadPtr make_resumption_out(std::size_t outputs, std::size_t fuel);

// Word layout of the bitmask and code based encodings, for tests and fixtures.
namespace enc {
inline constexpr std::int64_t kBot = -1;
inline constexpr int kStarBit = 62;
inline std::int64_t raise(std::size_t e) { return -1 - static_cast<std::int64_t>(e); }
inline std::int64_t bit(std::size_t i) { return std::int64_t{1} << i; }
// Resumption node tags.
inline constexpr std::int64_t kRet = 0;
inline constexpr std::int64_t kDiv = 1;
inline constexpr std::int64_t kUnknown = 2;
inline constexpr std::int64_t kNode = 3;
}  // namespace enc

// Probability weight of x in a subdist value.
double weight(const Value& v, std::size_t x);
Value subdist_value(const std::vector<double>& weights);

}  // namespace iterlab
