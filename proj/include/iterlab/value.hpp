#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

namespace iterlab {

// Canonical encoding of one monadic value as a short word sequence. Each
// monad owns the meaning of the words; two values of the same monad are
// equal iff the monad's `equal` says so (word equality for all exact
// monads).
using Value = boost::container::small_vector<std::int64_t, 4>;

using Rng = std::mt19937_64;

struct ValueHash {
  std::size_t operator()(const Value& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

inline std::int64_t real_word(double d) { return std::bit_cast<std::int64_t>(d); }
inline double word_real(std::int64_t w) { return std::bit_cast<double>(w); }

// Deterministic per-case generator: the stream for case `index` depends only
// on (seed, index), never on how cases are partitioned among workers.
inline Rng case_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return Rng(z);
}

}  // namespace iterlab
