#include "iterlab/monads.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "iterlab/errors.hpp"

namespace iterlab {

namespace {

using U64 = std::uint64_t;

constexpr std::size_t kMaxBits = 62;

U64 low_mask(std::size_t n) { return n >= 64 ? ~U64{0} : (U64{1} << n) - 1; }

std::size_t checked_bits(std::size_t n, const std::string& who) {
  if (n > kMaxBits) throw BudgetExceeded(who + ": carrier too large for bitmask encoding");
  return n;
}

std::vector<Value> all_masks(std::size_t bits, const std::string& who) {
  if (bits > 24) throw BudgetExceeded(who + ": value space too large to enumerate");
  std::vector<Value> out;
  out.reserve(std::size_t{1} << bits);
  for (U64 m = 0; m < (U64{1} << bits); ++m) out.push_back(Value{static_cast<std::int64_t>(m)});
  return out;
}

template <typename F>
void for_bits(U64 mask, F&& f) {
  while (mask) {
    int i = std::countr_zero(mask);
    f(static_cast<std::size_t>(i));
    mask &= mask - 1;
  }
}

// Cartesian power of one word list: `slots` independent words per value.
std::vector<Value> power_words(const std::vector<std::int64_t>& words, std::size_t slots,
                               const std::string& who) {
  double total = std::pow(static_cast<double>(words.size()), static_cast<double>(slots));
  if (total > 1e7) throw BudgetExceeded(who + ": value space too large to enumerate");
  std::vector<Value> out;
  std::vector<std::size_t> digit(slots, 0);
  const std::size_t base = words.size();
  if (base == 0 && slots > 0) return out;
  for (;;) {
    Value v;
    for (std::size_t s = 0; s < slots; ++s) v.push_back(words[digit[s]]);
    out.push_back(std::move(v));
    std::size_t s = 0;
    while (s < slots && ++digit[s] == base) digit[s++] = 0;
    if (s == slots) break;
  }
  return out;
}

std::string set_text(U64 mask, const std::function<std::string(std::size_t)>& element) {
  std::string out = "{";
  bool first = true;
  for_bits(mask, [&](std::size_t i) {
    if (!first) out += ",";
    first = false;
    out += element(i);
  });
  return out + "}";
}

// Reads `{ item, item, ... }`, calling `item` for each element.
void parse_set(Scanner& in, const std::function<void()>& item) {
  in.expect("{");
  if (in.accept("}")) return;
  do item(); while (in.accept(","));
  in.expect("}");
}

std::size_t expect_state(Scanner& in, std::size_t s, std::size_t states) {
  in.expect("s");
  if (in.index(states) != s) in.fail("state components must be listed in order");
  in.expect(":");
  return s;
}

std::size_t word_index(std::int64_t w) { return static_cast<std::size_t>(w); }

// ---------------------------------------------------------------- maybe

class MaybeMonad final : public Monad {
 public:
  std::string name() const override { return "maybe"; }
  Value unit(std::size_t, std::size_t x) const override { return Value{static_cast<std::int64_t>(x)}; }
  Value extend(const Mor& f, const Value& v) const override {
    if (v[0] < 0) return v;
    return f[word_index(v[0])];
  }
  bool valid(std::size_t n, const Value& v) const override {
    return v.size() == 1 && v[0] >= -1 && v[0] < static_cast<std::int64_t>(n);
  }
  std::vector<Value> enumerate(std::size_t n) const override {
    std::vector<Value> out{Value{enc::kBot}};
    for (std::size_t x = 0; x < n; ++x) out.push_back(Value{static_cast<std::int64_t>(x)});
    return out;
  }
  std::string format(std::size_t, const Value& v) const override {
    return v[0] < 0 ? "bot" : "inl " + std::to_string(v[0]);
  }
  Value parse(std::size_t n, Scanner& in) const override {
    if (in.accept_word("bot")) return Value{enc::kBot};
    if (!in.accept_word("inl")) in.fail("expected 'inl INT' or 'bot'");
    return Value{static_cast<std::int64_t>(in.index(n))};
  }
  bool has_order() const override { return true; }
  Value bottom(std::size_t) const override { return Value{enc::kBot}; }
  bool leq(const Value& a, const Value& b) const override { return a[0] == enc::kBot || a == b; }
  std::string order_name() const override { return "flat, bottom bot"; }
};

// ------------------------------------------------------------ exception

class ExceptionMonad final : public Monad {
 public:
  ExceptionMonad(std::size_t exceptions, std::size_t divergence)
      : exceptions_(exceptions), divergence_(divergence) {
    if (exceptions == 0) throw ShapeError("exception: E must be non-empty");
    if (divergence >= exceptions) throw ShapeError("exception: div must lie in E");
  }
  std::string name() const override {
    return "exception:E=" + std::to_string(exceptions_) + ",div=" + std::to_string(divergence_);
  }
  Value unit(std::size_t, std::size_t x) const override { return Value{static_cast<std::int64_t>(x)}; }
  Value extend(const Mor& f, const Value& v) const override {
    if (v[0] < 0) return v;
    return f[word_index(v[0])];
  }
  bool valid(std::size_t n, const Value& v) const override {
    return v.size() == 1 && v[0] >= enc::raise(exceptions_ - 1) &&
           v[0] < static_cast<std::int64_t>(n);
  }
  std::vector<Value> enumerate(std::size_t n) const override {
    std::vector<Value> out;
    for (std::size_t e = 0; e < exceptions_; ++e) out.push_back(Value{enc::raise(e)});
    for (std::size_t x = 0; x < n; ++x) out.push_back(Value{static_cast<std::int64_t>(x)});
    return out;
  }
  std::string format(std::size_t, const Value& v) const override {
    if (v[0] < 0) return "raise " + std::to_string(-1 - v[0]);
    return "inl " + std::to_string(v[0]);
  }
  Value parse(std::size_t n, Scanner& in) const override {
    if (in.accept_word("raise")) return Value{enc::raise(in.index(exceptions_))};
    if (!in.accept_word("inl")) in.fail("expected 'inl INT' or 'raise INT'");
    return Value{static_cast<std::int64_t>(in.index(n))};
  }
  bool has_order() const override { return true; }
  Value bottom(std::size_t) const override { return Value{enc::raise(divergence_)}; }
  bool leq(const Value& a, const Value& b) const override {
    return a[0] == enc::raise(divergence_) || a == b;
  }
  std::string order_name() const override {
    return "flat, bottom raise " + std::to_string(divergence_);
  }

 private:
  std::size_t exceptions_;
  std::size_t divergence_;
};

// ------------------------------------------------------------- powerset

class PowersetMonad final : public Monad {
 public:
  std::string name() const override { return "powerset"; }
  Value unit(std::size_t n, std::size_t x) const override {
    checked_bits(n, "powerset");
    return Value{enc::bit(x)};
  }
  Value extend(const Mor& f, const Value& v) const override {
    U64 out = 0;
    for_bits(static_cast<U64>(v[0]), [&](std::size_t x) { out |= static_cast<U64>(f[x][0]); });
    return Value{static_cast<std::int64_t>(out)};
  }
  bool valid(std::size_t n, const Value& v) const override {
    return v.size() == 1 && n <= kMaxBits && (static_cast<U64>(v[0]) & ~low_mask(n)) == 0;
  }
  std::vector<Value> enumerate(std::size_t n) const override { return all_masks(n, "powerset"); }
  std::string format(std::size_t, const Value& v) const override {
    return set_text(static_cast<U64>(v[0]), [](std::size_t i) { return std::to_string(i); });
  }
  Value parse(std::size_t n, Scanner& in) const override {
    U64 mask = 0;
    parse_set(in, [&] { mask |= U64{1} << in.index(n); });
    return Value{static_cast<std::int64_t>(mask)};
  }
  bool has_join() const override { return true; }
  Value bot(std::size_t) const override { return Value{0}; }
  Value join(const Value& a, const Value& b) const override { return Value{a[0] | b[0]}; }
  bool leq(const Value& a, const Value& b) const override { return (a[0] & ~b[0]) == 0; }
  std::string order_name() const override { return "inclusion, bottom {}"; }
};

// -------------------------------------------------------------- plotkin

class PlotkinMonad final : public Monad {
 public:
  static constexpr U64 kStar = U64{1} << enc::kStarBit;

  std::string name() const override { return "plotkin"; }
  Value unit(std::size_t n, std::size_t x) const override {
    checked_bits(n, "plotkin");
    return Value{enc::bit(x)};
  }
  Value extend(const Mor& f, const Value& v) const override {
    U64 in = static_cast<U64>(v[0]);
    U64 out = in & kStar;
    for_bits(in & ~kStar, [&](std::size_t x) { out |= static_cast<U64>(f[x][0]); });
    return Value{static_cast<std::int64_t>(out)};
  }
  bool valid(std::size_t n, const Value& v) const override {
    if (v.size() != 1 || n > kMaxBits || v[0] == 0) return false;
    return (static_cast<U64>(v[0]) & ~(low_mask(n) | kStar)) == 0;
  }
  std::vector<Value> enumerate(std::size_t n) const override {
    checked_bits(n + 1, "plotkin");
    if (n + 1 > 24) throw BudgetExceeded("plotkin: value space too large to enumerate");
    std::vector<Value> out;
    // Index bit 0 stands for the divergence point so that {*} comes first.
    for (U64 i = 1; i < (U64{1} << (n + 1)); ++i) {
      U64 mask = ((i >> 1) & low_mask(n)) | ((i & 1) ? kStar : 0);
      out.push_back(Value{static_cast<std::int64_t>(mask)});
    }
    return out;
  }
  std::string format(std::size_t, const Value& v) const override {
    return set_text(static_cast<U64>(v[0]), [](std::size_t i) {
      return i == enc::kStarBit ? std::string("*") : std::to_string(i);
    });
  }
  Value parse(std::size_t n, Scanner& in) const override {
    U64 mask = 0;
    parse_set(in, [&] {
      if (in.accept("*")) mask |= kStar;
      else mask |= U64{1} << in.index(n);
    });
    if (mask == 0) in.fail("plotkin values are non-empty");
    return Value{static_cast<std::int64_t>(mask)};
  }
  // Egli–Milner order on subsets of X+1 with * as the least point.
  bool has_order() const override { return true; }
  Value bottom(std::size_t) const override { return Value{static_cast<std::int64_t>(kStar)}; }
  bool leq(const Value& a, const Value& b) const override {
    U64 x = static_cast<U64>(a[0]), y = static_cast<U64>(b[0]);
    if (x & kStar) return ((x & ~kStar) & ~y) == 0;
    return x == y;
  }
  std::string order_name() const override { return "Egli-Milner, bottom {*}"; }
  std::string note() const override {
    return "order on plotkin is the Egli-Milner order with bottom {*} (modeling assumption)";
  }
};

// ------------------------------------------------------------- ndwriter

class NdWriterMonad final : public Monad {
 public:
  explicit NdWriterMonad(Monoid m) : m_(std::move(m)) {}

  std::string name() const override { return "ndwriter:M=" + m_.name; }
  Value unit(std::size_t n, std::size_t x) const override {
    checked_bits(n * m_.size, "ndwriter");
    return Value{enc::bit(x * m_.size + m_.unit)};
  }
  // {(n•m, y) | (m,x) ∈ S, (n,y) ∈ f(x)}
  Value extend(const Mor& f, const Value& v) const override {
    const std::size_t k = m_.size;
    U64 out = 0;
    for_bits(static_cast<U64>(v[0]), [&](std::size_t i) {
      std::size_t x = i / k, m = i % k;
      for_bits(static_cast<U64>(f[x][0]), [&](std::size_t j) {
        out |= U64{1} << ((j / k) * k + m_.op(j % k, m));
      });
    });
    return Value{static_cast<std::int64_t>(out)};
  }
  bool valid(std::size_t n, const Value& v) const override {
    return v.size() == 1 && n * m_.size <= kMaxBits &&
           (static_cast<U64>(v[0]) & ~low_mask(n * m_.size)) == 0;
  }
  std::vector<Value> enumerate(std::size_t n) const override {
    return all_masks(n * m_.size, "ndwriter");
  }
  std::string format(std::size_t, const Value& v) const override {
    const std::size_t k = m_.size;
    return set_text(static_cast<U64>(v[0]), [k](std::size_t i) {
      return "(" + std::to_string(i % k) + "," + std::to_string(i / k) + ")";
    });
  }
  Value parse(std::size_t n, Scanner& in) const override {
    U64 mask = 0;
    parse_set(in, [&] {
      in.expect("(");
      std::size_t m = in.index(m_.size);
      in.expect(",");
      std::size_t x = in.index(n);
      in.expect(")");
      mask |= U64{1} << (x * m_.size + m);
    });
    return Value{static_cast<std::int64_t>(mask)};
  }
  bool has_join() const override { return true; }
  Value bot(std::size_t) const override { return Value{0}; }
  Value join(const Value& a, const Value& b) const override { return Value{a[0] | b[0]}; }
  bool leq(const Value& a, const Value& b) const override { return (a[0] & ~b[0]) == 0; }
  std::string order_name() const override { return "inclusion, bottom {}"; }
  std::string note() const override {
    return m_.name.starts_with("satnat") ? "monoid " + m_.name + " is a finite stand-in for (N,+)"
                                         : std::string();
  }

 private:
  Monoid m_;
};

// -------------------------------------------------------------- subdist

constexpr double kValueTol = 1e-9;

class SubdistMonad final : public Monad {
 public:
  std::string name() const override { return "subdist"; }
  Value unit(std::size_t n, std::size_t x) const override {
    Value v(n, real_word(0.0));
    v[x] = real_word(1.0);
    return v;
  }
  Value extend(const Mor& f, const Value& v) const override {
    Value out(f.cod, real_word(0.0));
    std::vector<double> acc(f.cod, 0.0);
    for (std::size_t x = 0; x < v.size(); ++x) {
      double w = word_real(v[x]);
      if (w == 0.0) continue;
      for (std::size_t y = 0; y < f.cod; ++y) acc[y] += word_real(f[x][y]) * w;
    }
    for (std::size_t y = 0; y < f.cod; ++y) out[y] = real_word(acc[y]);
    return out;
  }
  bool equal(const Value& a, const Value& b) const override { return close(a, b, kValueTol); }
  bool close(const Value& a, const Value& b, double tol) const override {
    return a.size() == b.size() && distance(a, b) <= tol;
  }
  double distance(const Value& a, const Value& b) const override {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      d = std::max(d, std::abs(word_real(a[i]) - word_real(b[i])));
    }
    return d;
  }
  bool valid(std::size_t n, const Value& v) const override {
    if (v.size() != n) return false;
    double total = 0.0;
    for (auto w : v) {
      double d = word_real(w);
      if (!(d >= -kValueTol)) return false;
      total += d;
    }
    return total <= 1.0 + kValueTol;
  }
  bool enumerable() const override { return false; }
  std::vector<Value> enumerate(std::size_t) const override {
    throw NotEnumerable("subdist is not enumerable; use --mode sampled");
  }
  // Integer weights on a grid of 4, one extra cell for the missing mass,
  // normalized; about one value in five is a full distribution.
  Value sample(std::size_t n, Rng& rng) const override {
    std::uniform_int_distribution<int> cell(0, 4);
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) total += (x = cell(rng));
    double deficit = std::uniform_int_distribution<int>(0, 4)(rng) == 0 ? 0.0 : cell(rng);
    total += deficit;
    Value v(n, real_word(0.0));
    if (total == 0.0) return v;
    for (std::size_t x = 0; x < n; ++x) v[x] = real_word(w[x] / total);
    return v;
  }
  std::string format(std::size_t, const Value& v) const override {
    std::string out;
    for (std::size_t x = 0; x < v.size(); ++x) {
      double w = word_real(v[x]);
      if (w == 0.0) continue;
      if (!out.empty()) out += " + ";
      out += std::to_string(x) + ":" + format_real(w);
    }
    return out.empty() ? "0" : out;
  }
  Value parse(std::size_t n, Scanner& in) const override {
    Value v(n, real_word(0.0));
    if (in.peek() == '0') {
      Scanner probe = in;
      probe.integer();
      if (probe.peek() != ':') {
        in.integer();
        return v;
      }
    }
    do {
      std::size_t x = in.index(n);
      in.expect(":");
      v[x] = real_word(word_real(v[x]) + in.real());
    } while (in.accept("+"));
    return v;
  }
  bool has_order() const override { return true; }
  Value bottom(std::size_t n) const override { return Value(n, real_word(0.0)); }
  bool leq(const Value& a, const Value& b) const override {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (word_real(a[i]) > word_real(b[i]) + kValueTol) return false;
    }
    return true;
  }
  bool settled(const Value& previous, const Value& next) const override {
    return distance(previous, next) < 1e-12;
  }
  std::size_t iteration_cap() const override { return 10000; }
  std::string order_name() const override { return "pointwise, bottom 0"; }
};

// --------------------------------------------------------------- pstate

class PStateMonad final : public Monad {
 public:
  explicit PStateMonad(std::size_t states) : s_(states) {
    if (states == 0) throw ShapeError("pstate: S must be non-empty");
  }
  std::string name() const override { return "pstate:S=" + std::to_string(s_); }
  Value unit(std::size_t, std::size_t x) const override {
    Value v(s_);
    for (std::size_t s = 0; s < s_; ++s) v[s] = static_cast<std::int64_t>(x * s_ + s);
    return v;
  }
  Value extend(const Mor& f, const Value& v) const override {
    Value out(s_);
    for (std::size_t s = 0; s < s_; ++s) {
      if (v[s] < 0) {
        out[s] = enc::kBot;
      } else {
        std::size_t i = word_index(v[s]);
        out[s] = f[i / s_][i % s_];
      }
    }
    return out;
  }
  bool valid(std::size_t n, const Value& v) const override {
    if (v.size() != s_) return false;
    for (auto w : v) {
      if (w < -1 || w >= static_cast<std::int64_t>(n * s_)) return false;
    }
    return true;
  }
  std::vector<Value> enumerate(std::size_t n) const override {
    std::vector<std::int64_t> words{enc::kBot};
    for (std::size_t i = 0; i < n * s_; ++i) words.push_back(static_cast<std::int64_t>(i));
    return power_words(words, s_, "pstate");
  }
  std::string format(std::size_t, const Value& v) const override {
    std::string out = "[";
    for (std::size_t s = 0; s < s_; ++s) {
      if (s) out += ", ";
      out += "s" + std::to_string(s) + ": ";
      if (v[s] < 0) {
        out += "bot";
      } else {
        std::size_t i = word_index(v[s]);
        out += "(" + std::to_string(i / s_) + "," + std::to_string(i % s_) + ")";
      }
    }
    return out + "]";
  }
  Value parse(std::size_t n, Scanner& in) const override {
    Value v(s_);
    in.expect("[");
    for (std::size_t s = 0; s < s_; ++s) {
      if (s) in.expect(",");
      expect_state(in, s, s_);
      if (in.accept_word("bot")) {
        v[s] = enc::kBot;
        continue;
      }
      in.expect("(");
      std::size_t x = in.index(n);
      in.expect(",");
      std::size_t t = in.index(s_);
      in.expect(")");
      v[s] = static_cast<std::int64_t>(x * s_ + t);
    }
    in.expect("]");
    return v;
  }
  bool has_order() const override { return true; }
  Value bottom(std::size_t) const override { return Value(s_, enc::kBot); }
  bool leq(const Value& a, const Value& b) const override {
    for (std::size_t s = 0; s < s_; ++s) {
      if (a[s] != enc::kBot && a[s] != b[s]) return false;
    }
    return true;
  }
  std::string order_name() const override { return "pointwise flat, bottom bot"; }

 private:
  std::size_t s_;
};

// -------------------------------------------------------------- ndstate

class NdStateMonad final : public Monad {
 public:
  explicit NdStateMonad(std::size_t states) : s_(states) {
    if (states == 0) throw ShapeError("ndstate: S must be non-empty");
  }
  std::string name() const override { return "ndstate:S=" + std::to_string(s_); }
  Value unit(std::size_t n, std::size_t x) const override {
    checked_bits(n * s_, "ndstate");
    Value v(s_);
    for (std::size_t s = 0; s < s_; ++s) v[s] = enc::bit(x * s_ + s);
    return v;
  }
  Value extend(const Mor& f, const Value& v) const override {
    Value out(s_, 0);
    for (std::size_t s = 0; s < s_; ++s) {
      U64 acc = 0;
      for_bits(static_cast<U64>(v[s]), [&](std::size_t i) {
        acc |= static_cast<U64>(f[i / s_][i % s_]);
      });
      out[s] = static_cast<std::int64_t>(acc);
    }
    return out;
  }
  bool valid(std::size_t n, const Value& v) const override {
    if (v.size() != s_ || n * s_ > kMaxBits) return false;
    for (auto w : v) {
      if (static_cast<U64>(w) & ~low_mask(n * s_)) return false;
    }
    return true;
  }
  std::vector<Value> enumerate(std::size_t n) const override {
    checked_bits(n * s_, "ndstate");
    if (n * s_ > 20) throw BudgetExceeded("ndstate: value space too large to enumerate");
    std::vector<std::int64_t> words;
    for (U64 m = 0; m < (U64{1} << (n * s_)); ++m) words.push_back(static_cast<std::int64_t>(m));
    return power_words(words, s_, "ndstate");
  }
  std::string format(std::size_t, const Value& v) const override {
    std::string out = "[";
    const std::size_t k = s_;
    for (std::size_t s = 0; s < s_; ++s) {
      if (s) out += ", ";
      out += "s" + std::to_string(s) + ": ";
      out += set_text(static_cast<U64>(v[s]), [k](std::size_t i) {
        return "(" + std::to_string(i / k) + "," + std::to_string(i % k) + ")";
      });
    }
    return out + "]";
  }
  Value parse(std::size_t n, Scanner& in) const override {
    Value v(s_, 0);
    in.expect("[");
    for (std::size_t s = 0; s < s_; ++s) {
      if (s) in.expect(",");
      expect_state(in, s, s_);
      U64 mask = 0;
      parse_set(in, [&] {
        in.expect("(");
        std::size_t x = in.index(n);
        in.expect(",");
        std::size_t t = in.index(s_);
        in.expect(")");
        mask |= U64{1} << (x * s_ + t);
      });
      v[s] = static_cast<std::int64_t>(mask);
    }
    in.expect("]");
    return v;
  }
  bool has_join() const override { return true; }
  Value bot(std::size_t) const override { return Value(s_, 0); }
  Value join(const Value& a, const Value& b) const override {
    Value out(s_);
    for (std::size_t s = 0; s < s_; ++s) out[s] = a[s] | b[s];
    return out;
  }
  bool leq(const Value& a, const Value& b) const override {
    for (std::size_t s = 0; s < s_; ++s) {
      if (a[s] & ~b[s]) return false;
    }
    return true;
  }
  std::string order_name() const override { return "pointwise inclusion, bottom {}"; }

 private:
  std::size_t s_;
};

// ----------------------------------------------------------- resumption

// Trees are stored in preorder. An input node is followed by one subtree per
// input value; an output node by the output value and a single subtree.
// Guarded nodes at depth >= fuel are cut to the unknown leaf.
class ResumptionMonad final : public Monad {
 public:
  ResumptionMonad(bool input, std::size_t arity, std::size_t fuel)
      : input_(input), arity_(arity), fuel_(fuel) {
    if (arity == 0) throw ShapeError("resumption: alphabet must be non-empty");
  }

  std::string name() const override {
    return std::string(input_ ? "resin:I=" : "resout:O=") + std::to_string(arity_) +
           ",k=" + std::to_string(fuel_);
  }
  Value unit(std::size_t, std::size_t x) const override {
    return Value{enc::kRet, static_cast<std::int64_t>(x)};
  }
  Value extend(const Mor& f, const Value& v) const override {
    Value out;
    std::size_t pos = 0;
    bind(f, v, pos, 0, out);
    return out;
  }
  bool valid(std::size_t n, const Value& v) const override {
    std::size_t pos = 0;
    return check(n, v, pos, 0) && pos == v.size();
  }
  bool enumerable() const override { return false; }
  std::vector<Value> enumerate(std::size_t) const override {
    throw NotEnumerable(name() + " is not enumerable; use --mode sampled");
  }
  Value sample(std::size_t n, Rng& rng) const override {
    Value out;
    grow(n, rng, 0, out);
    return out;
  }
  std::string format(std::size_t, const Value& v) const override {
    std::size_t pos = 0;
    return text(v, pos);
  }
  Value parse(std::size_t n, Scanner& in) const override {
    Value out;
    read(n, in, 0, out);
    return out;
  }
  bool has_order() const override { return true; }
  Value bottom(std::size_t) const override { return Value{enc::kDiv}; }
  bool leq(const Value& a, const Value& b) const override {
    std::size_t i = 0, j = 0;
    return below(a, i, b, j);
  }
  std::size_t iteration_cap() const override { return 100000; }
  std::string order_name() const override { return "prefix order up to depth k, bottom bot"; }
  std::string note() const override {
    return "equality up to depth " + std::to_string(fuel_);
  }

 private:
  std::size_t skip(const Value& v, std::size_t pos) const {
    switch (v[pos]) {
      case enc::kRet: return pos + 2;
      case enc::kNode: {
        if (input_) {
          ++pos;
          for (std::size_t c = 0; c < arity_; ++c) pos = skip(v, pos);
          return pos;
        }
        return skip(v, pos + 2);
      }
      default: return pos + 1;
    }
  }

  // Copies the subtree of v at pos re-rooted at the given depth, cutting
  // guarded nodes that fall outside the fuel.
  void copy(const Value& v, std::size_t& pos, std::size_t depth, Value& out) const {
    std::int64_t tag = v[pos];
    if (tag == enc::kNode && depth >= fuel_) {
      pos = skip(v, pos);
      out.push_back(enc::kUnknown);
      return;
    }
    out.push_back(v[pos++]);
    if (tag == enc::kRet) {
      out.push_back(v[pos++]);
    } else if (tag == enc::kNode) {
      if (input_) {
        for (std::size_t c = 0; c < arity_; ++c) copy(v, pos, depth + 1, out);
      } else {
        out.push_back(v[pos++]);
        copy(v, pos, depth + 1, out);
      }
    }
  }

  void bind(const Mor& f, const Value& v, std::size_t& pos, std::size_t depth, Value& out) const {
    std::int64_t tag = v[pos];
    if (tag == enc::kRet) {
      const Value& sub = f[word_index(v[pos + 1])];
      pos += 2;
      std::size_t p = 0;
      copy(sub, p, depth, out);
      return;
    }
    out.push_back(v[pos++]);
    if (tag != enc::kNode) return;
    if (input_) {
      for (std::size_t c = 0; c < arity_; ++c) bind(f, v, pos, depth + 1, out);
    } else {
      out.push_back(v[pos++]);
      bind(f, v, pos, depth + 1, out);
    }
  }

  bool check(std::size_t n, const Value& v, std::size_t& pos, std::size_t depth) const {
    if (pos >= v.size()) return false;
    std::int64_t tag = v[pos++];
    switch (tag) {
      case enc::kRet:
        if (pos >= v.size()) return false;
        return v[pos] >= 0 && v[pos++] < static_cast<std::int64_t>(n);
      case enc::kDiv:
        return true;
      case enc::kUnknown:
        return depth >= fuel_;
      case enc::kNode:
        if (depth >= fuel_) return false;
        if (input_) {
          for (std::size_t c = 0; c < arity_; ++c) {
            if (!check(n, v, pos, depth + 1)) return false;
          }
          return true;
        }
        if (pos >= v.size() || v[pos] < 0 || v[pos] >= static_cast<std::int64_t>(arity_)) {
          return false;
        }
        ++pos;
        return check(n, v, pos, depth + 1);
      default:
        return false;
    }
  }

  void grow(std::size_t n, Rng& rng, std::size_t depth, Value& out) const {
    std::uniform_int_distribution<int> pick(0, 19);
    int r = pick(rng);
    if (depth >= fuel_ && r >= 12) r = 19;
    if (r < 9 && n > 0) {
      out.push_back(enc::kRet);
      out.push_back(std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng));
    } else if (r < 12 || (r < 9 && n == 0)) {
      out.push_back(enc::kDiv);
    } else if (depth >= fuel_) {
      out.push_back(enc::kUnknown);
    } else {
      out.push_back(enc::kNode);
      if (input_) {
        for (std::size_t c = 0; c < arity_; ++c) grow(n, rng, depth + 1, out);
      } else {
        out.push_back(std::uniform_int_distribution<std::int64_t>(0, arity_ - 1)(rng));
        grow(n, rng, depth + 1, out);
      }
    }
  }

  std::string text(const Value& v, std::size_t& pos) const {
    std::int64_t tag = v[pos++];
    switch (tag) {
      case enc::kRet: return "ret " + std::to_string(v[pos++]);
      case enc::kDiv: return "bot";
      case enc::kUnknown: return "?";
      default: break;
    }
    if (input_) {
      std::string out = "in(";
      for (std::size_t c = 0; c < arity_; ++c) {
        if (c) out += ", ";
        out += text(v, pos);
      }
      return out + ")";
    }
    std::string out = "out " + std::to_string(v[pos++]) + " (";
    return out + text(v, pos) + ")";
  }

  void read(std::size_t n, Scanner& in, std::size_t depth, Value& out) const {
    if (in.accept_word("ret")) {
      out.push_back(enc::kRet);
      out.push_back(static_cast<std::int64_t>(in.index(n)));
    } else if (in.accept_word("bot")) {
      out.push_back(enc::kDiv);
    } else if (in.accept("?")) {
      if (depth < fuel_) in.fail("'?' may only appear at depth " + std::to_string(fuel_));
      out.push_back(enc::kUnknown);
    } else if (input_ && in.accept_word("in")) {
      in.expect("(");
      if (depth >= fuel_) in.fail("tree deeper than fuel");
      out.push_back(enc::kNode);
      for (std::size_t c = 0; c < arity_; ++c) {
        if (c) in.expect(",");
        read(n, in, depth + 1, out);
      }
      in.expect(")");
    } else if (!input_ && in.accept_word("out")) {
      if (depth >= fuel_) in.fail("tree deeper than fuel");
      out.push_back(enc::kNode);
      out.push_back(static_cast<std::int64_t>(in.index(arity_)));
      in.expect("(");
      read(n, in, depth + 1, out);
      in.expect(")");
    } else {
      in.fail(input_ ? "expected ret, bot, ? or in(...)" : "expected ret, bot, ? or out");
    }
  }

  bool below(const Value& a, std::size_t& i, const Value& b, std::size_t& j) const {
    if (a[i] == enc::kDiv) {
      ++i;
      j = skip(b, j);
      return true;
    }
    if (a[i] != b[j]) return false;
    std::int64_t tag = a[i];
    ++i, ++j;
    if (tag == enc::kRet) return a[i++] == b[j++];
    if (tag != enc::kNode) return true;
    if (input_) {
      for (std::size_t c = 0; c < arity_; ++c) {
        if (!below(a, i, b, j)) return false;
      }
      return true;
    }
    if (a[i++] != b[j++]) return false;
    return below(a, i, b, j);
  }

  bool input_;
  std::size_t arity_;
  std::size_t fuel_;
};

}  // namespace

bool Monoid::commutative() const {
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (op(a, b) != op(b, a)) return false;
    }
  }
  return true;
}

Monoid Monoid::from_table(std::string name, std::size_t unit, std::vector<std::size_t> table) {
  Monoid m{std::move(name), 0, unit, std::move(table)};
  std::size_t k = 0;
  while (k * k < m.table.size()) ++k;
  if (k == 0 || k * k != m.table.size()) throw ShapeError("monoid: table is not square");
  m.size = k;
  if (unit >= k) throw ShapeError("monoid: unit outside carrier");
  for (auto t : m.table) {
    if (t >= k) throw ShapeError("monoid: table entry outside carrier");
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (m.op(unit, a) != a || m.op(a, unit) != a) {
      throw ShapeError("monoid: unit law fails at " + std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) {
          throw ShapeError("monoid: not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return m;
}

Monoid Monoid::cyclic(std::size_t n) {
  if (n == 0) throw ShapeError("monoid: z0 is empty");
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  }
  return from_table("z" + std::to_string(n), 0, std::move(t));
}

Monoid Monoid::satnat(std::size_t k) {
  const std::size_t n = k + 1;
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = std::min(a + b, k);
  }
  return from_table("satnat" + std::to_string(k), 0, std::move(t));
}

Monoid parse_monoid(std::string_view text) {
  auto number_after = [&](std::string_view prefix) -> std::size_t {
    Scanner in(text.substr(prefix.size()));
    auto v = in.integer();
    if (!in.at_end() || v < 0) throw ParseError("bad monoid '" + std::string(text) + "'");
    return static_cast<std::size_t>(v);
  };
  if (text.starts_with("satnat")) return Monoid::satnat(number_after("satnat"));
  if (text.starts_with("table")) {
    Scanner in(text.substr(5));
    in.expect("(");
    std::vector<std::size_t> cells;
    std::size_t rows = 0;
    do {
      ++rows;
      while (in.peek() != ';' && in.peek() != ')' && !in.at_end()) {
        auto v = in.integer();
        if (v < 0) in.fail("negative monoid element");
        cells.push_back(static_cast<std::size_t>(v));
      }
    } while (in.accept(";"));
    in.expect(")");
    if (!in.at_end()) in.fail("trailing input");
    if (rows * rows != cells.size()) in.fail("monoid table must be square");
    for (std::size_t u = 0; u < rows; ++u) {
      bool ok = true;
      for (std::size_t a = 0; a < rows && ok; ++a) {
        ok = cells[u * rows + a] == a && cells[a * rows + u] == a;
      }
      if (ok) return Monoid::from_table(std::string(text), u, cells);
    }
    throw ShapeError("monoid: table has no unit");
  }
  if (text.starts_with("z")) return Monoid::cyclic(number_after("z"));
  throw ParseError("unknown monoid '" + std::string(text) +
                   "' (expected z<N>, satnat<K> or table(...))");
}

MonadPtr make_maybe() { return std::make_shared<MaybeMonad>(); }
MonadPtr make_exception(std::size_t exceptions, std::size_t divergence) {
  return std::make_shared<ExceptionMonad>(exceptions, divergence);
}
MonadPtr make_powerset() { return std::make_shared<PowersetMonad>(); }
MonadPtr make_plotkin() { return std::make_shared<PlotkinMonad>(); }
MonadPtr make_ndwriter(Monoid m) { return std::make_shared<NdWriterMonad>(std::move(m)); }
MonadPtr make_subdist() { return std::make_shared<SubdistMonad>(); }
MonadPtr make_pstate(std::size_t states) { return std::make_shared<PStateMonad>(states); }
MonadPtr make_ndstate(std::size_t states) { return std::make_shared<NdStateMonad>(states); }
MonadPtr make_resumption_in(std::size_t inputs, std::size_t fuel) {
  return std::make_shared<ResumptionMonad>(true, inputs, fuel);
}
MonadPtr make_resumption_out(std::size_t outputs, std::size_t fuel) {
  return std::make_shared<ResumptionMonad>(false, outputs, fuel);
}

double weight(const Value& v, std::size_t x) { return word_real(v[x]); }

Value subdist_value(const std::vector<double>& weights) {
  Value v;
  for (double w : weights) v.push_back(real_word(w));
  return v;
}

}  // namespace iterlab
