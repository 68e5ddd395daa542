#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "iterlab/laws.hpp"

namespace iterlab::detail {

// Carrier size as a linear combination of X, Y, Z.
struct Dim {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;

  std::size_t eval(const Sizes& s) const { return x * s.x + y * s.y + z * s.z; }
  Dim operator+(const Dim& o) const { return {x + o.x, y + o.y, z + o.z}; }
};

inline constexpr Dim kX{1, 0, 0};
inline constexpr Dim kY{0, 1, 0};
inline constexpr Dim kZ{0, 0, 1};

enum class SlotKind { Kleisli, Base, Decision };

struct Ctx {
  const Instance& inst;
  const Monad& m;
  Sizes s;

  std::size_t X() const { return s.x; }
  std::size_t Y() const { return s.y; }
  std::size_t Z() const { return s.z; }
  const ElgotInstance& e() const { return *inst.elgot; }
  const KleeneInstance& k() const { return *inst.kleene; }
};

// The slot values of one case. Base slots are stored both as a table of
// one-word values and as a BaseFun. Memo entries cache values derived from a
// prefix of the slots and are dropped as soon as that prefix changes.
class Case {
 public:
  explicit Case(std::size_t slots) : mors_(slots), bases_(slots) {}

  const Mor& operator[](std::size_t i) const { return mors_[i]; }
  const BaseFun& base(std::size_t i) const { return bases_[i]; }

  void set(std::size_t i, Mor mor, SlotKind kind) {
    if (kind == SlotKind::Base) {
      BaseFun& b = bases_[i];
      b.dom = mor.dom;
      b.cod = mor.cod;
      b.table.resize(mor.dom);
      for (std::size_t x = 0; x < mor.dom; ++x) b.table[x] = static_cast<std::size_t>(mor[x][0]);
    }
    mors_[i] = std::move(mor);
    touch(i);
  }
  void set_point(std::size_t i, std::size_t x, const Value& v, SlotKind kind) {
    mors_[i].table[x] = v;
    if (kind == SlotKind::Base) bases_[i].table[x] = static_cast<std::size_t>(v[0]);
    touch(i);
  }
  void shape(std::size_t i, std::size_t dom, std::size_t cod, SlotKind kind) {
    mors_[i] = Mor{dom, cod, std::vector<Value>(dom)};
    if (kind == SlotKind::Base) bases_[i] = BaseFun{dom, cod, std::vector<std::size_t>(dom)};
  }

  template <class F>
  const Mor& memo(std::size_t key, std::size_t depends_on, F&& compute) const {
    auto& slot = memo_[key];
    if (!slot) {
      slot = compute();
      memo_dep_[key] = depends_on;
    }
    return *slot;
  }

 private:
  void touch(std::size_t i) {
    for (std::size_t k = 0; k < memo_.size(); ++k) {
      if (memo_[k] && memo_dep_[k] >= i) memo_[k].reset();
    }
  }

  std::vector<Mor> mors_;
  std::vector<BaseFun> bases_;
  mutable std::array<std::optional<Mor>, 6> memo_;
  mutable std::array<std::size_t, 6> memo_dep_{};
};

// Premise restriction of one slot, decided point by point given the earlier
// slots of the case.
using PointFilter = std::function<bool(const Ctx&, const Case&, std::size_t x, const Value& v)>;
// Directed sampler for a premise-restricted slot; nullopt rejects the case.
using SlotDraw = std::function<std::optional<Mor>(const Ctx&, const Case&, Rng&)>;

struct Slot {
  std::string name;
  SlotKind kind = SlotKind::Kleisli;
  Dim dom;
  Dim cod;
  PointFilter filter;
  SlotDraw draw;
};

using Sides = std::pair<Mor, Mor>;
using Body = std::function<Sides(const Ctx&, Case&)>;

struct LawDef {
  LawInfo info;
  std::vector<Slot> slots;
  Body body;
};

const std::vector<LawDef>& law_defs();
const LawDef& law_def(std::string_view id);

}  // namespace iterlab::detail
