#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "ybhecke/errors.hpp"

namespace ybhecke {

// Largest rank supported by the fixed-width exponent layout (and by the
// digit-string permutation notation).
inline constexpr int kMaxRank = 9;

// Variable families, listed in increasing monomial-order priority.
enum class VarFamily : std::uint8_t { q1, q2, u, y, x };

class VarId {
 public:
  static constexpr int kSlots = 2 + 3 * kMaxRank;

  constexpr VarId() = default;
  constexpr VarId(VarFamily family, int index) : family_(family), index_(index) {
    bool indexed = family != VarFamily::q1 && family != VarFamily::q2;
    if (indexed ? (index < 1 || index > kMaxRank) : index != 0)
      throw InvalidPolynomial("variable index out of range");
  }

  static constexpr VarId x(int i) { return {VarFamily::x, i}; }
  static constexpr VarId y(int i) { return {VarFamily::y, i}; }
  static constexpr VarId u(int i) { return {VarFamily::u, i}; }
  static constexpr VarId q1() { return {VarFamily::q1, 0}; }
  static constexpr VarId q2() { return {VarFamily::q2, 0}; }

  constexpr VarFamily family() const { return family_; }
  constexpr int index() const { return index_; }

  // Position in the exponent array; larger slot = larger variable.
  // Layout: q1 q2 u1..u9 y1..y9 x1..x9.
  constexpr int slot() const {
    switch (family_) {
      case VarFamily::q1: return 0;
      case VarFamily::q2: return 1;
      case VarFamily::u: return 1 + index_;
      case VarFamily::y: return 1 + kMaxRank + index_;
      case VarFamily::x: return 1 + 2 * kMaxRank + index_;
    }
    return 0;
  }

  static constexpr VarId from_slot(int slot) {
    if (slot == 0) return q1();
    if (slot == 1) return q2();
    if (slot <= 1 + kMaxRank) return u(slot - 1);
    if (slot <= 1 + 2 * kMaxRank) return y(slot - 1 - kMaxRank);
    return x(slot - 1 - 2 * kMaxRank);
  }

  // Only x and u variables may carry negative exponents in a LaurentPoly.
  constexpr bool laurent_allowed() const {
    return family_ == VarFamily::x || family_ == VarFamily::u;
  }

  std::string name() const {
    switch (family_) {
      case VarFamily::q1: return "q1";
      case VarFamily::q2: return "q2";
      case VarFamily::u: return "u" + std::to_string(index_);
      case VarFamily::y: return "y" + std::to_string(index_);
      case VarFamily::x: return "x" + std::to_string(index_);
    }
    return {};
  }

  friend constexpr bool operator==(VarId a, VarId b) = default;

 private:
  VarFamily family_ = VarFamily::q1;
  int index_ = 0;
};

// Bit set over variable slots.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<VarId> vars) {
    for (VarId v : vars) insert(v);
  }
  constexpr void insert(VarId v) { bits_ |= (1u << v.slot()); }
  constexpr bool contains(int slot) const { return (bits_ >> slot) & 1u; }
  constexpr bool contains(VarId v) const { return contains(v.slot()); }
  constexpr bool empty() const { return bits_ == 0; }

  static constexpr VarSet family(VarFamily f, int n) {
    VarSet s;
    for (int i = 1; i <= n; ++i) s.insert(VarId(f, i));
    return s;
  }

  friend constexpr VarSet operator|(VarSet a, VarSet b) {
    VarSet s;
    s.bits_ = a.bits_ | b.bits_;
    return s;
  }

 private:
  std::uint32_t bits_ = 0;
};

// Exponent vector with signed entries. Ordered graded-lexicographically:
// total degree first, then exponents compared from the largest variable down.
class Monomial {
 public:
  static constexpr int kSlots = VarId::kSlots;

  Monomial() { exp_.fill(0); }

  static Monomial variable(VarId v, int power = 1) {
    Monomial m;
    m.set(v.slot(), power);
    return m;
  }

  int operator[](int slot) const { return exp_[slot]; }
  int exponent(VarId v) const { return exp_[v.slot()]; }
  int degree() const { return degree_; }

  int degree_in(VarSet vars) const {
    int d = 0;
    for (int s = 0; s < kSlots; ++s)
      if (vars.contains(s)) d += exp_[s];
    return d;
  }

  void set(int slot, int e) {
    check_range(e);
    degree_ = static_cast<std::int16_t>(degree_ - exp_[slot] + e);
    exp_[slot] = static_cast<std::int8_t>(e);
  }

  bool is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](std::int8_t e) { return e == 0; });
  }

  bool has_negative() const {
    return std::any_of(exp_.begin(), exp_.end(), [](std::int8_t e) { return e < 0; });
  }

  // True if every negative exponent sits on an x or u variable.
  bool laurent_valid() const {
    for (int s = 0; s < kSlots; ++s)
      if (exp_[s] < 0 && !VarId::from_slot(s).laurent_allowed()) return false;
    return true;
  }

  // Every exponent of this is >= the matching exponent of d.
  bool divisible_by(const Monomial& d) const {
    for (int s = 0; s < kSlots; ++s)
      if (exp_[s] < d.exp_[s]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int s = 0; s < kSlots; ++s) r.set(s, exp_[s] + o.exp_[s]);
    return r;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int s = 0; s < kSlots; ++s) r.set(s, exp_[s] - o.exp_[s]);
    return r;
  }
  Monomial inverse() const { return Monomial() / *this; }
  Monomial power(int k) const {
    Monomial r;
    for (int s = 0; s < kSlots; ++s) r.set(s, exp_[s] * k);
    return r;
  }

  // Componentwise min / max.
  static Monomial meet(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int s = 0; s < kSlots; ++s) r.set(s, std::min(a.exp_[s], b.exp_[s]));
    return r;
  }
  static Monomial join(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int s = 0; s < kSlots; ++s) r.set(s, std::max(a.exp_[s], b.exp_[s]));
    return r;
  }

  // Split into positive and (negated) negative parts: m = pos / neg.
  Monomial positive_part() const {
    Monomial r;
    for (int s = 0; s < kSlots; ++s) r.set(s, std::max<int>(exp_[s], 0));
    return r;
  }
  Monomial negative_part() const {
    Monomial r;
    for (int s = 0; s < kSlots; ++s) r.set(s, std::max<int>(-exp_[s], 0));
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (int s = kSlots - 1; s >= 0; --s)
      if (auto c = a.exp_[s] <=> b.exp_[s]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::int8_t e : exp_) {
      h ^= static_cast<std::uint8_t>(e);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  static void check_range(int e) {
    if (e < -127 || e > 127) throw InvalidPolynomial("exponent overflow");
  }

  std::array<std::int8_t, kSlots> exp_;
  std::int16_t degree_ = 0;
};

}  // namespace ybhecke

template <>
struct std::hash<ybhecke::Monomial> {
  std::size_t operator()(const ybhecke::Monomial& m) const { return m.hash(); }
};
