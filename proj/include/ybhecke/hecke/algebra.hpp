#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/exactalg/rational_function.hpp"
#include "ybhecke/exactalg/substitute.hpp"
#include "ybhecke/polyops/operators.hpp"
#include "ybhecke/symgroup/permutation.hpp"

namespace ybhecke {

enum class SpectralMode { additive, multiplicative };

// Hecke-type algebra of rank n with generators D_1..D_{n-1}, braid relations
// and D_i^2 = a D_i + b.
struct AlgebraSpec {
  OperatorFamily family;
  int n = 1;
  RationalFunction a, b;
  SpectralMode mode = SpectralMode::additive;

  AlgebraSpec() = default;
  AlgebraSpec(OperatorFamily fam, int rank) : family(std::move(fam)), n(rank) {
    if (n < 1 || n > kMaxRank) throw RankOutOfRange("algebra rank must be in 1..9");
    std::tie(a, b) = family.quadratic();
    bool mult = family.tag == Family::pi || family.tag == Family::pibar || family.tag == Family::T;
    mode = mult ? SpectralMode::multiplicative : SpectralMode::additive;
  }

  Family tag() const { return family.tag; }
  std::string name() const { return family.name(); }

  friend bool operator==(const AlgebraSpec& x, const AlgebraSpec& y) {
    return x.family.tag == y.family.tag && x.n == y.n && x.a == y.a && x.b == y.b;
  }
};

// Finitely supported map mu -> coefficient, read as sum c_mu D_mu.
class HeckeElement {
 public:
  using Map = std::map<Permutation, RationalFunction>;

  HeckeElement() = default;
  explicit HeckeElement(AlgebraSpec alg) : alg_(std::move(alg)) {}

  static HeckeElement basis(const AlgebraSpec& alg, const Permutation& mu, RationalFunction c = 1) {
    if (mu.rank() != alg.n) throw RankMismatch("basis element rank differs from algebra rank");
    HeckeElement h(alg);
    h.add_term(mu, std::move(c));
    return h;
  }
  static HeckeElement one(const AlgebraSpec& alg) { return basis(alg, Permutation::identity(alg.n)); }
  static HeckeElement generator(const AlgebraSpec& alg, int i) { return basis(alg, Permutation::simple(alg.n, i)); }

  const AlgebraSpec& algebra() const { return alg_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RationalFunction coefficient(const Permutation& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  void add_term(const Permutation& mu, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    check_same(o);
    for (const auto& [mu, c] : o.terms_) add_term(mu, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    check_same(o);
    for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement x, const HeckeElement& y) { return x += y; }
  friend HeckeElement operator-(HeckeElement x, const HeckeElement& y) { return x -= y; }

  HeckeElement scaled(const RationalFunction& c) const {
    HeckeElement r(alg_);
    if (c.is_zero()) return r;
    for (const auto& [mu, v] : terms_) r.terms_.emplace(mu, v * c);
    return r;
  }

  // Coefficient-wise map.
  template <class F>
  HeckeElement map_coefficients(F&& f) const {
    HeckeElement r(alg_);
    for (const auto& [mu, v] : terms_) r.add_term(mu, f(v));
    return r;
  }

  friend bool operator==(const HeckeElement& x, const HeckeElement& y) {
    if (!(x.alg_.family.tag == y.alg_.family.tag && x.alg_.n == y.alg_.n)) return false;
    if (x.terms_.size() != y.terms_.size()) return false;
    for (auto i = x.terms_.begin(), j = y.terms_.begin(); i != x.terms_.end(); ++i, ++j)
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
  }

  void check_same(const HeckeElement& o) const {
    if (!(alg_.family.tag == o.alg_.family.tag) || alg_.n != o.alg_.n)
      throw AlgebraMismatch("elements belong to different algebras");
  }

 private:
  AlgebraSpec alg_;
  Map terms_;
};

// h * D_i: D_mu D_i = D_{mu s_i} if the length rises, a D_mu + b D_{mu s_i}
// otherwise.
inline HeckeElement mul_by_generator(const HeckeElement& h, int i) {
  const AlgebraSpec& alg = h.algebra();
  if (i < 1 || i >= alg.n) throw IndexOutOfRange("generator index " + std::to_string(i) + " out of range for n=" + std::to_string(alg.n));
  HeckeElement r(alg);
  bool a0 = alg.a.is_zero(), b0 = alg.b.is_zero();
  bool a1 = alg.a.is_one(), b1 = alg.b.is_one();
  for (const auto& [mu, c] : h.terms()) {
    Permutation nu = mu.times_simple(i);
    if (!mu.has_descent(i)) {
      r.add_term(nu, c);
    } else {
      if (!a0) r.add_term(mu, a1 ? c : c * alg.a);
      if (!b0) r.add_term(nu, b1 ? c : c * alg.b);
    }
  }
  return r;
}

inline HeckeElement mul_by_word(HeckeElement h, const Word& w) {
  for (int i : w) h = mul_by_generator(h, i);
  return h;
}

// Product expanding h2 along canonical reduced words.
inline HeckeElement mul(const HeckeElement& h1, const HeckeElement& h2) {
  h1.check_same(h2);
  HeckeElement r(h1.algebra());
  for (const auto& [nu, c] : h2.terms()) r += mul_by_word(h1, nu.reduced_word()).scaled(c);
  return r;
}

inline HeckeElement operator*(const HeckeElement& h1, const HeckeElement& h2) { return mul(h1, h2); }

// The operator sum c_mu D_mu applied to f.
inline RationalFunction realize(const HeckeElement& h, const RationalFunction& f, VarFamily on = VarFamily::x) {
  RationalFunction r;
  for (const auto& [mu, c] : h.terms()) r += apply_permutation(h.algebra().family, mu, f, on) * c;
  return r;
}

// Specializes every coefficient (e.g. q1, q2 -> numbers), moving the element
// into the algebra `target`.
inline HeckeElement specialize(const HeckeElement& h, const Substitution& s, const AlgebraSpec& target) {
  HeckeElement r(target);
  for (const auto& [mu, c] : h.terms()) r.add_term(mu, s(c));
  return r;
}

}  // namespace ybhecke
