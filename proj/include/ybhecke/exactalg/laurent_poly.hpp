#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/exactalg/monomial.hpp"

namespace ybhecke {

using Coefficient = mpq_class;

struct Term {
  Monomial mono;
  Coefficient coeff;
};

// Sparse multivariate Laurent polynomial over Q. Terms are kept sorted in
// decreasing monomial order with no zero coefficients, so structural equality
// is mathematical equality and terms_.front() is the leading term.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) terms_.push_back({Monomial(), Coefficient(c)}); }
  LaurentPoly(const Coefficient& c) { if (c != 0) terms_.push_back({Monomial(), c}); }
  LaurentPoly(const Monomial& m, const Coefficient& c = 1) {
    if (c != 0) terms_.push_back({m, c});
  }

  static LaurentPoly variable(VarId v, int power = 1) { return LaurentPoly(Monomial::variable(v, power)); }

  // Builds from arbitrary (unsorted, possibly repeated) terms.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    LaurentPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }

  Coefficient constant_term() const {
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coeff;
    return 0;
  }

  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }

  Coefficient coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono > key; });
    return (it != terms_.end() && it->mono == m) ? it->coeff : Coefficient(0);
  }

  // Componentwise minimum exponent over all terms (the monomial gcd).
  Monomial monomial_content() const {
    if (terms_.empty()) return Monomial();
    Monomial g = terms_[0].mono;
    for (const auto& t : terms_) g = Monomial::meet(g, t.mono);
    return g;
  }

  bool has_negative_exponent() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.has_negative(); });
  }

  bool laurent_valid() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.laurent_valid(); });
  }

  bool uses(int slot) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[slot] != 0; });
  }

  int total_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      d = first ? t.mono.degree() : std::max(d, t.mono.degree());
      first = false;
    }
    return d;
  }

  // Positive rational c with this = c * (integer polynomial with gcd 1).
  Coefficient content() const {
    if (terms_.empty()) return 0;
    mpz_class num = 0, den = 1;
    for (const auto& t : terms_) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Coefficient c(num, den);
    c.canonicalize();
    return c;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.scaled(a.terms_[0].coeff, a.terms_[0].mono);
    if (b.size() == 1) return a.scaled(b.terms_[0].coeff, b.terms_[0].mono);
    std::unordered_map<Monomial, Coefficient> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
    LaurentPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.push_back({m, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // c * m * this; multiplication by a monomial preserves the term order.
  LaurentPoly scaled(const Coefficient& c, const Monomial& m = Monomial()) const {
    if (c == 0) return {};
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    bool shift = !m.is_one();
    for (const auto& t : terms_) r.terms_.push_back({shift ? t.mono * m : t.mono, t.coeff * c});
    return r;
  }

  LaurentPoly pow(int k) const {
    if (k < 0) {
      if (!is_monomial()) throw InvalidPolynomial("negative power of a non-monomial");
      Coefficient c = 1 / leading().coeff;
      return LaurentPoly(leading().mono.inverse(), c).pow(-k);
    }
    LaurentPoly r = 1, base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return r;
  }

  // Exact quotient this / d for polynomials with nonnegative exponents;
  // nullopt if d does not divide. Leading/trailing monomials are checked first
  // so that most failed trial divisions cost almost nothing.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return LaurentPoly();
    if (d.is_monomial()) return scaled(1 / d.leading().coeff, d.leading().mono.inverse());
    if (size() < 2 || !leading().mono.divisible_by(d.leading().mono) ||
        !trailing().mono.divisible_by(d.trailing().mono) ||
        total_degree() < d.total_degree())
      return std::nullopt;
    std::map<Monomial, Coefficient, std::greater<>> rem;
    for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
    const Term& ld = d.leading();
    Coefficient inv = 1 / ld.coeff;
    std::vector<Term> quot;
    while (!rem.empty()) {
      auto it = rem.begin();
      if (!it->first.divisible_by(ld.mono)) return std::nullopt;
      Monomial qm = it->first / ld.mono;
      Coefficient qc = it->second * inv;
      for (const auto& t : d.terms_) {
        Monomial m = t.mono * qm;
        auto [pos, inserted] = rem.try_emplace(m, 0);
        pos->second -= qc * t.coeff;
        if (pos->second == 0) rem.erase(pos);
      }
      quot.push_back({qm, qc});
    }
    LaurentPoly q;
    q.terms_ = std::move(quot);  // produced in decreasing order
    return q;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }

  // Total order used to keep factor lists sorted; unrelated to divisibility.
  friend bool structural_less(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono) return a.terms_[i].mono < b.terms_[i].mono;
      if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
      h = h * 31 + t.mono.hash();
      h ^= std::hash<long>()(mpz_get_si(t.coeff.get_num_mpz_t())) + 0x9e3779b97f4a7c15ull + (h << 6);
    }
    return h;
  }

 private:
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    LaurentPoly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].mono > b.terms_[j].mono)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].mono > a.terms_[i].mono) {
        const Term& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? Coefficient(-t.coeff) : t.coeff});
      } else {
        Coefficient c = a.terms_[i].coeff;
        if (subtract) c -= b.terms_[j].coeff;
        else c += b.terms_[j].coeff;
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i, ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

// Sum of the terms of minimal total degree in `vars` (signed exponents).
inline LaurentPoly lowest_homogeneous_component(const LaurentPoly& p, VarSet vars) {
  if (p.is_zero()) throw ZeroPolynomial("lowest component of zero");
  for (const auto& t : p.terms())
    for (int s = 0; s < Monomial::kSlots; ++s)
      if (vars.contains(s) && t.mono[s] < 0)
        throw InvalidPolynomial("negative exponent in a graded variable");
  int lo = p.terms().front().mono.degree_in(vars);
  for (const auto& t : p.terms()) lo = std::min(lo, t.mono.degree_in(vars));
  std::vector<Term> keep;
  for (const auto& t : p.terms())
    if (t.mono.degree_in(vars) == lo) keep.push_back(t);
  return LaurentPoly::from_terms(std::move(keep));
}

}  // namespace ybhecke
