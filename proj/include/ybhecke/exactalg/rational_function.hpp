#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/exactalg/laurent_poly.hpp"

namespace ybhecke {

// Element of Q(q1, q2, u, y, x), stored as
//
//     mono * poly / (f_1^k_1 * ... * f_r^k_r)
//
// where mono is a Laurent monomial, poly has nonnegative exponents and no
// monomial content, and every f_i is a canonical factor: integer coefficients
// with gcd 1, positive leading coefficient, no monomial content, at least two
// terms. Factors are kept sorted and distinct. Nothing here needs a
// multivariate gcd: common factors are cancelled by trial division against the
// known denominator factors, and equality never depends on full reduction.
class RationalFunction {
 public:
  struct Factor {
    LaurentPoly poly;
    int mult;
  };

  RationalFunction() = default;
  RationalFunction(long c) : poly_(c) {}
  RationalFunction(const Coefficient& c) : poly_(c) {}
  RationalFunction(const LaurentPoly& p) { *this = from_parts(Monomial(), p, {}); }

  static RationalFunction variable(VarId v, int power = 1) {
    RationalFunction r(1);
    r.mono_ = Monomial::variable(v, power);
    return r;
  }

  // Builds num / den; den must be nonzero.
  static RationalFunction quotient(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    return from_parts(Monomial(), num, {{den, 1}});
  }

  bool is_zero() const { return poly_.is_zero(); }
  bool is_one() const { return mono_.is_one() && factors_.empty() && poly_.is_one(); }
  bool is_constant() const { return mono_.is_one() && factors_.empty() && poly_.is_constant(); }
  bool is_polynomial() const {
    return factors_.empty() && mono_.positive_part() == mono_;
  }
  // Denominator is a monomial, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return factors_.empty(); }

  const Monomial& monomial_part() const { return mono_; }
  const LaurentPoly& polynomial_part() const { return poly_; }
  const std::vector<Factor>& factors() const { return factors_; }

  LaurentPoly numerator() const { return poly_.scaled(1, mono_.positive_part()); }
  LaurentPoly denominator() const {
    LaurentPoly d(mono_.negative_part());
    for (const auto& f : factors_) d *= f.poly.pow(f.mult);
    return d;
  }
  // The value as a Laurent polynomial; only valid when is_laurent().
  LaurentPoly as_laurent() const {
    if (!is_laurent()) throw InvalidPolynomial("rational function has a non-monomial denominator");
    return poly_.scaled(1, mono_);
  }

  Coefficient constant_value() const {
    if (!is_constant()) throw InvalidPolynomial("not a constant");
    return poly_.constant_term();
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.poly_ = -r.poly_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return add(a, b, false); }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return add(a, b, true); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.poly_.constant_term());
    if (b.is_constant()) return a.scaled(b.poly_.constant_term());
    LaurentPoly pa = a.poly_, pb = b.poly_;
    std::vector<Factor> fa = a.factors_, fb = b.factors_;
    cancel(pa, fb);
    cancel(pb, fa);
    RationalFunction r;
    r.mono_ = a.mono_ * b.mono_;
    r.poly_ = pa * pb;
    r.factors_ = merge_factors(fa, fb, false);
    return r;
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction scaled(const Coefficient& c) const {
    if (c == 0) return {};
    RationalFunction r = *this;
    r.poly_ = r.poly_.scaled(c);
    return r;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    RationalFunction r;
    r.mono_ = mono_.inverse();
    LaurentPoly num = 1;
    for (const auto& f : factors_) num *= f.poly.pow(f.mult);
    Coefficient lc = poly_.leading().coeff;
    if (poly_.is_monomial()) {
      r.poly_ = num.scaled(1 / lc);
      r.factors_.clear();
      return r;
    }
    Coefficient c = poly_.content();
    if (lc < 0) c = -c;
    r.poly_ = num.scaled(1 / c);
    r.factors_ = {{poly_.scaled(1 / c), 1}};
    return r;
  }

  RationalFunction pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFunction r = 1, base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.factors_.size() == b.factors_.size() && a.mono_ == b.mono_ && a.poly_ == b.poly_) {
      bool same = true;
      for (std::size_t i = 0; i < a.factors_.size() && same; ++i)
        same = a.factors_[i].mult == b.factors_[i].mult && a.factors_[i].poly == b.factors_[i].poly;
      if (same) return true;
    }
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    // Cross-multiply over the least common multiple of the factor lists.
    auto l = merge_factors(a.factors_, b.factors_, true);
    Monomial g = Monomial::meet(a.mono_, b.mono_);
    LaurentPoly na = a.poly_.scaled(1, a.mono_ / g) * cofactor(l, a.factors_);
    LaurentPoly nb = b.poly_.scaled(1, b.mono_ / g) * cofactor(l, b.factors_);
    return na == nb;
  }

  // Best-effort simplification: retries cancellation of every factor against
  // the numerator. Arithmetic already does this locally; substitution results
  // and tests call it explicitly.
  RationalFunction reduced() const {
    RationalFunction r = *this;
    cancel(r.poly_, r.factors_);
    return r;
  }

  // Canonicalizes mono * num / prod(den_i ^ k_i) for arbitrary Laurent inputs.
  static RationalFunction from_parts(Monomial mono, const LaurentPoly& num, const std::vector<Factor>& den) {
    RationalFunction r;
    if (num.is_zero()) return r;
    Coefficient scale = 1;
    std::vector<Factor> fs;
    for (const auto& [p, k] : den) {
      if (p.is_zero()) throw DivisionByZero("zero denominator factor");
      if (k == 0) continue;
      if (k < 0) throw InvalidPolynomial("negative factor multiplicity");
      Monomial mc = p.monomial_content();
      mono = mono * mc.power(-k);
      if (p.is_monomial()) {
        scale /= pow_coeff(p.leading().coeff, k);
        continue;
      }
      Coefficient c = p.content();
      if (p.leading().coeff < 0) c = -c;
      scale /= pow_coeff(c, k);
      fs.push_back({p.scaled(1 / c, mc.inverse()), k});
    }
    Monomial nc = num.monomial_content();
    r.mono_ = mono * nc;
    r.poly_ = num.scaled(scale, nc.inverse());
    std::sort(fs.begin(), fs.end(), [](const Factor& x, const Factor& y) { return structural_less(x.poly, y.poly); });
    r.factors_ = merge_factors(fs, {}, false);
    cancel(r.poly_, r.factors_);
    return r;
  }

 private:
  static Coefficient pow_coeff(const Coefficient& c, int k) {
    Coefficient r = 1;
    for (int i = 0; i < k; ++i) r *= c;
    return r;
  }

  // Divides p by factors of fs as long as the division is exact, lowering
  // their multiplicities; exhausted factors are removed.
  static void cancel(LaurentPoly& p, std::vector<Factor>& fs) {
    if (p.is_zero() || p.size() < 2) return;
    for (auto& f : fs) {
      while (f.mult > 0 && p.size() >= f.poly.size()) {
        auto q = p.divide_exact(f.poly);
        if (!q) break;
        p = std::move(*q);
        --f.mult;
      }
    }
    std::erase_if(fs, [](const Factor& f) { return f.mult == 0; });
  }

  // Merges two sorted factor lists, adding multiplicities (or taking the max
  // when lcm is set).
  static std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b, bool lcm) {
    std::vector<Factor> r;
    r.reserve(a.size() + b.size());
    auto push = [&](const Factor& f) {
      if (!r.empty() && r.back().poly == f.poly) {
        r.back().mult = lcm ? std::max(r.back().mult, f.mult) : r.back().mult + f.mult;
      } else {
        r.push_back(f);
      }
    };
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && structural_less(a[i].poly, b[j].poly)))
        push(a[i++]);
      else
        push(b[j++]);
    }
    return r;
  }

  // prod over l of f^(k_l - k_sub), where sub is a sub-multiset of l.
  static LaurentPoly cofactor(const std::vector<Factor>& l, const std::vector<Factor>& sub) {
    LaurentPoly r = 1;
    std::size_t j = 0;
    for (const auto& f : l) {
      int k = f.mult;
      if (j < sub.size() && sub[j].poly == f.poly) k -= sub[j++].mult;
      if (k > 0) r *= f.poly.pow(k);
    }
    return r;
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    auto l = merge_factors(a.factors_, b.factors_, true);
    Monomial g = Monomial::meet(a.mono_, b.mono_);
    LaurentPoly na = a.poly_.scaled(1, a.mono_ / g) * cofactor(l, a.factors_);
    LaurentPoly nb = b.poly_.scaled(1, b.mono_ / g) * cofactor(l, b.factors_);
    LaurentPoly sum = subtract ? na - nb : na + nb;
    RationalFunction r;
    if (sum.is_zero()) return r;
    Monomial c = sum.monomial_content();
    r.mono_ = g * c;
    r.poly_ = c.is_one() ? std::move(sum) : sum.scaled(1, c.inverse());
    r.factors_ = std::move(l);
    cancel(r.poly_, r.factors_);
    return r;
  }

  Monomial mono_;
  LaurentPoly poly_;
  std::vector<Factor> factors_;
};

}  // namespace ybhecke
