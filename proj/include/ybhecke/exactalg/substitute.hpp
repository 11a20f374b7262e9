#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/exactalg/rational_function.hpp"

namespace ybhecke {

// Field homomorphism given by images of variables; unmapped variables are
// fixed. When every image is a Laurent polynomial (and variables occurring
// with negative exponents map to monomials) the image is computed with
// polynomial arithmetic only; otherwise it falls back to field arithmetic.
class Substitution {
 public:
  Substitution& set(VarId v, RationalFunction image) {
    images_[v.slot()] = std::move(image);
    return *this;
  }
  Substitution& rename(VarId from, VarId to, int power = 1) {
    return set(from, RationalFunction::variable(to, power));
  }

  const std::optional<RationalFunction>& image(VarId v) const { return images_[v.slot()]; }

  RationalFunction operator()(const RationalFunction& f) const {
    if (f.is_zero()) return f;
    if (polynomial_path_ok(f)) return apply_laurent(f);
    return apply_general(f);
  }

  RationalFunction operator()(const LaurentPoly& p) const { return (*this)(RationalFunction(p)); }

 private:
  bool polynomial_path_ok(const RationalFunction& f) const {
    for (int s = 0; s < Monomial::kSlots; ++s) {
      if (!images_[s]) continue;
      if (!images_[s]->is_laurent()) return false;
      if (f.monomial_part()[s] < 0 && images_[s]->polynomial_part().size() != 1) return false;
    }
    return true;
  }

  struct PowerCache {
    const Substitution* sub;
    std::map<std::pair<int, int>, LaurentPoly> cache;
    std::array<std::optional<LaurentPoly>, Monomial::kSlots> base;

    const LaurentPoly& get(int slot, int e) {
      auto key = std::make_pair(slot, e);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
      if (!base[slot]) base[slot] = sub->images_[slot]->as_laurent();
      return cache.emplace(key, base[slot]->pow(e)).first->second;
    }
  };

  // Image of a single monomial times a coefficient, as a Laurent polynomial.
  LaurentPoly eval_term(const Monomial& m, const Coefficient& c, PowerCache& pc) const {
    Monomial fixed;
    LaurentPoly acc(Monomial(), c);
    for (int s = 0; s < Monomial::kSlots; ++s) {
      int e = m[s];
      if (e == 0) continue;
      if (!images_[s]) {
        fixed.set(s, e);
      } else {
        acc = acc * pc.get(s, e);
        if (acc.is_zero()) return acc;
      }
    }
    return fixed.is_one() ? acc : acc.scaled(1, fixed);
  }

  LaurentPoly eval_poly(const LaurentPoly& p, PowerCache& pc) const {
    bool all_monomial = true;
    for (int s = 0; s < Monomial::kSlots && all_monomial; ++s)
      if (images_[s] && images_[s]->polynomial_part().size() > 1 && p.uses(s)) all_monomial = false;
    if (all_monomial) {
      std::vector<Term> out;
      out.reserve(p.size());
      for (const auto& t : p.terms()) {
        LaurentPoly img = eval_term(t.mono, t.coeff, pc);
        if (!img.is_zero()) out.push_back(img.terms()[0]);
      }
      return LaurentPoly::from_terms(std::move(out));
    }
    LaurentPoly r;
    for (const auto& t : p.terms()) r += eval_term(t.mono, t.coeff, pc);
    return r;
  }

  RationalFunction apply_laurent(const RationalFunction& f) const {
    PowerCache pc{this, {}, {}};
    LaurentPoly num = eval_poly(f.polynomial_part(), pc) * eval_term(f.monomial_part(), 1, pc);
    std::vector<RationalFunction::Factor> den;
    for (const auto& fac : f.factors()) {
      LaurentPoly img = eval_poly(fac.poly, pc);
      if (img.is_zero()) throw SubstitutionSingular("denominator factor maps to zero");
      den.push_back({std::move(img), fac.mult});
    }
    return RationalFunction::from_parts(Monomial(), num, den);
  }

  RationalFunction apply_general(const RationalFunction& f) const {
    std::map<std::pair<int, int>, RationalFunction> cache;
    auto power = [&](int s, int e) -> const RationalFunction& {
      auto key = std::make_pair(s, e);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
      if (e < 0 && images_[s]->is_zero()) throw SubstitutionSingular("negative power of a variable mapped to zero");
      return cache.emplace(key, images_[s]->pow(e)).first->second;
    };
    auto eval_mono = [&](const Monomial& m) {
      RationalFunction acc = 1;
      Monomial fixed;
      for (int s = 0; s < Monomial::kSlots; ++s) {
        if (m[s] == 0) continue;
        if (images_[s]) acc *= power(s, m[s]);
        else fixed.set(s, m[s]);
      }
      return acc * RationalFunction(LaurentPoly(fixed));
    };
    auto eval_poly = [&](const LaurentPoly& p) {
      RationalFunction r;
      for (const auto& t : p.terms()) r += eval_mono(t.mono).scaled(t.coeff);
      return r;
    };
    RationalFunction den = 1;
    for (const auto& fac : f.factors()) {
      RationalFunction img = eval_poly(fac.poly);
      if (img.is_zero()) throw SubstitutionSingular("denominator factor maps to zero");
      den *= img.pow(fac.mult);
    }
    return (eval_mono(f.monomial_part()) * eval_poly(f.polynomial_part()) / den).reduced();
  }

  std::array<std::optional<RationalFunction>, Monomial::kSlots> images_;
};

inline RationalFunction substitute(const RationalFunction& f, const Substitution& s) { return s(f); }

}  // namespace ybhecke
