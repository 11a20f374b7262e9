#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/exactalg/rational_function.hpp"
#include "ybhecke/exactalg/substitute.hpp"
#include "ybhecke/symgroup/permutation.hpp"

namespace ybhecke {

enum class Family { sigma, partial, s, pi, pibar, T };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::sigma: return "sigma";
    case Family::partial: return "partial";
    case Family::s: return "s";
    case Family::pi: return "pi";
    case Family::pibar: return "pibar";
    case Family::T: return "T";
  }
  return {};
}

inline Family parse_family(std::string_view s) {
  for (Family f : {Family::sigma, Family::partial, Family::s, Family::pi, Family::pibar, Family::T})
    if (family_name(f) == s) return f;
  throw ParseError("unknown operator family '" + std::string(s) + "'");
}

// An operator family; q1, q2 only matter for T and default to the formal
// variables.
struct OperatorFamily {
  Family tag = Family::partial;
  RationalFunction q1 = RationalFunction::variable(VarId::q1());
  RationalFunction q2 = RationalFunction::variable(VarId::q2());

  OperatorFamily() = default;
  OperatorFamily(Family f) : tag(f) {}
  OperatorFamily(Family f, RationalFunction p1, RationalFunction p2) : tag(f), q1(std::move(p1)), q2(std::move(p2)) {}

  // Quadratic relation D_i^2 = a D_i + b.
  std::pair<RationalFunction, RationalFunction> quadratic() const {
    switch (tag) {
      case Family::sigma: return {0, 1};
      case Family::partial: return {0, 0};
      case Family::s: return {0, 1};
      case Family::pi: return {1, 0};
      case Family::pibar: return {-1, 0};
      case Family::T: return {q1 + q2, -(q1 * q2)};
    }
    return {0, 0};
  }

  std::string name() const { return family_name(tag); }
};

namespace detail {

inline LaurentPoly swap_slots(const LaurentPoly& p, int a, int b) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    int ea = m[a], eb = m[b];
    m.set(a, eb);
    m.set(b, ea);
    out.push_back({m, t.coeff});
  }
  return LaurentPoly::from_terms(std::move(out));
}

// Divided difference in the variables at slots a, b (a plays x_i), computed
// monomial by monomial:
//   a > b: d(x^a y^b) =  sum_{k<a-b} x^(a-1-k) y^(b+k)
//   a < b: d(x^a y^b) = -sum_{k<b-a} x^(a+k)   y^(b-1-k)
inline LaurentPoly divided_difference(const LaurentPoly& p, int a, int b) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    int ea = t.mono[a], eb = t.mono[b];
    if (ea == eb) continue;
    Monomial m = t.mono;
    if (ea > eb) {
      for (int k = 0; k < ea - eb; ++k) {
        m.set(a, ea - 1 - k);
        m.set(b, eb + k);
        out.push_back({m, t.coeff});
      }
    } else {
      Coefficient c = -t.coeff;
      for (int k = 0; k < eb - ea; ++k) {
        m.set(a, ea + k);
        m.set(b, eb - 1 - k);
        out.push_back({m, c});
      }
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

inline bool factors_use(const RationalFunction& f, int a, int b) {
  for (const auto& fac : f.factors())
    if (fac.poly.uses(a) || fac.poly.uses(b)) return true;
  return false;
}

inline RationalFunction swap_rf(const RationalFunction& f, VarId va, VarId vb) {
  if (f.is_laurent()) return RationalFunction(swap_slots(f.as_laurent(), va.slot(), vb.slot()));
  Substitution s;
  s.rename(va, vb).rename(vb, va);
  return s(f);
}

inline RationalFunction divided_difference_rf(const RationalFunction& f, VarId va, VarId vb) {
  int a = va.slot(), b = vb.slot();
  if (f.is_laurent()) return RationalFunction(divided_difference(f.as_laurent(), a, b));
  if (!factors_use(f, a, b)) {
    // Denominator free of the two variables: it factors out of the operator.
    LaurentPoly num = f.polynomial_part().scaled(1, f.monomial_part());
    return RationalFunction::from_parts(Monomial(), divided_difference(num, a, b), f.factors());
  }
  RationalFunction diff = f - swap_rf(f, va, vb);
  return diff / (RationalFunction::variable(va) - RationalFunction::variable(vb));
}

}  // namespace detail

// D_i applied to f, acting on the variables of family `on` (x by default).
inline RationalFunction apply_generator(const OperatorFamily& fam, int n, int i, const RationalFunction& f,
                                        VarFamily on = VarFamily::x) {
  if (i < 1 || i >= n) throw IndexOutOfRange("generator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
  VarId va(on, i), vb(on, i + 1);
  auto sigma = [&](const RationalFunction& g) { return detail::swap_rf(g, va, vb); };
  auto partial = [&](const RationalFunction& g) { return detail::divided_difference_rf(g, va, vb); };
  auto pi = [&](const RationalFunction& g) { return partial(g * RationalFunction::variable(va)); };
  switch (fam.tag) {
    case Family::sigma: return sigma(f);
    case Family::partial: return partial(f);
    case Family::s: return sigma(f) + partial(f);
    case Family::pi: return pi(f);
    case Family::pibar: return pi(f) - f;
    case Family::T: return (pi(f) - f) * (-(fam.q1 + fam.q2)) + sigma(f) * fam.q2;
  }
  return f;
}

// D_{i_1} o D_{i_2} o ... o D_{i_r}: the last letter acts first.
inline RationalFunction apply_word(const OperatorFamily& fam, int n, const Word& word, const RationalFunction& f,
                                   VarFamily on = VarFamily::x) {
  RationalFunction g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply_generator(fam, n, *it, g, on);
  return g;
}

struct PolyOperator {
  OperatorFamily family;
  int n = 1;
  Word word;

  RationalFunction operator()(const RationalFunction& f, VarFamily on = VarFamily::x) const {
    return apply_word(family, n, word, f, on);
  }
};

// D_mu along the canonical reduced word of mu.
inline RationalFunction apply_permutation(const OperatorFamily& fam, const Permutation& mu, const RationalFunction& f,
                                          VarFamily on = VarFamily::x) {
  return apply_word(fam, mu.rank(), mu.reduced_word(), f, on);
}

}  // namespace ybhecke
