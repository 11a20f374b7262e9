#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/hecke/algebra.hpp"
#include "ybhecke/symgroup/rothe.hpp"

namespace ybhecke {

// Spectral parameters u_1..u_n; formal variables unless specialized.
struct SpectralParams {
  std::vector<RationalFunction> u;

  static SpectralParams formal(int n) {
    SpectralParams p;
    for (int i = 1; i <= n; ++i) p.u.push_back(RationalFunction::variable(VarId::u(i)));
    return p;
  }

  int size() const { return static_cast<int>(u.size()); }
  const RationalFunction& operator()(int i) const { return u.at(i - 1); }

  // u^mu = (u_{mu(1)}, ..., u_{mu(n)}).
  SpectralParams permuted(const Permutation& mu) const {
    SpectralParams p;
    for (int i = 1; i <= mu.rank(); ++i) p.u.push_back((*this)(mu(i)));
    return p;
  }

  bool pairwise_distinct() const {
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j)
        if (u[i] == u[j]) return false;
    return true;
  }
};

inline void check_spectral(const AlgebraSpec& alg, const SpectralParams& u) {
  if (u.size() != alg.n) throw RankMismatch("spectral parameter count differs from algebra rank");
  if (alg.mode == SpectralMode::multiplicative)
    for (const auto& v : u.u)
      if (v.is_zero()) throw ZeroSpectral("multiplicative families need nonzero spectral parameters");
}

// Y_j(u, v) = alpha(u, v) + c(u, v) D_j.
//   sigma, partial: 1 - (u - v) D_j
//   pibar:          1 + (1 - v/u) D_j
//   pi:             v/u + (1 - v/u) D_j     (the pibar factor rewritten via pi = pibar + 1)
//   T:              1 + (v/u - 1)/(q1 + q2) D_j
//   s:              1/(u - v) + D_j
inline std::pair<RationalFunction, RationalFunction> factor_coefficients(const AlgebraSpec& alg, const RationalFunction& u,
                                                                         const RationalFunction& v) {
  if (alg.mode == SpectralMode::multiplicative && u.is_zero()) throw ZeroSpectral("u must be nonzero");
  switch (alg.tag()) {
    case Family::sigma:
    case Family::partial: return {1, v - u};
    case Family::pibar: return {1, 1 - v / u};
    case Family::pi: return {v / u, 1 - v / u};
    case Family::T: return {1, (v / u - 1) / (alg.family.q1 + alg.family.q2)};
    case Family::s: {
      RationalFunction d = u - v;
      if (d.is_zero()) throw DegenerateSpectrum("s-family factor needs u != v");
      return {d.inverse(), 1};
    }
  }
  return {1, 0};
}

inline HeckeElement elementary_factor(const AlgebraSpec& alg, int j, const RationalFunction& u, const RationalFunction& v) {
  if (j < 1 || j >= alg.n) throw IndexOutOfRange("generator index " + std::to_string(j) + " out of range for n=" + std::to_string(alg.n));
  auto [alpha, c] = factor_coefficients(alg, u, v);
  HeckeElement h = HeckeElement::one(alg).scaled(alpha);
  h.add_term(Permutation::simple(alg.n, j), c);
  return h;
}

// h * Y_j(u, v) without a general product.
inline HeckeElement times_factor(const HeckeElement& h, int j, const RationalFunction& u, const RationalFunction& v) {
  auto [alpha, c] = factor_coefficients(h.algebra(), u, v);
  HeckeElement r = alpha.is_one() ? h : h.scaled(alpha);
  if (!c.is_zero()) r += mul_by_generator(h, j).scaled(c);
  return r;
}

// Y_mu along a given reduced word of mu: Y_{nu s_j} = Y_nu Y_j(u_{nu(j)}, u_{nu(j+1)}).
inline HeckeElement yb_element_word(const AlgebraSpec& alg, const Word& word, const SpectralParams& u) {
  check_spectral(alg, u);
  HeckeElement h = HeckeElement::one(alg);
  Permutation nu = Permutation::identity(alg.n);
  for (int j : word) {
    if (!nu.has_descent(j)) {
      h = times_factor(h, j, u(nu(j)), u(nu(j + 1)));
      nu = nu.times_simple(j);
    } else {
      throw InvalidPermutation("word is not reduced");
    }
  }
  return h;
}

inline HeckeElement yb_element(const AlgebraSpec& alg, const Permutation& mu, const SpectralParams& u) {
  if (mu.rank() != alg.n) throw RankMismatch("permutation rank differs from algebra rank");
  return yb_element_word(alg, mu.reduced_word(), u);
}

// Factor sequence from the Rothe diagram: the box labelled (mu(i) mu(j))
// contributes Y_k(u_{mu(j)}, u_{mu(i)}), read in diagram reading order.
struct RotheFactor {
  int large, small, generator;
};

inline std::vector<RotheFactor> rothe_factors(const Permutation& mu) {
  std::vector<RotheFactor> out;
  for (const auto& b : rothe_diagram(mu).boxes) out.push_back({b.large, b.small, b.generator});
  return out;
}

inline HeckeElement yb_element_rothe(const AlgebraSpec& alg, const Permutation& mu, const SpectralParams& u) {
  if (mu.rank() != alg.n) throw RankMismatch("permutation rank differs from algebra rank");
  check_spectral(alg, u);
  HeckeElement h = HeckeElement::one(alg);
  for (const auto& f : rothe_factors(mu)) h = times_factor(h, f.generator, u(f.small), u(f.large));
  return h;
}

// All Y_mu for mu in S_n, sharing prefixes: Y_{mu} = Y_{mu s_j} * factor for
// the last letter j of the canonical word.
inline std::map<Permutation, HeckeElement> yb_basis(const AlgebraSpec& alg, const SpectralParams& u) {
  check_spectral(alg, u);
  std::map<Permutation, HeckeElement> out;
  for (const auto& mu : enumerate(alg.n, kMaxRank)) {
    if (mu.is_identity()) {
      out.emplace(mu, HeckeElement::one(alg));
      continue;
    }
    Word w = mu.reduced_word();
    int j = w.back();
    Permutation nu = mu.times_simple(j);
    out.emplace(mu, times_factor(out.at(nu), j, u(nu(j)), u(nu(j + 1))));
  }
  return out;
}

}  // namespace ybhecke
