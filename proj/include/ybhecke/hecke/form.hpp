#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/hecke/yang_baxter.hpp"

namespace ybhecke {

// u_i -> u_{n+1-i} on coefficients.
inline Substitution reversal(int n) {
  Substitution s;
  for (int i = 1; i <= n; ++i) s.rename(VarId::u(i), VarId::u(n + 1 - i));
  return s;
}

// Anti-automorphism: D_mu -> D_{mu^-1}, u_i -> u_{n+1-i}.
inline HeckeElement phi(const HeckeElement& h) {
  Substitution s = reversal(h.algebra().n);
  HeckeElement r(h.algebra());
  for (const auto& [mu, c] : h.terms()) r.add_term(mu.inverse(), s(c));
  return r;
}

// <h1, h2> = coefficient of D_omega in h1 * phi(h2).
inline RationalFunction pairing(const HeckeElement& h1, const HeckeElement& h2) {
  h1.check_same(h2);
  return mul(h1, phi(h2)).coefficient(Permutation::longest(h1.algebra().n));
}

// Table of [D_omega](D_alpha D_beta); the form is then
//   <h1, h2> = sum_{alpha, beta} h1_alpha phi(h2)_beta [D_omega](D_alpha D_beta).
class TopCoefficients {
 public:
  explicit TopCoefficients(const AlgebraSpec& alg) : alg_(alg), perms_(enumerate(alg.n, kMaxRank)) {
    Permutation omega = Permutation::longest(alg.n);
    for (std::size_t a = 0; a < perms_.size(); ++a) index_.emplace(perms_[a], a);
    table_.assign(perms_.size(), std::vector<RationalFunction>(perms_.size()));
    for (std::size_t a = 0; a < perms_.size(); ++a) {
      HeckeElement base = HeckeElement::basis(alg, perms_[a]);
      for (std::size_t b = 0; b < perms_.size(); ++b) {
        if (perms_[a].length() + perms_[b].length() < omega.length()) continue;
        table_[a][b] = mul_by_word(base, perms_[b].reduced_word()).coefficient(omega);
      }
    }
  }

  const std::vector<Permutation>& permutations() const { return perms_; }
  std::size_t index(const Permutation& mu) const { return index_.at(mu); }
  const RationalFunction& operator()(std::size_t a, std::size_t b) const { return table_[a][b]; }

  RationalFunction pairing(const HeckeElement& h1, const HeckeElement& h2) const {
    return pairing_with_phi(h1, phi(h2));
  }

  RationalFunction pairing_with_phi(const HeckeElement& h1, const HeckeElement& phi_h2) const {
    RationalFunction r;
    for (const auto& [alpha, c1] : h1.terms()) {
      std::size_t a = index(alpha);
      for (const auto& [beta, c2] : phi_h2.terms()) {
        const RationalFunction& t = table_[a][index(beta)];
        if (t.is_zero()) continue;
        r += t.is_one() ? c1 * c2 : c1 * c2 * t;
      }
    }
    return r;
  }

  // Matrix <rows[i], cols[j]>, computed as (A * S) * B^T with A, B the
  // coefficient matrices of rows and phi(cols).
  std::vector<std::vector<RationalFunction>> gram(const std::vector<HeckeElement>& rows,
                                                  const std::vector<HeckeElement>& cols) const {
    std::size_t N = perms_.size();
    std::vector<std::vector<RationalFunction>> as(rows.size(), std::vector<RationalFunction>(N));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [alpha, c1] : rows[i].terms()) {
        std::size_t a = index(alpha);
        for (std::size_t b = 0; b < N; ++b) {
          const RationalFunction& t = table_[a][b];
          if (t.is_zero()) continue;
          as[i][b] += t.is_one() ? c1 : c1 * t;
        }
      }
    std::vector<HeckeElement> phis;
    for (const auto& h : cols) phis.push_back(phi(h));
    std::vector<std::vector<RationalFunction>> g(rows.size(), std::vector<RationalFunction>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) {
        RationalFunction s;
        for (const auto& [beta, c2] : phis[j].terms()) {
          const RationalFunction& x = as[i][index(beta)];
          if (!x.is_zero()) s += x * c2;
        }
        g[i][j] = std::move(s);
      }
    return g;
  }

 private:
  AlgebraSpec alg_;
  std::vector<Permutation> perms_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::vector<RationalFunction>> table_;
};

// Delta(v) = prod_{i<j} c(v_i, v_j), c the generator coefficient of the
// family's elementary factor.
inline RationalFunction delta(const AlgebraSpec& alg, const SpectralParams& v) {
  RationalFunction d = 1;
  for (int i = 1; i <= v.size(); ++i)
    for (int j = i + 1; j <= v.size(); ++j) d *= factor_coefficients(alg, v(i), v(j)).second;
  return d;
}

// The tuple (u_{mu(n)}, ..., u_{mu(1)}) indexing the nonzero pairing of Y_mu.
inline SpectralParams reversed_permuted(const SpectralParams& u, const Permutation& mu) {
  return u.permuted(compose(mu, Permutation::longest(mu.rank())));
}

// The predicted value of <Y_mu, Y_nu>: Delta(u_{mu(n)}, ..., u_{mu(1)}) when
// nu = omega o mu, zero otherwise.
inline RationalFunction predicted_pairing(const AlgebraSpec& alg, const SpectralParams& u, const Permutation& mu,
                                          const Permutation& nu) {
  if (!(nu == compose(Permutation::longest(alg.n), mu))) return 0;
  return delta(alg, reversed_permuted(u, mu));
}

// Coefficients of h in the Yang-Baxter basis: c_mu = <h, Y_{omega o mu}> / Delta.
inline std::map<Permutation, RationalFunction> expand_in_yb(const HeckeElement& h, const SpectralParams& u,
                                                            const std::map<Permutation, HeckeElement>* basis = nullptr,
                                                            const TopCoefficients* top = nullptr) {
  const AlgebraSpec& alg = h.algebra();
  std::map<Permutation, HeckeElement> own;
  if (!basis) {
    own = yb_basis(alg, u);
    basis = &own;
  }
  std::unique_ptr<TopCoefficients> own_top;
  if (!top) {
    own_top = std::make_unique<TopCoefficients>(alg);
    top = own_top.get();
  }
  Permutation omega = Permutation::longest(alg.n);
  std::map<Permutation, RationalFunction> out;
  for (const auto& [mu, y] : *basis) {
    RationalFunction d = delta(alg, reversed_permuted(u, mu));
    if (d.is_zero()) throw DegenerateSpectrum("Delta vanishes for " + mu.to_string());
    RationalFunction p = top->pairing(h, basis->at(compose(omega, mu)));
    if (!p.is_zero()) out.emplace(mu, p / d);
  }
  return out;
}

inline HeckeElement combine(const AlgebraSpec& alg, const std::map<Permutation, RationalFunction>& coeffs,
                            const std::map<Permutation, HeckeElement>& basis) {
  HeckeElement r(alg);
  for (const auto& [mu, c] : coeffs) r += basis.at(mu).scaled(c);
  return r;
}

}  // namespace ybhecke
