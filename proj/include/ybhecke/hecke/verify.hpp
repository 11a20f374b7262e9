#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ybhecke/exactalg/random.hpp"
#include "ybhecke/exactalg/text.hpp"
#include "ybhecke/hecke/form.hpp"
#include "ybhecke/polyops/probes.hpp"
#include "ybhecke/report.hpp"

namespace ybhecke {

// Random element with small polynomial coefficients in u1..u3 and q1.
inline HeckeElement random_element(const AlgebraSpec& alg, ProbeRng& rng) {
  HeckeElement h(alg);
  std::vector<VarId> vars = {VarId::u(1), VarId::u(2), VarId::u(3), VarId::q1()};
  for (const auto& mu : enumerate(alg.n, kMaxRank))
    if (rng.uniform(0, 2) > 0) h.add_term(mu, RationalFunction(rng.polynomial(vars, 2, 3, 5)));
  return h;
}

inline std::string suite_name(const std::string& what, const AlgebraSpec& alg) {
  return what + "[" + alg.name() + ", n=" + std::to_string(alg.n) + "]";
}

// Y_i(u,v) Y_{i+1}(u,w) Y_i(v,w) = Y_{i+1}(v,w) Y_i(u,w) Y_{i+1}(u,v) with
// symbolic u, v, w = u1, u2, u3.
inline Report verify_ybe(const OperatorFamily& fam, int n = 3) {
  if (n < 3) throw RankOutOfRange("the Yang-Baxter equation needs n >= 3");
  AlgebraSpec alg(fam, n);
  Report rep;
  rep.suite = suite_name("ybe", alg);
  RationalFunction a = RationalFunction::variable(VarId::u(1)), b = RationalFunction::variable(VarId::u(2)),
                   c = RationalFunction::variable(VarId::u(3));
  for (int i = 1; i + 1 < n; ++i) {
    HeckeElement lhs = elementary_factor(alg, i, a, b) * elementary_factor(alg, i + 1, a, c) * elementary_factor(alg, i, b, c);
    HeckeElement rhs =
        elementary_factor(alg, i + 1, b, c) * elementary_factor(alg, i, a, c) * elementary_factor(alg, i + 1, a, b);
    rep.expect(lhs == rhs, "YB at i=" + std::to_string(i));
  }
  return rep;
}

inline std::string word_string(const Word& w) {
  std::string s;
  for (int j : w) s += std::to_string(j);
  return s.empty() ? "()" : s;
}

// Y_mu along every reduced word agrees with the canonical construction.
inline Report verify_word_independence(const AlgebraSpec& alg, const SpectralParams& u) {
  Report rep;
  rep.suite = suite_name("word-independence", alg);
  for (const auto& mu : enumerate(alg.n, 5)) {
    HeckeElement ref = yb_element(alg, mu, u);
    for (const auto& w : mu.all_reduced_words())
      rep.expect(yb_element_word(alg, w, u) == ref, "Y_" + mu.to_string(), "word " + word_string(w));
  }
  return rep;
}

// Rothe-diagram factorization against the recursion.
inline Report verify_rothe(const AlgebraSpec& alg, const SpectralParams& u, const std::vector<Permutation>& perms) {
  Report rep;
  rep.suite = suite_name("rothe", alg);
  for (const auto& mu : perms) rep.expect(yb_element_rothe(alg, mu, u) == yb_element(alg, mu, u), "Y_" + mu.to_string());
  return rep;
}

// Full pairing matrix of the Yang-Baxter basis.
struct GramMatrix {
  std::vector<Permutation> perms;
  std::vector<std::vector<RationalFunction>> entries;
};

inline GramMatrix yb_gram(const AlgebraSpec& alg, const SpectralParams& u) {
  auto basis = yb_basis(alg, u);
  GramMatrix g;
  std::vector<HeckeElement> ys;
  for (const auto& [mu, y] : basis) {
    g.perms.push_back(mu);
    ys.push_back(y);
  }
  g.entries = TopCoefficients(alg).gram(ys, ys);
  return g;
}

// <Y_mu, Y_nu> = Delta(u_{mu(n)}, ..., u_{mu(1)}) delta_{nu, omega o mu}.
inline Report verify_orthogonality(const AlgebraSpec& alg, const SpectralParams& u, const GramMatrix* precomputed = nullptr) {
  Report rep;
  rep.suite = suite_name("orthogonality", alg);
  GramMatrix own;
  if (!precomputed) {
    own = yb_gram(alg, u);
    precomputed = &own;
  }
  const auto& g = *precomputed;
  for (std::size_t i = 0; i < g.perms.size(); ++i)
    for (std::size_t j = 0; j < g.perms.size(); ++j) {
      RationalFunction want = predicted_pairing(alg, u, g.perms[i], g.perms[j]);
      rep.expect(g.entries[i][j] == want, "<Y_" + g.perms[i].to_string() + ", Y_" + g.perms[j].to_string() + ">",
                 "got " + render(g.entries[i][j]) + ", expected " + render(want));
    }
  return rep;
}

// For l(mu s_j) < l(mu), u = u_{mu(j+1)}/u_{mu(j)}:
//   Y_mu (1 + (u-1)/(q1+q2) T_j) = Y_{mu s_j} (1 - (2 - u - 1/u) q1 q2/(q1+q2)^2).
inline Report verify_descent_identity(int n) {
  AlgebraSpec t(Family::T, n);
  auto u = SpectralParams::formal(n);
  Report rep;
  rep.suite = suite_name("descent", t);
  RationalFunction s = t.family.q1 + t.family.q2, qq = t.family.q1 * t.family.q2;
  auto basis = yb_basis(t, u);
  for (const auto& [mu, y] : basis)
    for (int j = 1; j < n; ++j) {
      if (!mu.has_descent(j)) continue;
      RationalFunction x = u(mu(j + 1)) / u(mu(j));
      HeckeElement lhs = times_factor(y, j, u(mu(j)), u(mu(j + 1)));
      HeckeElement rhs = basis.at(mu.times_simple(j)).scaled(1 - (2 - x - x.inverse()) * qq / (s * s));
      rep.expect(lhs == rhs, "descent " + mu.to_string() + " j=" + std::to_string(j));
    }
  return rep;
}

// phi is an involutive anti-automorphism, on random elements.
inline Report verify_phi(const AlgebraSpec& alg, std::uint64_t seed, int count = 5) {
  Report rep;
  rep.suite = suite_name("phi", alg);
  rep.seed = seed;
  ProbeRng rng(seed);
  for (int k = 0; k < count; ++k) {
    HeckeElement a = random_element(alg, rng), b = random_element(alg, rng);
    rep.expect(phi(phi(a)) == a, "involution", "sample " + std::to_string(k));
    rep.expect(phi(a * b) == phi(b) * phi(a), "anti-multiplicative", "sample " + std::to_string(k));
  }
  return rep;
}

// The abstract product agrees with operator composition on probe polynomials,
// and every Y_mu acts as the composition of its factor operators.
inline Report verify_faithfulness(const AlgebraSpec& alg, std::uint64_t seed, int probes = 10) {
  Report rep;
  rep.suite = suite_name("faithfulness", alg);
  rep.seed = seed;
  ProbeRng rng(seed);
  auto fs = random_probes(alg.n, probes, rng);
  HeckeElement a = random_element(alg, rng), b = random_element(alg, rng);
  HeckeElement ab = a * b;
  for (const auto& p : fs) {
    RationalFunction f(p);
    rep.expect(realize(ab, f) == realize(a, realize(b, f)), "product", "f = " + render(p));
  }
  auto u = SpectralParams::formal(alg.n);
  Permutation omega = Permutation::longest(alg.n);
  Permutation nu = Permutation::identity(alg.n);
  std::vector<HeckeElement> factors;
  for (int j : omega.reduced_word()) {
    factors.push_back(elementary_factor(alg, j, u(nu(j)), u(nu(j + 1))));
    nu = nu.times_simple(j);
  }
  HeckeElement y = yb_element(alg, omega, u);
  for (std::size_t k = 0; k < fs.size() && k < 3; ++k) {
    RationalFunction f(fs[k]), composed = f;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) composed = realize(*it, composed);
    rep.expect(realize(y, f) == composed, "Y_omega as operator", "f = " + render(fs[k]));
  }
  return rep;
}

// (ab)c = a(bc) and 1 is a unit, on random triples.
inline Report verify_associativity(const AlgebraSpec& alg, std::uint64_t seed, int count = 3) {
  Report rep;
  rep.suite = suite_name("associativity", alg);
  rep.seed = seed;
  ProbeRng rng(seed);
  HeckeElement one = HeckeElement::one(alg);
  for (int k = 0; k < count; ++k) {
    HeckeElement a = random_element(alg, rng), b = random_element(alg, rng), c = random_element(alg, rng);
    rep.expect((a * b) * c == a * (b * c), "associativity", "sample " + std::to_string(k));
    rep.expect(a * one == a && one * a == a, "unit", "sample " + std::to_string(k));
  }
  return rep;
}

}  // namespace ybhecke
