#pragma once

#include <cstdint>
#include <vector>

#include "ybhecke/exactalg/random.hpp"

namespace ybhecke {

inline constexpr int kProbeDegree = 4;
inline constexpr int kProbeTerms = 6;

// Random polynomials in x1..xn: total degree <= 4, integer coefficients in
// [-9, 9].
inline std::vector<LaurentPoly> random_probes(int n, int count, ProbeRng& rng, VarFamily family = VarFamily::x) {
  std::vector<LaurentPoly> out;
  auto vars = family_vars(family, n);
  for (int k = 0; k < count; ++k) out.push_back(rng.polynomial(vars, kProbeDegree, kProbeTerms));
  return out;
}

inline std::vector<LaurentPoly> random_probes(int n, int count, std::uint64_t seed, VarFamily family = VarFamily::x) {
  ProbeRng rng(seed);
  return random_probes(n, count, rng, family);
}

// Random combinations of the staircase monomials x^a with a_i <= n - i.
inline std::vector<LaurentPoly> staircase_probes(int n, int count, ProbeRng& rng, VarFamily family = VarFamily::x) {
  std::vector<LaurentPoly> out;
  for (int k = 0; k < count; ++k) {
    std::vector<Term> terms;
    long nterms = rng.uniform(1, kProbeTerms);
    for (long t = 0; t < nterms; ++t) {
      Monomial m;
      for (int i = 1; i < n; ++i) m.set(VarId(family, i).slot(), static_cast<int>(rng.uniform(0, n - i)));
      long c = 0;
      while (c == 0) c = rng.uniform(-9, 9);
      terms.push_back({m, Coefficient(c)});
    }
    out.push_back(LaurentPoly::from_terms(std::move(terms)));
  }
  return out;
}

}  // namespace ybhecke
