#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ybhecke/exactalg/laurent_poly.hpp"

namespace ybhecke {

// Deterministic generator for random test polynomials. Bounded draws are
// computed here rather than with std::uniform_int_distribution, whose output
// is implementation-defined, so a seed means the same probes everywhere.
class ProbeRng {
 public:
  explicit ProbeRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do r = engine_(); while (r >= limit);
    return lo + static_cast<long>(r % span);
  }

  // Random polynomial in `vars`: up to `max_terms` terms, total degree at most
  // `max_degree`, integer coefficients in [-coeff_bound, coeff_bound].
  LaurentPoly polynomial(const std::vector<VarId>& vars, int max_degree, int max_terms, long coeff_bound = 9) {
    std::vector<Term> terms;
    long count = uniform(1, max_terms);
    for (long t = 0; t < count; ++t) {
      Monomial m;
      long deg = uniform(0, max_degree);
      for (long k = 0; k < deg && !vars.empty(); ++k) {
        VarId v = vars[uniform(0, static_cast<long>(vars.size()) - 1)];
        m.set(v.slot(), m.exponent(v) + 1);
      }
      long c = 0;
      while (c == 0) c = uniform(-coeff_bound, coeff_bound);
      terms.push_back({m, Coefficient(c)});
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

  LaurentPoly nonzero_polynomial(const std::vector<VarId>& vars, int max_degree, int max_terms, long coeff_bound = 9) {
    for (;;) {
      LaurentPoly p = polynomial(vars, max_degree, max_terms, coeff_bound);
      if (!p.is_zero()) return p;
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline std::vector<VarId> family_vars(VarFamily f, int n) {
  std::vector<VarId> v;
  for (int i = 1; i <= n; ++i) v.push_back(VarId(f, i));
  return v;
}

}  // namespace ybhecke
