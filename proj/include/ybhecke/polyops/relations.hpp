#pragma once

#include <cstdint>
#include <string>

#include "ybhecke/exactalg/text.hpp"
#include "ybhecke/polyops/operators.hpp"
#include "ybhecke/polyops/probes.hpp"
#include "ybhecke/report.hpp"

namespace ybhecke {

// Quadratic, braid and commutation relations of a family, evaluated on random
// probe polynomials.
inline Report check_relations(const OperatorFamily& fam, int n, int probes, std::uint64_t seed) {
  if (n < 1 || n > 5) throw RankOutOfRange("relation checks support 1 <= n <= 5");
  Report rep;
  rep.suite = "relations[" + fam.name() + ", n=" + std::to_string(n) + "]";
  rep.seed = seed;
  auto [a, b] = fam.quadratic();
  auto D = [&](int i, const RationalFunction& f) { return apply_generator(fam, n, i, f); };
  for (const auto& p : random_probes(n, probes, seed)) {
    RationalFunction f(p);
    std::string w = "f = " + render(p);
    for (int i = 1; i < n; ++i) {
      RationalFunction d = D(i, f);
      rep.expect(D(i, d) == a * d + b * f, "quadratic D" + std::to_string(i), w);
      if (i + 1 < n) {
        RationalFunction lhs = D(i, D(i + 1, D(i, f)));
        RationalFunction rhs = D(i + 1, D(i, D(i + 1, f)));
        rep.expect(lhs == rhs, "braid D" + std::to_string(i) + "D" + std::to_string(i + 1), w);
      }
      for (int j = i + 2; j < n; ++j)
        rep.expect(D(i, D(j, f)) == D(j, D(i, f)), "commute D" + std::to_string(i) + "D" + std::to_string(j), w);
    }
  }
  return rep;
}

}  // namespace ybhecke
