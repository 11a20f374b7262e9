#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/exactalg/text.hpp"
#include "ybhecke/hecke/yang_baxter.hpp"
#include "ybhecke/polyops/probes.hpp"
#include "ybhecke/report.hpp"
#include "ybhecke/schubgroth/tables.hpp"

namespace ybhecke {

// sum_nu c_nu * D_nu(f), coefficients placed to the left of the operators.
inline RationalFunction apply_normal_ordered(const OperatorFamily& fam, const std::map<Permutation, RationalFunction>& coeffs,
                                             const RationalFunction& f, VarFamily on = VarFamily::x) {
  RationalFunction r;
  for (const auto& [nu, c] : coeffs)
    if (!c.is_zero()) r += c * apply_permutation(fam, nu, f, on);
  return r;
}

// Descent recursions, stability under S_n -> S_{n+1} and the top element of
// both tables.
inline Report verify_tables(int n) {
  Report rep;
  rep.suite = "tables[n=" + std::to_string(n) + "]";
  auto X = schubert_table(n, kMaxRank);
  auto G = grothendieck_table(n, kMaxRank);
  VarSet xy = VarSet::family(VarFamily::x, n) | VarSet::family(VarFamily::y, n);
  for (const auto& [mu, p] : X.entries) {
    bool homogeneous = p.is_zero() ? false : true;
    for (const auto& t : p.terms()) homogeneous = homogeneous && t.mono.degree_in(xy) == mu.length();
    rep.expect(homogeneous, "X_" + mu.to_string() + " homogeneous of degree " + std::to_string(mu.length()));
    for (int i = 1; i < n; ++i) {
      if (!mu.has_descent(i)) continue;
      Permutation nu = mu.times_simple(i);
      rep.expect(apply_generator(Family::partial, n, i, RationalFunction(p)) == RationalFunction(X[nu]),
                 "d" + std::to_string(i) + " X_" + mu.to_string());
      rep.expect(apply_generator(Family::pi, n, i, RationalFunction(G[mu])) == RationalFunction(G[nu]),
                 "pi" + std::to_string(i) + " G_" + mu.to_string());
    }
  }
  rep.expect(X[Permutation::identity(n)].is_one() && G[Permutation::identity(n)].is_one(), "identity entries are 1");
  if (n < kMaxRank) {
    auto X1 = schubert_table(n + 1, kMaxRank);
    for (const auto& [mu, p] : X.entries) {
      auto w = mu.window();
      w.push_back(n + 1);
      rep.expect(X1[Permutation(w)] == p, "stability X_" + mu.to_string());
    }
  }
  return rep;
}

// Newton interpolation: sum_nu X_nu(x^mu, y) (d^y_nu f)(y) = f(x^mu) for f in
// the span of staircase monomials in y; and the operator identity
//   f(x^mu) = sum_nu X_nu(x^mu, x) d_nu f   for arbitrary f.
inline Report verify_newton_interpolation(int n, int probes, std::uint64_t seed) {
  Report rep;
  rep.suite = "newton[n=" + std::to_string(n) + "]";
  rep.seed = seed;
  ProbeRng rng(seed);
  auto X = schubert_table(n, kMaxRank);
  auto ys = staircase_probes(n, probes, rng, VarFamily::y);
  ys.insert(ys.begin(), parse_laurent("y1^2*y2"));
  auto xs = random_probes(n, probes, rng);
  Substitution y_to_x;
  for (int i = 1; i <= n; ++i) y_to_x.rename(VarId::y(i), VarId::x(i));
  for (const auto& mu : enumerate(n, kMaxRank)) {
    std::map<Permutation, RationalFunction> shifted, diagonal;
    for (const auto& [nu, p] : X.entries) {
      shifted.emplace(nu, permute_x(RationalFunction(p), mu));
      diagonal.emplace(nu, y_to_x(shifted.at(nu)));
    }
    for (const auto& p : ys) {
      RationalFunction f(p);
      RationalFunction want = permute_x(y_to_x(f), mu);
      rep.expect(apply_normal_ordered(Family::partial, shifted, f, VarFamily::y) == want,
                 "interpolation mu=" + mu.to_string(), "f = " + render(p));
    }
    for (const auto& p : xs) {
      RationalFunction f(p);
      rep.expect(apply_normal_ordered(Family::partial, diagonal, f) == permute_x(f, mu), "decperm mu=" + mu.to_string(),
                 "f = " + render(p));
    }
  }
  return rep;
}

// mu = xi(Y^partial_mu(u)) with xi: u_i -> x_i, coefficients placed left of the
// partial_nu, applied to probes.
inline Report verify_normal_ordering(int n, int probes, std::uint64_t seed) {
  Report rep;
  rep.suite = "normal-ordering[n=" + std::to_string(n) + "]";
  rep.seed = seed;
  auto fs = random_probes(n, probes, seed);
  Substitution xi;
  for (int i = 1; i <= n; ++i) xi.rename(VarId::u(i), VarId::x(i));
  AlgebraSpec d(Family::partial, n);
  for (const auto& [mu, y] : yb_basis(d, SpectralParams::formal(n))) {
    std::map<Permutation, RationalFunction> coeffs;
    for (const auto& [nu, c] : y.terms()) coeffs.emplace(nu, xi(c));
    for (const auto& p : fs) {
      RationalFunction f(p);
      rep.expect(apply_normal_ordered(Family::partial, coeffs, f) == permute_x(f, mu), "mu=" + mu.to_string(),
                 "f = " + render(p));
    }
  }
  return rep;
}

// Maximal element of the Young subgroup S_{I_1} x ... x S_{I_r} of a
// composition.
inline Permutation young_longest(const std::vector<int>& shape) {
  if (shape.empty()) throw ShapeInvalid("empty composition");
  std::vector<int> w;
  int start = 0;
  for (int part : shape) {
    if (part <= 0) throw ShapeInvalid("composition parts must be positive");
    for (int k = part; k >= 1; --k) w.push_back(start + k);
    start += part;
  }
  if (start > kMaxRank) throw ShapeInvalid("composition too large");
  return Permutation(w);
}

inline std::string shape_string(const std::vector<int>& shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) s += (i ? "," : "") + std::to_string(shape[i]);
  return s + ")";
}

enum class AppendixMode { qpow, linear };

// qpow:   (q1, q2) = (q, -1), u_i = q^{i-1}, T family:
//           Y_mu(f) = lambda * Delta_1 ... Delta_r * d_mu(f),
//         Delta_k = prod_{i<j in block k} (q x_j - x_i),
//         lambda = prod_{i<j in a block} (1 - u_j/u_i)/(q1 + q2).
// linear: u_i = i, s family: Y_mu(f) = prod_{i<j in a block} (1 + x_j - x_i) * d_mu(f).
// The variable q is q1.
inline Report verify_appendix_factorizations(const std::vector<int>& shape, AppendixMode mode, int probes, std::uint64_t seed) {
  Permutation mu = young_longest(shape);
  int n = mu.rank();
  if (n > 4) throw ShapeInvalid("appendix factorizations are checked for n <= 4");
  Report rep;
  rep.suite = std::string("appendix[") + (mode == AppendixMode::qpow ? "qpow " : "linear ") + shape_string(shape) + "]";
  rep.seed = seed;
  RationalFunction q = RationalFunction::variable(VarId::q1());
  OperatorFamily fam = mode == AppendixMode::qpow ? OperatorFamily(Family::T, q, RationalFunction(-1)) : OperatorFamily(Family::s);
  AlgebraSpec alg(fam, n);
  SpectralParams u;
  for (int i = 1; i <= n; ++i) u.u.push_back(mode == AppendixMode::qpow ? q.pow(i - 1) : RationalFunction(i));
  RationalFunction factor = 1, lambda = 1;
  int start = 0;
  for (int part : shape) {
    for (int i = start + 1; i <= start + part; ++i)
      for (int j = i + 1; j <= start + part; ++j) {
        RationalFunction xi = RationalFunction::variable(VarId::x(i)), xj = RationalFunction::variable(VarId::x(j));
        if (mode == AppendixMode::qpow) {
          factor *= q * xj - xi;
          lambda *= (1 - u(j) / u(i)) / (fam.q1 + fam.q2);
        } else {
          factor *= 1 + xj - xi;
        }
      }
    start += part;
  }
  HeckeElement y = yb_element(alg, mu, u);
  bool literal = true;
  for (const auto& p : random_probes(n, probes, seed)) {
    RationalFunction f(p);
    RationalFunction lhs = realize(y, f);
    RationalFunction d = apply_permutation(Family::partial, mu, f);
    rep.expect(lhs == lambda * factor * d, "Y_" + mu.to_string() + "(f)", "f = " + render(p));
    literal = literal && lhs == factor * d;
  }
  if (mode == AppendixMode::qpow)
    rep.note("normalization lambda = " + render(lambda) + (literal ? "; unnormalized form holds" : "; unnormalized form fails"));
  return rep;
}

// Rank of a rational matrix by Gaussian elimination.
inline int matrix_rank(std::vector<std::vector<Coefficient>> m) {
  int rank = 0;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      Coefficient k = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= k * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Schubert-basis coordinate c_nu(f) = (d_nu f)(0).
inline Coefficient schubert_coordinate(const RationalFunction& f, const Permutation& nu) {
  RationalFunction g = apply_permutation(Family::partial, nu, f);
  if (!g.is_polynomial()) throw InvalidPolynomial("coordinate extraction needs a polynomial");
  return g.as_laurent().constant_term();
}

// Y^s_mu(x^delta) with u_i = i for all mu: their Schubert coordinates form an
// invertible n! x n! matrix. The coordinate map is first validated on the
// single Schubert polynomials X_mu(x, 0).
inline Report verify_cohomology_basis(int n) {
  if (n < 1 || n > 4) throw RankOutOfRange("cohomology-basis check supports 1 <= n <= 4");
  Report rep;
  rep.suite = "cohomology-basis[n=" + std::to_string(n) + "]";
  auto perms = enumerate(n, kMaxRank);
  auto X = schubert_table(n, kMaxRank);
  Substitution y0;
  for (int i = 1; i <= n; ++i) y0.set(VarId::y(i), 0);
  for (const auto& mu : perms)
    for (const auto& nu : perms) {
      Coefficient c = schubert_coordinate(y0(X[mu]), nu);
      rep.expect(c == (mu == nu ? 1 : 0), "oracle c_" + nu.to_string() + "(X_" + mu.to_string() + ")");
    }
  AlgebraSpec alg(Family::s, n);
  SpectralParams u;
  for (int i = 1; i <= n; ++i) u.u.push_back(RationalFunction(i));
  LaurentPoly delta = 1;
  for (int i = 1; i < n; ++i) delta *= LaurentPoly::variable(VarId::x(i), n - i);
  auto basis = yb_basis(alg, u);
  std::vector<std::vector<Coefficient>> m;
  for (const auto& mu : perms) {
    RationalFunction img = realize(basis.at(mu), RationalFunction(delta));
    std::vector<Coefficient> row;
    for (const auto& nu : perms) row.push_back(schubert_coordinate(img, nu));
    m.push_back(std::move(row));
  }
  int rank = matrix_rank(m);
  rep.expect(rank == static_cast<int>(perms.size()), "coordinate matrix invertible",
             "rank " + std::to_string(rank) + " of " + std::to_string(perms.size()));
  return rep;
}

// x_i -> 1/(1 - a_i), y_j -> 1/(1 - b_j) sends G_mu to a rational function
// regular at 0 whose lowest-degree part is X_mu(a, b); a, b reuse the names
// x, y.
inline Report verify_groth_to_schubert_degeneration(int n) {
  if (n < 1 || n > 3) throw RankOutOfRange("degeneration check supports 1 <= n <= 3");
  Report rep;
  rep.suite = "degeneration[n=" + std::to_string(n) + "]";
  auto X = schubert_table(n, kMaxRank);
  auto G = grothendieck_table(n, kMaxRank);
  Substitution s;
  for (int i = 1; i <= n; ++i) {
    s.set(VarId::x(i), (1 - RationalFunction::variable(VarId::x(i))).inverse());
    s.set(VarId::y(i), (1 - RationalFunction::variable(VarId::y(i))).inverse());
  }
  VarSet xy = VarSet::family(VarFamily::x, n) | VarSet::family(VarFamily::y, n);
  for (const auto& [mu, g] : G.entries) {
    RationalFunction r = s(g);
    Coefficient d0 = r.denominator().constant_term();
    if (!rep.expect(d0 != 0, "G_" + mu.to_string() + " regular at 0")) continue;
    LaurentPoly low = lowest_homogeneous_component(r.numerator(), xy);
    LaurentPoly got = low.scaled(Coefficient(1) / d0);
    rep.expect(got == X[mu], "G_" + mu.to_string(), "lowest part " + render(got) + ", X = " + render(X[mu]));
  }
  return rep;
}

}  // namespace ybhecke
