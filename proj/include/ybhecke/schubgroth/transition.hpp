#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ybhecke/exactalg/random.hpp"
#include "ybhecke/exactalg/text.hpp"
#include "ybhecke/hecke/yang_baxter.hpp"
#include "ybhecke/report.hpp"
#include "ybhecke/schubgroth/tables.hpp"

namespace ybhecke {

// Coefficients of Y_mu (rows) on the standard basis D_nu (columns).
struct TransitionMatrix {
  std::string rows, cols;
  std::map<std::pair<Permutation, Permutation>, RationalFunction> entries;

  RationalFunction operator()(const Permutation& mu, const Permutation& nu) const {
    auto it = entries.find({mu, nu});
    return it == entries.end() ? RationalFunction() : it->second;
  }
};

struct TransitionResult {
  TransitionMatrix matrix;
  Report report;
};

inline TransitionMatrix yb_transition(const AlgebraSpec& alg, const SpectralParams& u) {
  TransitionMatrix m;
  m.rows = "Y^" + alg.name();
  m.cols = alg.name();
  for (const auto& [mu, y] : yb_basis(alg, u))
    for (const auto& [nu, c] : y.terms()) m.entries.emplace(std::make_pair(mu, nu), c);
  return m;
}

namespace detail {

inline void compare_rows(Report& rep, const TransitionMatrix& m, const std::vector<Permutation>& rows, const PolyTable& table,
                         const SpectralParams& spec_u, const std::string& name) {
  for (const auto& mu : rows)
    for (const auto& [nu, p] : table.entries) {
      RationalFunction want = specialize_double(p, mu, spec_u);
      RationalFunction got = m(mu, nu);
      rep.expect(got == want, "[" + mu.to_string() + ", " + nu.to_string() + "]",
                 "coefficient " + render(got) + ", " + name + " gives " + render(want));
    }
}

}  // namespace detail

// Y^partial_mu = sum_nu X_nu(u^mu, u) partial_nu.
inline TransitionResult verify_schubert_transition(int n, const SpectralParams& u, int max_rank = kTableMaxRank) {
  TransitionResult r;
  r.report.suite = "schubert-transition[n=" + std::to_string(n) + "]";
  r.matrix = yb_transition(AlgebraSpec(Family::partial, n), u);
  detail::compare_rows(r.report, r.matrix, enumerate(n, kMaxRank), schubert_table(n, max_rank), u, "X_nu(u^mu,u)");
  for (const auto& [key, c] : r.matrix.entries)
    r.report.expect(key.second.length() <= key.first.length(), "unitriangular [" + key.first.to_string() + ", " + key.second.to_string() + "]");
  return r;
}

// Which specialization of G_nu the pibar transition is compared against:
// G_nu(1/u^mu, 1/u) (the identity that holds), or G_nu(u^mu, u) as literally
// stated in some sources.
enum class GrothendieckForm { reciprocal, literal };

inline TransitionResult verify_grothendieck_transition(int n, const SpectralParams& u,
                                                       GrothendieckForm form = GrothendieckForm::reciprocal,
                                                       int max_rank = kTableMaxRank) {
  TransitionResult r;
  r.report.suite = std::string("grothendieck-transition[n=") + std::to_string(n) +
                   (form == GrothendieckForm::literal ? ", literal]" : "]");
  r.matrix = yb_transition(AlgebraSpec(Family::pibar, n), u);
  SpectralParams spec_u = form == GrothendieckForm::reciprocal ? reciprocal(u) : u;
  std::string name = form == GrothendieckForm::reciprocal ? "G_nu(1/u^mu,1/u)" : "G_nu(u^mu,u)";
  detail::compare_rows(r.report, r.matrix, enumerate(n, kMaxRank), grothendieck_table(n, max_rank), spec_u, name);
  return r;
}

// Coefficients A_nu(mu) of Y^sigma_mu on the permutation basis.
inline std::map<Permutation, LaurentPoly> yang_coefficients(const Permutation& mu, const SpectralParams& u) {
  AlgebraSpec alg(Family::sigma, mu.rank());
  std::map<Permutation, LaurentPoly> out;
  HeckeElement y = yb_element(alg, mu, u);
  for (const auto& [nu, c] : y.terms()) {
    if (!c.is_polynomial()) throw InvalidPolynomial("A_" + nu.to_string() + "(" + mu.to_string() + ") has a denominator");
    out.emplace(nu, c.as_laurent());
  }
  return out;
}

// lowest_homogeneous_component(A_nu(mu)) = X_nu(u^mu, u), and the remaining
// terms have degree > l(nu), for the given pairs (formal u).
inline Report verify_yang_leading(int n, const std::vector<std::pair<Permutation, Permutation>>& pairs) {
  Report rep;
  rep.suite = "yang-leading[n=" + std::to_string(n) + "]";
  auto u = SpectralParams::formal(n);
  auto table = schubert_table(n, kMaxRank);
  VarSet uvars = VarSet::family(VarFamily::u, n);
  std::map<Permutation, std::map<Permutation, LaurentPoly>> rows;
  for (const auto& [mu, nu] : pairs) {
    auto it = rows.find(mu);
    if (it == rows.end()) it = rows.emplace(mu, yang_coefficients(mu, u)).first;
    auto a = it->second.find(nu);
    LaurentPoly A = a == it->second.end() ? LaurentPoly() : a->second;
    RationalFunction x = specialize_double(table[nu], mu, u);
    std::string tag = "A_" + nu.to_string() + "(" + mu.to_string() + ")";
    if (A.is_zero()) {
      rep.expect(x.is_zero(), tag, "A vanishes but X_nu(u^mu,u) = " + render(x));
      continue;
    }
    LaurentPoly low = lowest_homogeneous_component(A, uvars);
    rep.expect(RationalFunction(low) == x, tag, "lowest component " + render(low) + ", X_nu(u^mu,u) = " + render(x));
    LaurentPoly rest = A - low;
    bool higher = true;
    for (const auto& t : rest.terms()) higher = higher && t.mono.degree_in(uvars) > nu.length();
    rep.expect(higher && low.terms().front().mono.degree_in(uvars) == nu.length(), tag + " degrees");
  }
  return rep;
}

inline std::vector<std::pair<Permutation, Permutation>> all_pairs(int n) {
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& mu : enumerate(n, kMaxRank))
    for (const auto& nu : enumerate(n, kMaxRank)) out.emplace_back(mu, nu);
  return out;
}

// `count` distinct pairs (mu, nu) with A_nu(mu) != 0, drawn uniformly.
inline std::vector<std::pair<Permutation, Permutation>> sampled_support_pairs(int n, int count, std::uint64_t seed) {
  std::vector<std::pair<Permutation, Permutation>> support;
  for (const auto& [mu, y] : yb_basis(AlgebraSpec(Family::sigma, n), SpectralParams::formal(n)))
    for (const auto& [nu, c] : y.terms()) support.emplace_back(mu, nu);
  ProbeRng rng(seed);
  std::vector<std::pair<Permutation, Permutation>> out;
  for (int k = 0; k < count && !support.empty(); ++k) {
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(support.size()) - 1));
    out.push_back(support[i]);
    support.erase(support.begin() + static_cast<long>(i));
  }
  return out;
}

}  // namespace ybhecke
