#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/exactalg/substitute.hpp"
#include "ybhecke/hecke/yang_baxter.hpp"
#include "ybhecke/polyops/operators.hpp"
#include "ybhecke/symgroup/permutation.hpp"

namespace ybhecke {

inline constexpr int kTableMaxRank = 5;

// Polynomials indexed by S_n: double Schubert (x - y) or double Grothendieck
// (1 - y/x) family.
struct PolyTable {
  enum class Kind { schubert, grothendieck };
  Kind kind = Kind::schubert;
  int n = 1;
  std::map<Permutation, LaurentPoly> entries;

  const LaurentPoly& operator[](const Permutation& mu) const { return entries.at(mu); }
  const LaurentPoly& operator[](const char* mu) const { return entries.at(Permutation::parse(mu)); }

  // Permutations sorted by (length, window).
  std::vector<Permutation> ordered() const {
    std::vector<Permutation> out;
    for (const auto& [mu, p] : entries) out.push_back(mu);
    std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.window() < b.window();
    });
    return out;
  }
};

using SchubertTable = PolyTable;
using GrothendieckTable = PolyTable;

// prod_{i+j<=n} (x_i - y_j).
inline LaurentPoly schubert_top(int n) {
  LaurentPoly p = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) p *= LaurentPoly::variable(VarId::x(i)) - LaurentPoly::variable(VarId::y(j));
  return p;
}

// prod_{i+j<=n} (1 - y_j/x_i).
inline LaurentPoly grothendieck_top(int n) {
  LaurentPoly p = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j)
      p *= LaurentPoly(1) - LaurentPoly::variable(VarId::y(j)) * LaurentPoly::variable(VarId::x(i), -1);
  return p;
}

namespace detail {

// Descends from omega: each P_mu is D_i P_{mu s_i} for an ascent i of mu.
inline PolyTable descend(PolyTable::Kind kind, int n, int max_rank) {
  if (n < 1 || n > max_rank) throw RankOutOfRange("table rank must be in 1.." + std::to_string(max_rank));
  PolyTable t;
  t.kind = kind;
  t.n = n;
  Family fam = kind == PolyTable::Kind::schubert ? Family::partial : Family::pi;
  auto perms = enumerate(n, kMaxRank);
  std::stable_sort(perms.begin(), perms.end(),
                   [](const Permutation& a, const Permutation& b) { return a.length() > b.length(); });
  for (const auto& mu : perms) {
    if (mu == Permutation::longest(n)) {
      t.entries.emplace(mu, kind == PolyTable::Kind::schubert ? schubert_top(n) : grothendieck_top(n));
      continue;
    }
    int i = 1;
    while (mu.has_descent(i)) ++i;
    const LaurentPoly& parent = t.entries.at(mu.times_simple(i));
    t.entries.emplace(mu, apply_generator(fam, n, i, RationalFunction(parent)).as_laurent());
  }
  return t;
}

}  // namespace detail

inline SchubertTable schubert_table(int n, int max_rank = kTableMaxRank) {
  return detail::descend(PolyTable::Kind::schubert, n, max_rank);
}

inline GrothendieckTable grothendieck_table(int n, int max_rank = kTableMaxRank) {
  return detail::descend(PolyTable::Kind::grothendieck, n, max_rank);
}

// x_i -> u_{mu(i)}, y_j -> u_j.
inline Substitution double_specialization(const Permutation& mu, const SpectralParams& u) {
  Substitution s;
  for (int i = 1; i <= mu.rank(); ++i) {
    s.set(VarId::x(i), u(mu(i)));
    s.set(VarId::y(i), u(i));
  }
  return s;
}

inline RationalFunction specialize_double(const LaurentPoly& p, const Permutation& mu, const SpectralParams& u) {
  return double_specialization(mu, u)(p);
}

// Entry-wise inverse of the spectral parameters.
inline SpectralParams reciprocal(const SpectralParams& u) {
  SpectralParams r;
  for (const auto& v : u.u) r.u.push_back(v.inverse());
  return r;
}

// x_i -> x_{mu(i)}: the permutation acting on the x variables.
inline RationalFunction permute_x(const RationalFunction& f, const Permutation& mu) {
  Substitution s;
  for (int i = 1; i <= mu.rank(); ++i) s.rename(VarId::x(i), VarId::x(mu(i)));
  return s(f);
}

}  // namespace ybhecke
