#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/hecke/verify.hpp"
#include "ybhecke/polyops/relations.hpp"
#include "ybhecke/schubgroth.hpp"

namespace ybhecke {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "relations",        "ybe",    "word-independence", "orthogonality", "schubert-transition", "grothendieck-transition",
      "yang-leading",     "newton", "normal-ordering",   "appendix",      "cohomology-basis",    "degeneration",
      "hecke-properties", "all"};
  return names;
}

struct SuiteConfig {
  int n = 3;
  std::optional<OperatorFamily> family;  // all applicable families when unset
  std::uint64_t seed = 1;
  int probes = 10;
  std::optional<std::vector<int>> shape;  // appendix only
  std::optional<AppendixMode> mode;       // appendix only
  std::optional<int> max_rank;            // overrides every suite's rank guard
  bool force = false;                     // lifts the symbolic-T limit n <= 3
};

// YB_HECKE_MAX_N, when set to an integer in 1..9.
inline std::optional<int> env_max_rank() {
  const char* v = std::getenv("YB_HECKE_MAX_N");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > kMaxRank) throw RankOutOfRange("YB_HECKE_MAX_N must be an integer in 1..9");
  return static_cast<int>(n);
}

namespace detail {

inline int rank_guard(const SuiteConfig& c, int default_guard) { return c.max_rank.value_or(default_guard); }

inline void require_rank(const SuiteConfig& c, const std::string& suite, int lo, int default_guard) {
  int hi = rank_guard(c, default_guard);
  if (c.n < lo || c.n > hi)
    throw RankOutOfRange(suite + " supports " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
}

inline std::vector<OperatorFamily> families_or(const SuiteConfig& c, std::vector<Family> defaults) {
  if (c.family) return {*c.family};
  return {defaults.begin(), defaults.end()};
}

inline const std::vector<Family> kAllFamilies = {Family::sigma, Family::partial, Family::s, Family::pi, Family::pibar, Family::T};

}  // namespace detail

// Runs one named suite; throws RankOutOfRange / ParseError on configuration
// errors and std::invalid_argument for an unknown suite.
inline std::vector<Report> run_suite(const std::string& name, const SuiteConfig& c) {
  using namespace detail;
  std::vector<Report> out;
  if (name == "relations") {
    require_rank(c, name, 1, 5);
    for (const auto& f : families_or(c, kAllFamilies)) out.push_back(check_relations(f, c.n, c.probes, c.seed));
  } else if (name == "ybe") {
    require_rank(c, name, 1, 5);
    for (const auto& f : families_or(c, kAllFamilies)) out.push_back(verify_ybe(f, std::max(c.n, 3)));
  } else if (name == "word-independence") {
    require_rank(c, name, 1, 4);
    for (const auto& f : families_or(c, kAllFamilies))
      out.push_back(verify_word_independence(AlgebraSpec(f, c.n), SpectralParams::formal(c.n)));
  } else if (name == "orthogonality") {
    require_rank(c, name, 1, 4);
    for (const auto& f : families_or(c, kAllFamilies)) {
      bool symbolic_t = f.tag == Family::T && !f.q1.is_constant();
      if (symbolic_t && c.n > rank_guard(c, 3) && !c.force) {
        if (c.family) throw RankOutOfRange("symbolic T-family orthogonality is limited to n <= 3 (use --force)");
        continue;
      }
      out.push_back(verify_orthogonality(AlgebraSpec(f, c.n), SpectralParams::formal(c.n)));
    }
  } else if (name == "schubert-transition") {
    require_rank(c, name, 1, 4);
    out.push_back(verify_tables(c.n));
    out.push_back(verify_schubert_transition(c.n, SpectralParams::formal(c.n), kMaxRank).report);
  } else if (name == "grothendieck-transition") {
    require_rank(c, name, 1, 4);
    out.push_back(verify_grothendieck_transition(c.n, SpectralParams::formal(c.n), GrothendieckForm::reciprocal, kMaxRank).report);
  } else if (name == "yang-leading") {
    require_rank(c, name, 1, 4);
    if (c.n <= 3) out.push_back(verify_yang_leading(c.n, all_pairs(c.n)));
    else out.push_back(verify_yang_leading(c.n, sampled_support_pairs(c.n, 20, c.seed)));
  } else if (name == "newton") {
    require_rank(c, name, 1, 3);
    out.push_back(verify_newton_interpolation(c.n, c.probes, c.seed));
  } else if (name == "normal-ordering") {
    require_rank(c, name, 1, 3);
    out.push_back(verify_normal_ordering(c.n, c.probes, c.seed));
  } else if (name == "appendix") {
    if (c.shape) {
      for (auto m : c.mode ? std::vector<AppendixMode>{*c.mode} : std::vector<AppendixMode>{AppendixMode::qpow, AppendixMode::linear})
        out.push_back(verify_appendix_factorizations(*c.shape, m, std::min(c.probes, 5), c.seed));
    } else {
      require_rank(c, name, 1, 4);
      if (!c.mode || *c.mode == AppendixMode::qpow)
        out.push_back(verify_appendix_factorizations(c.n == 4 ? std::vector<int>{2, 2} : std::vector<int>{c.n}, AppendixMode::qpow,
                                                     std::min(c.probes, 5), c.seed));
      if (!c.mode || *c.mode == AppendixMode::linear)
        out.push_back(verify_appendix_factorizations({c.n}, AppendixMode::linear, std::min(c.probes, 5), c.seed));
    }
  } else if (name == "cohomology-basis") {
    require_rank(c, name, 1, 4);
    out.push_back(verify_cohomology_basis(c.n));
  } else if (name == "degeneration") {
    require_rank(c, name, 1, 3);
    out.push_back(verify_groth_to_schubert_degeneration(c.n));
  } else if (name == "hecke-properties") {
    require_rank(c, name, 1, 4);
    for (const auto& f : families_or(c, kAllFamilies)) {
      AlgebraSpec alg(f, c.n);
      out.push_back(verify_associativity(alg, c.seed));
      out.push_back(verify_phi(alg, c.seed));
      out.push_back(verify_faithfulness(alg, c.seed, c.probes));
      out.push_back(verify_rothe(alg, SpectralParams::formal(c.n), enumerate(c.n, kMaxRank)));
    }
    if (c.n >= 2) out.push_back(verify_descent_identity(c.n));
  } else if (name == "all") {
    // Every suite, with n clamped to the suite's own range.
    const std::vector<std::pair<std::string, int>> plan = {
        {"relations", 5},    {"ybe", 5},     {"word-independence", 4}, {"orthogonality", 3}, {"schubert-transition", 4},
        {"grothendieck-transition", 4}, {"yang-leading", 4}, {"newton", 3}, {"normal-ordering", 3}, {"appendix", 4},
        {"cohomology-basis", 4}, {"degeneration", 3}, {"hecke-properties", 4}};
    for (const auto& [suite, guard] : plan) {
      SuiteConfig sc = c;
      sc.n = std::min(c.n, rank_guard(c, guard));
      sc.shape.reset();
      sc.mode.reset();
      for (auto& r : run_suite(suite, sc)) out.push_back(std::move(r));
    }
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return out;
}

}  // namespace ybhecke
