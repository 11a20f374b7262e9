#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ybhecke/exactalg/text.hpp"
#include "ybhecke/hecke/yang_baxter.hpp"

namespace ybhecke {

// Generator letter per family: T_mu, d_mu, sigma_mu, s_mu, pi_mu, pibar_mu.
inline std::string basis_symbol(Family f, Style style) {
  switch (f) {
    case Family::T: return "T";
    case Family::partial: return style == Style::latex ? "\\partial" : "d";
    case Family::sigma: return style == Style::latex ? "\\sigma" : "sigma";
    case Family::s: return "s";
    case Family::pi: return style == Style::latex ? "\\pi" : "pi";
    case Family::pibar: return style == Style::latex ? "\\bar\\pi" : "pibar";
  }
  return "D";
}

inline bool by_length_then_window(const Permutation& a, const Permutation& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.window() < b.window();
}

// Wraps sums in parentheses when used as a factor.
inline std::string coefficient_factor(const RationalFunction& c, Style style) {
  std::string s = render(c, style);
  bool atomic = c.is_laurent() && c.polynomial_part().size() == 1;
  return atomic ? s : "(" + s + ")";
}

// sum_mu c_mu D_mu, terms ordered by (length, window); the identity is
// written as its bare coefficient.
inline std::string render(const HeckeElement& h, Style style = Style::text) {
  if (h.is_zero()) return "0";
  std::vector<Permutation> order;
  for (const auto& [mu, c] : h.terms()) order.push_back(mu);
  std::sort(order.begin(), order.end(), by_length_then_window);
  std::string sym = basis_symbol(h.algebra().tag(), style);
  std::string out;
  for (const auto& mu : order) {
    const RationalFunction& c = h.terms().at(mu);
    std::string term;
    if (mu.is_identity()) {
      term = render(c, style);
      if (!out.empty() && !(c.is_laurent() && c.polynomial_part().size() == 1)) term = "(" + term + ")";
    } else {
      std::string basis = style == Style::latex ? sym + "_{" + mu.to_string() + "}" : sym + "[" + mu.to_string() + "]";
      if (c.is_one()) term = basis;
      else if ((-c).is_one()) term = "-" + basis;
      else term = coefficient_factor(c, style) + (style == Style::latex ? " " : "*") + basis;
    }
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

// Shorthand "(ji)Dk" for the elementary factor Y_k(u_i, u_j).
inline std::string shorthand_factor(Family f, int large, int small, int generator, Style style) {
  std::string sym = basis_symbol(f, style);
  std::string label = "(" + std::to_string(large) + std::to_string(small) + ")";
  return style == Style::latex ? label + sym + "_{" + std::to_string(generator) + "}"
                               : label + sym + std::to_string(generator);
}

// Factor sequence of Y_mu: Rothe reading order, or the canonical reduced word.
inline std::string factor_sequence(Family f, const Permutation& mu, bool rothe, Style style = Style::text) {
  std::vector<std::string> parts;
  if (rothe) {
    for (const auto& r : rothe_factors(mu)) parts.push_back(shorthand_factor(f, r.large, r.small, r.generator, style));
  } else {
    Permutation nu = Permutation::identity(mu.rank());
    for (int j : mu.reduced_word()) {
      parts.push_back(shorthand_factor(f, nu(j + 1), nu(j), j, style));
      nu = nu.times_simple(j);
    }
  }
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : (style == Style::latex ? " \\, " : " ")) + p;
  return out;
}

}  // namespace ybhecke
