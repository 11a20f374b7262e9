#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "ybhecke/errors.hpp"
#include "ybhecke/exactalg/text.hpp"
#include "ybhecke/hecke/algebra.hpp"
#include "ybhecke/io/format.hpp"
#include "ybhecke/report.hpp"
#include "ybhecke/schubgroth/tables.hpp"
#include "ybhecke/schubgroth/transition.hpp"

namespace ybhecke {

using Json = nlohmann::ordered_json;

inline VarId var_from_name(const std::string& name) {
  if (name == "q1") return VarId::q1();
  if (name == "q2") return VarId::q2();
  if (name.size() == 2 && std::isdigit(static_cast<unsigned char>(name[1])) && name[1] != '0') {
    int i = name[1] - '0';
    switch (name[0]) {
      case 'x': return VarId::x(i);
      case 'y': return VarId::y(i);
      case 'u': return VarId::u(i);
      default: break;
    }
  }
  throw ParseError("unknown variable '" + name + "'");
}

// [{"coeff": "p/q", "monomial": {"x1": -1, ...}}, ...] in display order.
inline Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const Term* t : detail::display_terms(p)) {
    Json mono = Json::object();
    for (int s : detail::display_order())
      if (t->mono[s] != 0) mono[VarId::from_slot(s).name()] = static_cast<int>(t->mono[s]);
    arr.push_back({{"coeff", t->coeff.get_str()}, {"monomial", mono}});
  }
  return arr;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<Term> terms;
  for (const auto& t : j) {
    Monomial m;
    for (const auto& [name, e] : t.at("monomial").items()) m.set(var_from_name(name).slot(), e.get<int>());
    Coefficient c;
    if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) throw ParseError("bad coefficient");
    c.canonicalize();
    terms.push_back({m, c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

// {"num": [...], "den": [...]}.
inline Json to_json(const RationalFunction& f) { return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}}; }

inline RationalFunction rational_from_json(const Json& j) {
  LaurentPoly num = laurent_from_json(j.at("num"));
  LaurentPoly den = laurent_from_json(j.at("den"));
  if (den.is_zero()) throw DivisionByZero("zero denominator in JSON");
  return RationalFunction::quotient(num, den);
}

// {"family": ..., "n": ..., "terms": {"35142": rf, ...}} in (length, window) order.
inline Json to_json(const HeckeElement& h) {
  std::vector<Permutation> order;
  for (const auto& [mu, c] : h.terms()) order.push_back(mu);
  std::sort(order.begin(), order.end(), by_length_then_window);
  Json terms = Json::object();
  for (const auto& mu : order) terms[mu.to_string()] = to_json(h.terms().at(mu));
  return {{"family", h.algebra().name()}, {"n", h.algebra().n}, {"terms", terms}};
}

inline Json to_json(const PolyTable& t) {
  Json entries = Json::object();
  for (const auto& mu : t.ordered()) entries[mu.to_string()] = to_json(t[mu]);
  return {{"kind", t.kind == PolyTable::Kind::schubert ? "schubert" : "grothendieck"}, {"n", t.n}, {"entries", entries}};
}

inline Json to_json(const Report& r) {
  Json failures = Json::array();
  for (const auto& w : r.failures) failures.push_back({{"check", w.check}, {"detail", w.detail}});
  Json j = {{"suite", r.suite}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", failures}, {"notes", r.notes}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

inline Json to_json(const TransitionMatrix& m) {
  Json entries = Json::array();
  for (const auto& [key, c] : m.entries)
    entries.push_back({{"row", key.first.to_string()}, {"col", key.second.to_string()}, {"value", to_json(c)}});
  return {{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

}  // namespace ybhecke
