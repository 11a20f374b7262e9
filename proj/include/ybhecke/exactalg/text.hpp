#pragma once

#include <algorithm>
#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ybhecke/errors.hpp"
#include "ybhecke/exactalg/rational_function.hpp"

namespace ybhecke {

// Text syntax: variables x1 y2 u3 q1 q2, integers, + - * /, ^ with a signed
// integer exponent, parentheses for grouping. Multiplication is explicit.
class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != src_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(src_) + "'");
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (accept('-')) neg = true;
      else if (!first && !accept('+')) break;
      else if (first) accept('+');
      RationalFunction t = term();
      r = neg ? r - t : r + t;
      first = false;
      skip();
      if (pos_ >= src_.size() || (src_[pos_] != '+' && src_[pos_] != '-')) break;
    }
    return r;
  }

  RationalFunction term() {
    RationalFunction r = power();
    for (;;) {
      if (accept('*')) {
        r *= power();
      } else if (accept('/')) {
        RationalFunction d = power();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else {
        return r;
      }
    }
  }

  RationalFunction power() {
    RationalFunction b = atom();
    if (accept('^')) {
      skip();
      bool neg = false;
      if (accept('-')) neg = true;
      else accept('+');
      skip();
      long e = integer();
      if (e > 127) fail("exponent too large");
      if (neg && b.is_zero()) fail("negative power of zero");
      b = b.pow(neg ? -static_cast<int>(e) : static_cast<int>(e));
    }
    return b;
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 18) fail("integer too long for an exponent");
    return std::stol(digits);
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return RationalFunction(Coefficient(mpz_class(std::string(src_.substr(start, pos_ - start)))));
    }
    if (c == 'x' || c == 'y' || c == 'u' || c == 'q') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 1) fail("bad variable index");
      int idx = src_[start] - '0';
      if (c == 'q') {
        if (idx != 1 && idx != 2) fail("only q1 and q2 exist");
        return RationalFunction::variable(idx == 1 ? VarId::q1() : VarId::q2());
      }
      if (idx < 1) fail("variable index must be positive");
      VarFamily f = c == 'x' ? VarFamily::x : c == 'y' ? VarFamily::y : VarFamily::u;
      return RationalFunction::variable(VarId(f, idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

inline RationalFunction parse_rational(std::string_view s) { return Parser(s).parse(); }

inline LaurentPoly parse_laurent(std::string_view s) {
  RationalFunction r = parse_rational(s);
  if (!r.is_laurent()) throw ParseError("expected a Laurent polynomial: '" + std::string(s) + "'");
  LaurentPoly p = r.as_laurent();
  if (!p.laurent_valid()) throw InvalidPolynomial("negative exponents only allowed on x and u variables");
  return p;
}

enum class Style { text, latex };

namespace detail {

// Display order: x1..x9, y1..y9, u1..u9, q1, q2.
inline std::vector<int> display_slots() {
  std::vector<int> order;
  for (VarFamily f : {VarFamily::x, VarFamily::y, VarFamily::u})
    for (int i = 1; i <= kMaxRank; ++i) order.push_back(VarId(f, i).slot());
  order.push_back(VarId::q1().slot());
  order.push_back(VarId::q2().slot());
  return order;
}

inline const std::vector<int>& display_order() {
  static const std::vector<int> order = display_slots();
  return order;
}

inline std::string var_name(int slot, Style style) {
  VarId v = VarId::from_slot(slot);
  if (style == Style::text) return v.name();
  std::string n = v.name();
  return std::string(1, n[0]) + "_" + n.substr(1);
}

// Renders the positive part of a monomial (nonnegative exponents only);
// returns "" for the unit monomial.
inline std::string render_monomial(const Monomial& m, Style style) {
  std::string out;
  for (int s : display_order()) {
    int e = m[s];
    if (e <= 0) continue;
    if (!out.empty() && style == Style::text) out += "*";
    out += var_name(s, style);
    if (e > 1) out += style == Style::text ? "^" + std::to_string(e) : "^{" + std::to_string(e) + "}";
  }
  return out;
}

inline std::string render_coeff(const Coefficient& c, Style style) {
  if (style == Style::latex && c.get_den() != 1)
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
  return c.get_str();
}

// Terms in display order: higher degree first, then reverse-lex along the
// display order so x1 precedes x2 precedes y1.
inline std::vector<const Term*> display_terms(const LaurentPoly& p) {
  std::vector<const Term*> ts;
  for (const auto& t : p.terms()) ts.push_back(&t);
  std::stable_sort(ts.begin(), ts.end(), [](const Term* a, const Term* b) {
    if (a->mono.degree() != b->mono.degree()) return a->mono.degree() > b->mono.degree();
    for (int s : display_order())
      if (a->mono[s] != b->mono[s]) return a->mono[s] > b->mono[s];
    return false;
  });
  return ts;
}

inline std::string render_term_body(const Coefficient& abs_c, const Monomial& m, Style style) {
  std::string num = render_monomial(m.positive_part(), style);
  std::string den = render_monomial(m.negative_part(), style);
  Coefficient one = 1;
  if (style == Style::latex && !den.empty()) {
    mpz_class cn = abs_c.get_num(), cd = abs_c.get_den();
    std::string top = num.empty() ? cn.get_str() : (cn == 1 ? num : cn.get_str() + " " + num);
    std::string bot = cd == 1 ? den : cd.get_str() + " " + den;
    return "\\frac{" + top + "}{" + bot + "}";
  }
  std::string body;
  if (abs_c != one || num.empty()) {
    body = render_coeff(abs_c, style);
    if (!num.empty()) body += style == Style::text ? "*" + num : " " + num;
  } else {
    body = num;
  }
  if (!den.empty()) {
    bool multi = m.negative_part().degree() > 1 && den.find('*') != std::string::npos;
    body += "/" + (multi ? "(" + den + ")" : den);
  }
  return body;
}

}  // namespace detail

inline std::string render(const LaurentPoly& p, Style style = Style::text) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term* t : detail::display_terms(p)) {
    bool neg = t->coeff < 0;
    Coefficient a = neg ? Coefficient(-t->coeff) : t->coeff;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += detail::render_term_body(a, t->mono, style);
    first = false;
  }
  return out;
}

inline std::string render(const RationalFunction& f, Style style = Style::text) {
  if (f.is_laurent()) return render(f.as_laurent(), style);
  LaurentPoly num = f.numerator();
  std::vector<std::string> dparts;
  std::string dmono = detail::render_monomial(f.monomial_part().negative_part(), style);
  if (!dmono.empty()) dparts.push_back(dmono);
  for (const auto& fac : f.factors()) {
    std::string s = "(" + render(fac.poly, style) + ")";
    if (fac.mult > 1) s += style == Style::text ? "^" + std::to_string(fac.mult) : "^{" + std::to_string(fac.mult) + "}";
    dparts.push_back(s);
  }
  std::string den;
  for (std::size_t i = 0; i < dparts.size(); ++i) {
    if (i) den += style == Style::text ? "*" : " ";
    den += dparts[i];
  }
  if (style == Style::latex) return "\\frac{" + render(num, style) + "}{" + den + "}";
  std::string n = render(num, style);
  if (num.size() > 1) n = "(" + n + ")";
  return n + "/(" + den + ")";
}

inline std::string to_string(const LaurentPoly& p) { return render(p); }
inline std::string to_string(const RationalFunction& f) { return render(f); }

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << render(p); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << render(f); }

}  // namespace ybhecke
