#include "valtree/parse.hpp"

#include "valtree/errors.hpp"

#include <cctype>

namespace valtree {

namespace {

// Recursive descent over + - * ^ and parentheses; every value is a polynomial in
// `var` with Puiseux coefficients.
class ExprParser {
 public:
  ExprParser(std::string_view s, char var, std::size_t base) : s_(s), var_(var), base_(base) {}

  Poly parse_all() {
    Poly p = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base_ + i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_word(std::string_view w) {
    skip();
    return s_.substr(i_, w.size()) == w;
  }

  Poly sum() {
    skip();
    Poly acc;
    bool first = true;
    while (true) {
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!first && !eat('+')) break;
      else if (first) eat('+');
      Poly term = product();
      acc = neg ? acc - term : acc + term;
      first = false;
      skip();
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) break;
    }
    return acc;
  }

  Poly product() {
    Poly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  Integer integer_token() {
    skip();
    std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_ || (i_ == start + 1 && s_[start] == '-')) fail("expected an integer");
    return Integer(std::string(s_.substr(start, i_ - start)));
  }

  Rational number_token() {
    skip();
    std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (digits == i_) fail("expected a number");
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      std::size_t dstart = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (dstart == i_) fail("expected a denominator");
    }
    std::string_view tok = s_.substr(start, i_ - start);
    try {
      return parse_rational(tok);
    } catch (const ParseError&) {
      throw ParseError("malformed rational '" + std::string(tok) + "'", base_ + start);
    }
  }

  // `^k` or `^(p/q)`
  Rational exponent() {
    if (eat('(')) {
      Rational e = number_token();
      expect(')');
      return e;
    }
    return Rational(integer_token());
  }

  unsigned small_power() {
    std::size_t at = i_;
    Rational e = exponent();
    if (e.get_den() != 1 || e < 0 || e > 1000) throw ParseError("power must be a small nonnegative integer", base_ + at);
    return static_cast<unsigned>(e.get_num().get_ui());
  }

  Poly power() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == 't' && var_ != 't') {
      ++i_;
      Rational e = eat('^') ? exponent() : Rational(1);
      return Poly::constant(PuiseuxElt::t_pow(e));
    }
    Poly base = atom();
    if (eat('^')) return base.pow(small_power());
    return base;
  }

  Poly atom() {
    skip();
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly p = sum();
      expect(')');
      return p;
    }
    if (c == var_) {
      ++i_;
      return Poly({PuiseuxElt(), PuiseuxElt(1)});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(PuiseuxElt(number_token()));
    if (at_word("zeta")) {
      i_ += 4;
      expect('(');
      std::size_t at = i_;
      Integer n = integer_token();
      expect(',');
      Integer k = integer_token();
      expect(')');
      if (n < 1 || n > 10000) throw ParseError("zeta order out of range", base_ + at);
      return Poly::constant(PuiseuxElt(Cyclo::root_of_unity(static_cast<int>(n.get_si()), k.get_si())));
    }
    if (c == 'O') {
      ++i_;
      expect('(');
      skip();
      if (i_ >= s_.size() || s_[i_] != 't') fail("expected t inside O(...)");
      ++i_;
      Rational e = eat('^') ? exponent() : Rational(1);
      expect(')');
      return Poly::constant(PuiseuxElt::big_o(e));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  char var_;
  std::size_t base_;
  std::size_t i_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

PuiseuxElt parse_puiseux(std::string_view text) {
  Poly p = ExprParser(text, '\0', 0).parse_all();
  if (p.degree() > 0) throw ParseError("unexpected variable in a Puiseux literal", 0);
  return p.coeff(0);
}

Poly parse_poly(std::string_view text) { return ExprParser(text, 'x', 0).parse_all(); }

QPoly parse_qpoly(std::string_view text, char var) {
  Poly p = ExprParser(text, var, 0).parse_all();
  std::vector<Rational> c;
  for (const auto& a : p.coeffs()) {
    if (!a.is_exact() || a.terms().size() > 1 || (a.terms().size() == 1 && a.terms().begin()->first != 0))
      throw ParseError("coefficients must be rational", 0);
    Cyclo v = a.coeff(Rational(0));
    if (!v.is_rational()) throw ParseError("coefficients must be rational", 0);
    c.push_back(v.to_rational());
  }
  return QPoly(std::move(c));
}

CallSyntax parse_call(std::string_view text) {
  CallSyntax out;
  std::size_t open = text.find('(');
  if (open == std::string_view::npos) throw ParseError("expected '('", text.size());
  out.name = trim(text.substr(0, open));
  std::size_t close = text.find_last_of(')');
  if (close == std::string_view::npos || close < open) throw ParseError("expected ')'", text.size());
  if (!trim(text.substr(close + 1)).empty()) throw ParseError("trailing characters", close + 1);
  int depth = 0;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i <= close; ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0 && i != close) throw ParseError("unbalanced ')'", i);
      --depth;
    }
    if ((c == ',' && depth == 0) || i == close) {
      std::string arg = trim(text.substr(start, i - start));
      if (!(arg.empty() && i == close && out.args.empty())) {
        if (arg.empty()) throw ParseError("empty argument", start);
        out.args.push_back(arg);
        std::size_t lead = start;
        while (lead < i && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
        out.offsets.push_back(lead);
      }
      start = i + 1;
    }
  }
  return out;
}

QuasiCut parse_radius(std::string_view text_in) {
  std::string text = trim(text_in);
  if (text.empty()) throw ParseError("empty radius", 0);
  if (text == "-inf") return QuasiCut::neg_inf();
  if (text == "inf-") return QuasiCut::inf_minus();
  if (text == "inf") return QuasiCut::inf();
  if (text.rfind("real", 0) == 0) {
    CallSyntax call = parse_call(text);
    if (call.name != "real" || call.args.size() != 3) throw ParseError("real(<poly>, lo, hi) expects 3 arguments", 0);
    QPoly p;
    try {
      p = parse_qpoly(call.args[0], 'y');
    } catch (const ParseError& e) {
      throw ParseError("bad polynomial in real(...)", call.offsets[0] + e.position());
    }
    Rational lo = parse_rational(call.args[1]);
    Rational hi = parse_rational(call.args[2]);
    return QuasiCut::real(p, lo, hi);
  }
  char last = text.back();
  if (last == '-' || last == '+') {
    Rational g = parse_rational(std::string_view(text).substr(0, text.size() - 1));
    return last == '-' ? QuasiCut::minus(g) : QuasiCut::plus(g);
  }
  return QuasiCut::elem(parse_rational(text));
}

}  // namespace valtree
