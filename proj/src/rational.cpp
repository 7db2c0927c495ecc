#include "valtree/rational.hpp"

#include "valtree/errors.hpp"

#include <cctype>

namespace valtree {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RationalInf& q) { return q ? q->get_str() : std::string("inf"); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == start) throw ParseError("expected digits in rational '" + std::string(text) + "'", start);
    return j;
  };
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t end = digits(i);
  Integer num(std::string(text.substr(i, end - i)));
  Integer den = 1;
  if (end < text.size()) {
    if (text[end] != '/') throw ParseError("unexpected character in rational", end);
    std::size_t dstart = end + 1;
    std::size_t dend = digits(dstart);
    if (dend != text.size()) throw ParseError("trailing characters in rational", dend);
    den = Integer(std::string(text.substr(dstart, dend - dstart)));
    if (den == 0) throw ParseError("zero denominator", dstart);
  }
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::strong_ordering compare(const RationalInf& a, const RationalInf& b) {
  if (!a && !b) return std::strong_ordering::equal;
  if (!a) return std::strong_ordering::greater;
  if (!b) return std::strong_ordering::less;
  int c = cmp(*a, *b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

RationalInf add(const RationalInf& a, const RationalInf& b) {
  if (!a || !b) return std::nullopt;
  return Rational(*a + *b);
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace valtree
