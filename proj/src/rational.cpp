#include "encdepth/rational.hpp"

#include <stdexcept>

namespace encdepth {

namespace {

// Digits of `text` as a non-negative integer. Rejects empty input and
// anything that is not a plain digit run.
mpz_class parse_digits(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid digit in literal: '" + std::string(text) + "'");
  mpz_class v;
  if (v.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("invalid integer literal: '" + std::string(text) + "'");
  return v;
}

bool strip_sign(std::string_view& text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  return negative;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty coordinate literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = strip_sign(num);
    mpz_class n = parse_digits(num);
    mpz_class d = parse_digits(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(negative ? mpz_class(-n) : n, d);
    r.canonicalize();
    return r;
  }

  std::string_view body = text;
  bool negative = strip_sign(body);
  std::string digits;
  std::size_t frac_len = 0;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ipart = body.substr(0, dot);
    std::string_view fpart = body.substr(dot + 1);
    if (fpart.find('.') != std::string_view::npos)
      throw std::invalid_argument("multiple '.' in literal: '" + std::string(text) + "'");
    if (ipart.empty() && fpart.empty())
      throw std::invalid_argument("no digits in literal: '" + std::string(text) + "'");
    digits = std::string(ipart) + std::string(fpart);
    frac_len = fpart.size();
  } else {
    digits = std::string(body);
  }
  if (digits.empty()) throw std::invalid_argument("no digits in literal: '" + std::string(text) + "'");

  mpz_class num = parse_digits(digits);
  if (negative) num = -num;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10u, static_cast<unsigned long>(frac_len));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace encdepth
