#include "dca/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dca {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto bad = [&] {
    return std::invalid_argument("malformed rational literal: '" + text + "'");
  };
  if (text.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw bad();
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw bad();
    q.canonicalize();
    return q;
  }
  // Decimal literal: shift the point away and divide by the matching power
  // of ten.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || frac_len == 0) throw bad();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i == 0 && (digits[i] == '+' || digits[i] == '-')) continue;
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw bad();
  }
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  return q.get_str();
}

Rational rat_from_double(double x) {
  Rational q(x);
  q.canonicalize();
  return q;
}

}  // namespace dca
