#include "severi/rational.hpp"

namespace severi {

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(Integer(std::string(text)));
  }
  Integer num(std::string(text.substr(0, slash)));
  Integer den(std::string(text.substr(slash + 1)));
  return Rational(num, den);
}

Rational Rational::pow(unsigned e) const {
  Rational result(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::string Rational::to_string() const {
  std::string s = numerator().str();
  if (!is_integer()) {
    s += '/';
    s += denominator().str();
  }
  return s;
}

Integer binomial(const Integer& top, unsigned k) {
  Integer num = 1;
  for (unsigned i = 0; i < k; ++i) num *= top - i;
  Integer den = 1;
  for (unsigned i = 2; i <= k; ++i) den *= i;
  return num / den;  // divides exactly
}

Integer multinomial(const std::vector<unsigned>& parts) {
  Integer result = 1;
  Integer running = 0;
  for (unsigned p : parts) {
    running += p;
    result *= binomial(running, p);
  }
  return result;
}

Integer int_pow(const Integer& base, unsigned e) {
  Integer result = 1;
  Integer b = base;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

}  // namespace severi
