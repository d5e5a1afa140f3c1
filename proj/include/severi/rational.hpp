#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace severi {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number.  The backing boost type keeps the canonical form:
// gcd(|numerator|, denominator) = 1, denominator > 0, zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : v_(value) {}                  // NOLINT: implicit by design
  Rational(long long value) : v_(value) {}            // NOLINT
  Rational(unsigned value) : v_(value) {}             // NOLINT
  Rational(unsigned long long value) : v_(value) {}   // NOLINT
  Rational(const Integer& value) : v_(value) {}       // NOLINT

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = Backing(num);
    v_ /= Backing(den);
  }

  // Accepts "p" or "p/q" with optional leading '-'.
  static Rational parse(std::string_view text);

  Integer numerator() const { return boost::multiprecision::numerator(v_); }
  Integer denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  bool is_nonnegative() const { return v_ >= 0; }

  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational pow(unsigned e) const;

  // "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  using Backing = boost::multiprecision::cpp_rational;
  Backing v_;
};

// Generalized binomial coefficient: top*(top-1)*...*(top-k+1) / k!.
// Exact for any integer top, including negative values.
Integer binomial(const Integer& top, unsigned k);

// (sum parts)! / prod(parts!) computed by iterated binomials.
Integer multinomial(const std::vector<unsigned>& parts);

Integer int_pow(const Integer& base, unsigned e);

}  // namespace severi
