#pragma once

#include <string>
#include <vector>

#include "severi/enumerate.hpp"
#include "severi/phi.hpp"

namespace severi {

// Univariate polynomial in d with exact rational coefficients and the
// smallest d from which it is proven to compute the exact value.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(std::vector<Rational> ascending_coeffs, unsigned validity_threshold);

  static QPolynomial zero() { return QPolynomial({}, 1); }

  std::size_t degree() const;  // zero polynomial -> 0
  Rational coeff(std::size_t i) const;
  unsigned validity_threshold() const { return threshold_; }

  Rational eval(long long d) const;

  QPolynomial& operator+=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }

  bool same_coefficients(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

  // "3*d^2 - 6*d + 3"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;  // ascending powers of d
  unsigned threshold_ = 1;
};

// Q^{d,Gamma} evaluated exactly: mu * sum_{k=1}^{d+eps1-l} Phi_{v(k,l)};
// zero when d < l - eps1.
Rational q_d_gamma(const Template& t, unsigned d);

// The quadratic polynomial with threshold k_min + l - eps1 - 1, built from
// the constant prefix sum and Faulhaber summation of the linear form.
QPolynomial q_poly_gamma(const Template& t);

// Q_delta(d) = sum over templates of cogenus delta; threshold is the max
// over templates and never exceeds delta (checked).
QPolynomial q_poly_delta(unsigned delta);

// Exact Q^{d,delta} for every d, small-d regime included.
Rational q_value(unsigned delta, unsigned d);

// Fomin-Mikhalkin sum: N^{d,delta} = sum_G mu(G) P^s_{v(d)}(G) over the
// long-edge graphs of cogenus delta.  Strict v(d)-allowability forces
// maxv(G) <= d + 1, which bounds the enumeration.
Integer severi_direct(unsigned d, unsigned delta);

// Coefficient of t^delta in exp(sum_{d'<=delta} Q^{d,d'} t^{d'}).  Must be
// a nonnegative integer (checked) and equal severi_direct.
Rational severi_via_exp(unsigned d, unsigned delta);

// Node polynomial N_delta(d): coefficient of t^delta in exp of the
// Q-polynomial series; degree 2*delta.
QPolynomial node_polynomial(unsigned delta);

// [t^delta] A_1(t) = (1/2) sum mu zeta^0 over templates of cogenus delta.
Rational a1_coefficient(unsigned delta);

// [t^delta] A_2(t), computed by two published formulas that must agree:
//   (1/3) sum mu ((1/2)(l - eps0 - eps1) zeta^0 - eta_0)   and
//   -(1/2) sum mu eta_0.
Rational a2_coefficient(unsigned delta);

}  // namespace severi
