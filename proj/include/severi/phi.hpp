#pragma once

#include <vector>

#include "severi/counting.hpp"
#include "severi/graphs.hpp"
#include "severi/multipoly.hpp"

namespace severi {

// The affine function a0 + sum_j a_j beta_j attached to a template.
struct LinearForm {
  Rational constant;
  std::vector<Rational> coeffs;  // a_1 .. a_ell

  std::size_t arity() const { return coeffs.size(); }

  Rational eval(const std::vector<long long>& beta) const;
  // Value at beta = (k, k+1, ..., k+ell-1).
  Rational eval_window(long long k) const;

  // eval_window(k) = slope * k + intercept.
  Rational slope_in_k() const;      // zeta^0: sum a_j
  Rational intercept_in_k() const;  // zeta^1 + eta_0: sum (j-1) a_j + a0

  MultiPoly to_poly(const std::string& stem = "b") const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Phi_beta(G): the x^n coefficient of log sum_{n' <= n} P_beta(G_tau(n')) x^{n'}.
Rational phi_value(const TauGraph& g, const BetaVector& beta);

// Phi^s via the shortcut: equals phi_value when M >= maxv - eps1 and
// 1 <= minv + eps0, else 0.  Long-edge mode only.
Rational phi_value_strict(const TauGraph& g, const BetaVector& beta);

// Phi^s straight from its definition (log of the strict-count series);
// must agree with phi_value_strict everywhere.
Rational phi_value_strict_definitional(const TauGraph& g, const BetaVector& beta);

// varphi_tau(n, beta): the x^n coefficient of log of the symbolic series
// with coefficients p_poly(tau, n', ell).  Total degree <= 1 always; a
// violation throws InternalInvariantError.  Zero when G_tau(n) is not a
// tau-template.
MultiPoly phi_poly(const std::vector<EdgeType>& tau, const std::vector<unsigned>& n,
                   unsigned ell);

// Reads the linear form off phi_poly in the variables beta_1..beta_l(Gamma).
LinearForm linear_form(const Template& t);

// zeta^i = sum_j C(j-1, i) a_j for i = 0, 1.
Rational zeta(const Template& t, int i);
Rational eta0(const Template& t);

// max(1, max_j (lambda_bar_j - j + 1)); the smallest k with
// v(k, l) >= lambda_bar componentwise.
unsigned k_min(const Template& t);

// Phi_{v(k, l)}(Gamma) for k >= 1: the linear form when k >= k_min, the
// definitional value otherwise.
Rational phi_at_shift(const Template& t, unsigned k);

}  // namespace severi
