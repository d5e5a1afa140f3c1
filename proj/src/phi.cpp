#include "severi/phi.hpp"

#include <stdexcept>

#include "severi/errors.hpp"
#include "severi/series.hpp"

namespace severi {

Rational LinearForm::eval(const std::vector<long long>& beta) const {
  if (beta.size() < coeffs.size()) throw std::domain_error("LinearForm::eval: beta too short");
  Rational total = constant;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    total += coeffs[j] * Rational(beta[j]);
  }
  return total;
}

Rational LinearForm::eval_window(long long k) const {
  Rational total = constant;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    total += coeffs[j] * Rational(k + static_cast<long long>(j));
  }
  return total;
}

Rational LinearForm::slope_in_k() const {
  Rational s;
  for (const Rational& a : coeffs) s += a;
  return s;
}

Rational LinearForm::intercept_in_k() const {
  Rational s = constant;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    s += coeffs[j] * Rational(static_cast<long long>(j));
  }
  return s;
}

MultiPoly LinearForm::to_poly(const std::string& stem) const {
  const auto vars = MultiPoly::indexed_vars(stem, coeffs.size());
  MultiPoly p = MultiPoly::constant(vars, constant);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    p += MultiPoly::variable(vars, j) * coeffs[j];
  }
  return p;
}

namespace {

// Builds the series sum_{n' <= n} value(n') x^{n'} over the box n.
template <class Value>
TruncSeries<Rational> value_series(const std::vector<unsigned>& n, Value&& value) {
  TruncSeries<Rational> series(n, Rational());
  std::vector<unsigned> idx(n.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n.size()) {
      series.set_coeff(idx, value(idx));
      return;
    }
    for (unsigned v = 0; v <= n[pos]; ++v) {
      idx[pos] = v;
      self(self, pos + 1);
    }
    idx[pos] = 0;
  };
  rec(rec, 0);
  return series;
}

Rational log_coefficient(const TruncSeries<Rational>& series, const std::vector<unsigned>& n) {
  return series.log().coeff(n);
}

}  // namespace

Rational phi_value(const TauGraph& g, const BetaVector& beta) {
  if (g.empty()) return Rational();
  const auto series = value_series(g.counts(), [&](const std::vector<unsigned>& idx) {
    return Rational(count_orderings(TauGraph(g.types(), idx, g.mode()), beta));
  });
  return log_coefficient(series, g.counts());
}

Rational phi_value_strict(const TauGraph& g, const BetaVector& beta) {
  if (g.mode() != GraphMode::LongEdge) {
    throw UnsupportedOperationError("phi_value_strict: requires long-edge mode");
  }
  if (g.empty()) return Rational();
  if (beta.M() < static_cast<long long>(g.maxv()) - g.epsilon1()) return Rational();
  if (1 > static_cast<long long>(g.minv()) + g.epsilon0()) return Rational();
  return phi_value(g, beta);
}

Rational phi_value_strict_definitional(const TauGraph& g, const BetaVector& beta) {
  if (g.mode() != GraphMode::LongEdge) {
    throw UnsupportedOperationError("phi_value_strict_definitional: requires long-edge mode");
  }
  if (g.empty()) return Rational();
  const auto series = value_series(g.counts(), [&](const std::vector<unsigned>& idx) {
    return Rational(count_orderings_strict(TauGraph(g.types(), idx, g.mode()), beta));
  });
  return log_coefficient(series, g.counts());
}

MultiPoly phi_poly(const std::vector<EdgeType>& tau, const std::vector<unsigned>& n,
                   unsigned ell) {
  const MultiPoly zero(MultiPoly::indexed_vars("b", ell));
  TruncSeries<MultiPoly> series(n, zero);
  std::vector<unsigned> idx(n.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n.size()) {
      series.set_coeff(idx, p_poly(tau, idx, ell));
      return;
    }
    for (unsigned v = 0; v <= n[pos]; ++v) {
      idx[pos] = v;
      self(self, pos + 1);
    }
    idx[pos] = 0;
  };
  rec(rec, 0);
  MultiPoly result = series.log().coeff(n);
  if (result.total_degree() > 1) {
    throw InternalInvariantError("phi_poly: degree exceeds 1, which contradicts linearity");
  }
  return result;
}

LinearForm linear_form(const Template& t) {
  const unsigned ell = t.length();
  const MultiPoly phi = phi_poly(t.graph().types(), t.graph().counts(), ell);
  LinearForm form;
  form.constant = phi.constant_value();
  form.coeffs.resize(ell);
  for (unsigned j = 0; j < ell; ++j) {
    MultiPoly::Exponents e(ell, 0);
    e[j] = 1;
    form.coeffs[j] = phi.coefficient(e);
  }
  return form;
}

Rational zeta(const Template& t, int i) {
  if (i != 0 && i != 1) throw std::invalid_argument("zeta: i must be 0 or 1");
  const LinearForm form = linear_form(t);
  Rational total;
  for (std::size_t j = 0; j < form.coeffs.size(); ++j) {
    total += Rational(binomial(Integer(j), static_cast<unsigned>(i))) * form.coeffs[j];
  }
  return total;
}

Rational eta0(const Template& t) { return linear_form(t).constant; }

unsigned k_min(const Template& t) {
  long long best = 1;
  const unsigned ell = t.length();
  for (unsigned j = 1; j <= ell; ++j) {
    best = std::max(best, static_cast<long long>(t.graph().lambda_bar(j)) - j + 1);
  }
  return static_cast<unsigned>(best);
}

Rational phi_at_shift(const Template& t, unsigned k) {
  if (k == 0) throw std::invalid_argument("phi_at_shift: k must be positive");
  if (k >= k_min(t)) return linear_form(t).eval_window(k);
  return phi_value(t.graph(), BetaVector::window(k, t.length()));
}

}  // namespace severi
