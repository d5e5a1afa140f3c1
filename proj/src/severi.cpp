#include "severi/severi.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "severi/errors.hpp"
#include "severi/series.hpp"

namespace severi {

QPolynomial::QPolynomial(std::vector<Rational> ascending_coeffs, unsigned validity_threshold)
    : coeffs_(std::move(ascending_coeffs)), threshold_(validity_threshold) {
  trim();
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t QPolynomial::degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

Rational QPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Rational QPolynomial::eval(long long d) const {
  Rational total;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    total = total * Rational(d) + coeffs_[i];
  }
  return total;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  threshold_ = std::max(threshold_, o.threshold_);
  trim();
  return *this;
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational abs_c = c.is_nonnegative() ? c : -c;
    if (leading) {
      if (!c.is_nonnegative()) os << "-";
    } else {
      os << (c.is_nonnegative() ? " + " : " - ");
    }
    leading = false;
    const bool unit = abs_c == Rational(1);
    if (i == 0 || !unit) {
      os << abs_c.to_string();
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << "d";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Per-template data reused across q_value / q_poly / A-series sums.
struct TemplateStats {
  LinearForm form;
  unsigned kmin = 1;
  std::vector<Rational> prefix;  // phi_at_shift for k = 1 .. kmin-1
};

const TemplateStats& stats_for(const Template& t) {
  static std::mutex mu;
  static std::map<TauGraph, TemplateStats> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(t.graph());
  if (it == memo.end()) {
    TemplateStats s;
    s.form = linear_form(t);
    s.kmin = k_min(t);
    for (unsigned k = 1; k < s.kmin; ++k) {
      s.prefix.push_back(phi_value(t.graph(), BetaVector::window(k, t.length())));
    }
    it = memo.emplace(t.graph(), std::move(s)).first;
  }
  return it->second;
}

Rational phi_window(const TemplateStats& s, unsigned k) {
  if (k >= s.kmin) return s.form.eval_window(k);
  return s.prefix[k - 1];
}

}  // namespace

Rational q_d_gamma(const Template& t, unsigned d) {
  const long long upper =
      static_cast<long long>(d) + t.graph().epsilon1() - static_cast<long long>(t.length());
  if (upper < 1) return Rational();
  const TemplateStats& s = stats_for(t);
  Rational total;
  for (long long k = 1; k <= upper; ++k) {
    total += phi_window(s, static_cast<unsigned>(k));
  }
  return total * Rational(t.multiplicity());
}

QPolynomial q_poly_gamma(const Template& t) {
  const TemplateStats& s = stats_for(t);
  const long long kmin = s.kmin;
  const Rational slope = s.form.slope_in_k();
  const Rational icept = s.form.intercept_in_k();

  Rational prefix_sum;
  for (const Rational& v : s.prefix) prefix_sum += v;

  // F(y) = sum_{k=kmin}^{y} (slope*k + icept), a quadratic in y with
  // F(kmin - 1) = 0, evaluated at y = d + eps1 - l.
  const Rational half(Integer(1), Integer(2));
  // slope*(y^2 + y)/2 + icept*y  minus the same at y = kmin-1.
  const Rational c2 = slope * half;
  const Rational c1 = slope * half + icept;
  const Rational c0 = -(c2 * Rational(kmin - 1) * Rational(kmin - 1) +
                        c1 * Rational(kmin - 1));

  // Substitute y = d + shift.
  const long long shift = static_cast<long long>(t.graph().epsilon1()) -
                          static_cast<long long>(t.length());
  const Rational sh(shift);
  std::vector<Rational> coeffs(3);
  coeffs[2] = c2;
  coeffs[1] = c2 * Rational(2) * sh + c1;
  coeffs[0] = c2 * sh * sh + c1 * sh + c0 + prefix_sum;

  const Rational mu(t.multiplicity());
  for (Rational& c : coeffs) c *= mu;

  const long long threshold = kmin + static_cast<long long>(t.length()) -
                              t.graph().epsilon1() - 1;
  return QPolynomial(std::move(coeffs), static_cast<unsigned>(std::max(1ll, threshold)));
}

QPolynomial q_poly_delta(unsigned delta) {
  QPolynomial total = QPolynomial::zero();
  for (const Template& t : templates_of_cogenus(delta)) {
    total += q_poly_gamma(t);
  }
  if (total.validity_threshold() > delta) {
    throw InternalInvariantError("q_poly_delta: threshold exceeds delta");
  }
  return total;
}

Rational q_value(unsigned delta, unsigned d) {
  Rational total;
  for (const Template& t : templates_of_cogenus(delta)) {
    total += q_d_gamma(t, d);
  }
  return total;
}

Integer severi_direct(unsigned d, unsigned delta) {
  const BetaVector beta = BetaVector::v_of_degree(d);
  Integer total = 0;
  for (const TauGraph& g : graphs_of_cogenus_bounded(delta, d + 1)) {
    const Integer count = count_orderings_strict(g, beta);
    if (count != 0) total += g.multiplicity() * count;
  }
  return total;
}

Rational severi_via_exp(unsigned d, unsigned delta) {
  TruncSeries<Rational> q_series({delta}, Rational());
  for (unsigned dp = 1; dp <= delta; ++dp) {
    q_series.set_coeff({dp}, q_value(dp, d));
  }
  const Rational result = q_series.exp().coeff({delta});
  if (!result.is_integer() || !result.is_nonnegative()) {
    throw InternalInvariantError("severi_via_exp: Severi degree must be a nonnegative integer");
  }
  return result;
}

QPolynomial node_polynomial(unsigned delta) {
  const auto vars = std::vector<std::string>{"d"};
  const MultiPoly zero(vars);
  TruncSeries<MultiPoly> q_series({delta}, zero);
  unsigned threshold = 1;
  for (unsigned dp = 1; dp <= delta; ++dp) {
    const QPolynomial q = q_poly_delta(dp);
    threshold = std::max(threshold, q.validity_threshold());
    MultiPoly coeff(vars);
    for (std::size_t i = 0; i <= q.degree(); ++i) {
      coeff.add_term({static_cast<unsigned>(i)}, q.coeff(i));
    }
    q_series.set_coeff({dp}, coeff);
  }
  const MultiPoly n_delta = q_series.exp().coeff({delta});
  std::vector<Rational> coeffs(2 * delta + 1);
  for (const auto& [e, c] : n_delta.terms()) coeffs.at(e[0]) = c;
  QPolynomial result(std::move(coeffs), threshold);
  if (result.degree() != 2 * delta) {
    throw InternalInvariantError("node_polynomial: degree must be 2*delta");
  }
  return result;
}

Rational a1_coefficient(unsigned delta) {
  Rational total;
  for (const Template& t : templates_of_cogenus(delta)) {
    total += Rational(t.multiplicity()) * zeta(t, 0);
  }
  return total * Rational(Integer(1), Integer(2));
}

Rational a2_coefficient(unsigned delta) {
  Rational by_coeff_formula;
  Rational by_eta_formula;
  const Rational half(Integer(1), Integer(2));
  for (const Template& t : templates_of_cogenus(delta)) {
    const Rational mu(t.multiplicity());
    const long long span = static_cast<long long>(t.length()) - t.graph().epsilon0() -
                           t.graph().epsilon1();
    by_coeff_formula += mu * (half * Rational(span) * zeta(t, 0) - eta0(t));
    by_eta_formula += mu * eta0(t);
  }
  by_coeff_formula *= Rational(Integer(1), Integer(3));
  by_eta_formula *= -half;
  if (by_coeff_formula != by_eta_formula) {
    throw InternalInvariantError("a2_coefficient: the two published formulas disagree");
  }
  return by_eta_formula;
}

}  // namespace severi
