#include "severi/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace severi {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& value) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
  if (index >= vars.size()) throw std::invalid_argument("MultiPoly::variable: index out of range");
  MultiPoly p(std::move(vars));
  Exponents e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

std::vector<std::string> MultiPoly::indexed_vars(const std::string& stem, std::size_t count) {
  std::vector<std::string> vars;
  vars.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) vars.push_back(stem + std::to_string(i));
  return vars;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars(), 0);
}

Rational MultiPoly::constant_value() const { return coefficient(Exponents(nvars(), 0)); }

std::size_t MultiPoly::total_degree() const {
  std::size_t deg = 0;
  for (const auto& [e, c] : terms_) {
    deg = std::max(deg, static_cast<std::size_t>(std::accumulate(e.begin(), e.end(), 0u)));
  }
  return deg;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars()) throw std::invalid_argument("MultiPoly::add_term: exponent arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: mixing different variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  check_compatible(o);
  MultiPoly result(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      result.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(result.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& f) {
  if (f.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= f;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = one_like();
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars()) throw std::domain_error("MultiPoly::eval: point arity mismatch");
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= point[i].pow(e[i]);
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars()) throw std::domain_error("MultiPoly::substitute: image arity mismatch");
  std::vector<std::string> target_vars = images.empty() ? vars_ : images.front().variables();
  for (const auto& im : images) {
    if (im.variables() != target_vars) {
      throw std::invalid_argument("MultiPoly::substitute: images must share one variable list");
    }
  }
  MultiPoly total(target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= images[i].pow(e[i]);
    }
    total += term;
  }
  return total;
}

namespace {

// Graded order, highest total degree first, then lexicographically
// larger exponent vectors first; gives b1^2 before b1*b2 before b2^2.
bool display_before(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return a > b;
}

void append_monomial(std::ostream& os, const Rational& coeff,
                     const MultiPoly::Exponents& e,
                     const std::vector<std::string>& vars, bool leading) {
  const Rational abs_coeff = coeff.is_nonnegative() ? coeff : -coeff;
  if (!leading) {
    os << (coeff.is_nonnegative() ? " + " : " - ");
  } else if (!coeff.is_nonnegative()) {
    os << "-";
  }
  const bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
  const bool unit = abs_coeff == Rational(1);
  if (!has_vars || !unit) {
    os << abs_coeff.to_string();
    if (has_vars) os << "*";
  }
  bool first_var = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first_var) os << "*";
    first_var = false;
    os << vars[i];
    if (e[i] > 1) os << "^" << e[i];
  }
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, Rational>*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& term : terms_) ordered.push_back(&term);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* a, const auto* b) { return display_before(a->first, b->first); });
  std::ostringstream os;
  bool leading = true;
  for (const auto* term : ordered) {
    append_monomial(os, term->second, term->first, vars_, leading);
    leading = false;
  }
  return os.str();
}

MultiPoly binomial_poly(const MultiPoly& expr, unsigned k) {
  MultiPoly result = expr.one_like();
  for (unsigned i = 0; i < k; ++i) {
    result *= expr - MultiPoly::constant(expr.variables(), Rational(static_cast<long long>(i)));
  }
  Integer kfact = 1;
  for (unsigned i = 2; i <= k; ++i) kfact *= i;
  result *= Rational(Integer(1), kfact);
  return result;
}

}  // namespace severi
