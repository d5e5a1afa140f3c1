#pragma once

#include <map>
#include <string>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms map exponent vectors (one entry per variable) to nonzero
// coefficients; the map order gives deterministic iteration.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly() = default;  // zero polynomial in zero variables
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Rational& value);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index);

  // b1..bk style variable lists.
  static std::vector<std::string> indexed_vars(const std::string& stem, std::size_t count);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;      // coefficient of the zero exponent
  std::size_t total_degree() const;     // zero polynomial -> 0

  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly zero_like() const { return MultiPoly(vars_); }
  MultiPoly one_like() const { return constant(vars_, Rational(1)); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& f);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& f) { return a *= f; }
  friend MultiPoly operator*(const Rational& f, MultiPoly a) { return a *= f; }

  MultiPoly pow(unsigned k) const;

  // Exact evaluation; point length must equal nvars().
  Rational eval(const std::vector<Rational>& point) const;

  // Substitutes images[i] for variable i.  All images must share one
  // variable list, which becomes the variable list of the result.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Terms in graded order, highest total degree first: "b1^2 - 5*b1 + 6".
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

// expr*(expr-1)*...*(expr-k+1) / k!; the binomial coefficient
// C(expr, k) with a polynomial top argument.  k = 0 gives 1.
MultiPoly binomial_poly(const MultiPoly& expr, unsigned k);

}  // namespace severi
