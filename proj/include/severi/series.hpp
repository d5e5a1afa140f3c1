#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

// Multivariate formal power series truncated to a componentwise box
// n <= bound.  Coefficients are any exact ring type exposing
// zero_like()/one_like()/is_zero() and arithmetic with itself and with
// Rational (Rational itself, or MultiPoly for symbolic coefficients),
// so the same log/exp kernel serves numeric and polynomial series.
template <class Coeff>
class TruncSeries {
 public:
  using Index = std::vector<unsigned>;

  TruncSeries(Index bound, Coeff zero) : bound_(std::move(bound)), zero_(std::move(zero)) {}

  static TruncSeries one_series(Index bound, const Coeff& zero) {
    TruncSeries s(std::move(bound), zero);
    s.set_coeff(Index(s.nvars(), 0), zero.one_like());
    return s;
  }

  std::size_t nvars() const { return bound_.size(); }
  const Index& bound() const { return bound_; }
  const std::map<Index, Coeff>& terms() const { return terms_; }

  const Coeff& coeff(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? zero_ : it->second;
  }

  Coeff constant_term() const { return coeff(Index(nvars(), 0)); }

  void set_coeff(Index idx, Coeff value) {
    if (idx.size() != nvars()) throw std::invalid_argument("TruncSeries: index arity mismatch");
    if (!in_box(idx)) return;  // arithmetic discards indices outside the box
    if (value.is_zero()) {
      terms_.erase(idx);
    } else {
      terms_.insert_or_assign(std::move(idx), std::move(value));
    }
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check_compatible(o);
    for (const auto& [idx, c] : o.terms_) accumulate(idx, c);
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& o) {
    check_compatible(o);
    for (const auto& [idx, c] : o.terms_) accumulate(idx, zero_ - c);
    return *this;
  }

  TruncSeries& operator*=(const TruncSeries& o) {
    check_compatible(o);
    TruncSeries result(bound_, zero_);
    for (const auto& [ia, ca] : terms_) {
      for (const auto& [ib, cb] : o.terms_) {
        Index idx(ia);
        bool inside = true;
        for (std::size_t v = 0; v < idx.size(); ++v) {
          idx[v] += ib[v];
          if (idx[v] > bound_[v]) {
            inside = false;
            break;
          }
        }
        if (inside) result.accumulate(idx, ca * cb);
      }
    }
    terms_ = std::move(result.terms_);
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }

  TruncSeries& scale(const Rational& f) {
    if (f.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, c] : terms_) c = c * f;
    return *this;
  }

  TruncSeries pow(unsigned k) const {
    TruncSeries result = one_series(bound_, zero_);
    for (unsigned i = 0; i < k; ++i) result *= *this;
    return result;
  }

  // log(s) = sum_{i>=1} (-1)^{i+1}/i (s-1)^i; requires constant term 1.
  TruncSeries log() const {
    if (!(constant_term() == zero_.one_like())) {
      throw std::domain_error("TruncSeries::log: constant term must be 1");
    }
    TruncSeries u = *this;
    u.accumulate(Index(nvars(), 0), zero_ - zero_.one_like());
    TruncSeries result(bound_, zero_);
    TruncSeries power = u;
    const unsigned limit = total_order();
    for (unsigned i = 1; i <= limit && !power.terms_.empty(); ++i) {
      TruncSeries contrib = power;
      contrib.scale(Rational(Integer(i % 2 == 1 ? 1 : -1), Integer(i)));
      result += contrib;
      if (i < limit) power *= u;
    }
    return result;
  }

  // exp(s) = sum_{i>=0} s^i / i!; requires constant term 0.
  TruncSeries exp() const {
    if (!constant_term().is_zero()) {
      throw std::domain_error("TruncSeries::exp: constant term must be 0");
    }
    TruncSeries result = one_series(bound_, zero_);
    TruncSeries term = result;
    const unsigned limit = total_order();
    for (unsigned i = 1; i <= limit; ++i) {
      term *= *this;
      term.scale(Rational(Integer(1), Integer(i)));
      if (term.terms_.empty()) break;
      result += term;
    }
    return result;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const TruncSeries& o) const {
    if (bound_ != o.bound_) throw std::invalid_argument("TruncSeries: mixing different boxes");
  }

  bool in_box(const Index& idx) const {
    for (std::size_t v = 0; v < idx.size(); ++v) {
      if (idx[v] > bound_[v]) return false;
    }
    return true;
  }

  void accumulate(const Index& idx, const Coeff& c) {
    if (!in_box(idx) || c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Any product of more than sum(bound) series with zero constant term
  // vanishes in the box.
  unsigned total_order() const { return std::accumulate(bound_.begin(), bound_.end(), 0u); }

  Index bound_;
  Coeff zero_;
  std::map<Index, Coeff> terms_;
};

}  // namespace severi
