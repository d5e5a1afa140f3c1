#include "severi/counting.hpp"

#include "severi/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace severi {

BetaVector BetaVector::v_of_degree(unsigned d) {
  std::vector<long long> e(d + 1);
  std::iota(e.begin(), e.end(), 0ll);
  return BetaVector(std::move(e));
}

BetaVector BetaVector::window(long long k, unsigned ell) {
  std::vector<long long> e(ell);
  std::iota(e.begin(), e.end(), k);
  return BetaVector(std::move(e));
}

std::vector<unsigned> ContingencyTable::row_margins() const {
  std::vector<unsigned> n(cells.size(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    n[i] = std::accumulate(cells[i].begin(), cells[i].end(), 0u);
  }
  return n;
}

std::vector<unsigned> ContingencyTable::col_margins() const {
  std::vector<unsigned> c;
  if (cells.empty()) return c;
  c.assign(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) c[j] += row[j];
  }
  return c;
}

void for_each_compatible_table(const std::vector<EdgeType>& tau,
                               const std::vector<unsigned>& n, unsigned ell,
                               const std::function<void(const ContingencyTable&)>& visit) {
  if (tau.size() != n.size()) throw std::invalid_argument("table enumeration: arity mismatch");
  const std::size_t m = tau.size();
  ContingencyTable table;
  table.cells.assign(m, std::vector<unsigned>(ell, 0));
  // Row i is a weak composition of n_i over the columns of I_i.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      visit(table);
      return;
    }
    std::vector<unsigned> columns;
    for (unsigned j = 1; j <= ell; ++j) {
      if (tau[i].contains(j)) columns.push_back(j - 1);
    }
    auto fill = [&](auto&& fill_self, std::size_t pos, unsigned remaining) -> void {
      if (pos + 1 == columns.size()) {
        table.cells[i][columns[pos]] = remaining;
        self(self, i + 1);
        table.cells[i][columns[pos]] = 0;
        return;
      }
      for (unsigned take = 0; take <= remaining; ++take) {
        table.cells[i][columns[pos]] = take;
        fill_self(fill_self, pos + 1, remaining - take);
      }
      table.cells[i][columns[pos]] = 0;
    };
    if (columns.empty()) {
      if (n[i] == 0) self(self, i + 1);
      return;
    }
    fill(fill, 0, n[i]);
  };
  rec(rec, 0);
}

std::vector<ContingencyTable> enumerate_contingency_tables(
    const std::vector<EdgeType>& tau, const std::vector<unsigned>& n,
    const std::vector<unsigned>& c) {
  const unsigned total_n = std::accumulate(n.begin(), n.end(), 0u);
  const unsigned total_c = std::accumulate(c.begin(), c.end(), 0u);
  if (total_n != total_c) {
    throw std::domain_error("enumerate_contingency_tables: margins must have equal sums");
  }
  std::vector<ContingencyTable> out;
  for_each_compatible_table(tau, n, static_cast<unsigned>(c.size()),
                            [&](const ContingencyTable& table) {
                              if (table.col_margins() == c) out.push_back(table);
                            });
  return out;
}

namespace {

bool beta_allowable(const TauGraph& g, const BetaVector& beta) {
  if (g.empty()) return true;
  if (static_cast<long long>(g.maxv()) > beta.M() + 1) return false;
  for (std::size_t j = 1; j <= beta.size(); ++j) {
    if (beta[j - 1] < static_cast<long long>(g.lambda(static_cast<unsigned>(j)))) return false;
  }
  return true;
}

}  // namespace

Integer count_orderings(const TauGraph& g, const BetaVector& beta) {
  if (g.empty()) return 1;
  if (!beta_allowable(g, beta)) return 0;
  const unsigned ell = static_cast<unsigned>(beta.size());
  const auto lambda = g.lambda_vector(ell);
  Integer total = 0;
  for_each_compatible_table(g.types(), g.counts(), ell, [&](const ContingencyTable& table) {
    const auto c = table.col_margins();
    Integer term = 1;
    for (unsigned j = 0; j < ell; ++j) {
      if (c[j] == 0) continue;
      term *= binomial(Integer(beta[j]) - lambda[j] + c[j], c[j]);
      std::vector<unsigned> column;
      for (std::size_t i = 0; i < table.cells.size(); ++i) column.push_back(table.cells[i][j]);
      term *= multinomial(column);
    }
    total += term;
  });
  return total;
}

Integer count_orderings_strict(const TauGraph& g, const BetaVector& beta) {
  if (g.mode() != GraphMode::LongEdge) {
    throw UnsupportedOperationError("count_orderings_strict: requires long-edge mode");
  }
  if (g.empty()) return 1;
  if (beta.M() < static_cast<long long>(g.maxv()) - g.epsilon1()) return 0;
  if (1 > static_cast<long long>(g.minv()) + g.epsilon0()) return 0;
  return count_orderings(g, beta);
}

namespace {

// Shared kernel for p_poly and s_poly: both are
//   sum_c sum_A prod_j C(top_j, c_j) * multinomial(column_j)
// with top_j = beta_j - lambda_j + c_j for p and t_j + lambda_j for s.
MultiPoly table_polynomial(const std::vector<EdgeType>& tau, const std::vector<unsigned>& n,
                           unsigned ell, const std::string& stem, bool p_form) {
  const auto vars = MultiPoly::indexed_vars(stem, ell);
  std::vector<unsigned long long> lambda(ell, 0);
  for (unsigned j = 1; j <= ell; ++j) {
    for (std::size_t i = 0; i < tau.size(); ++i) {
      if (tau[i].contains(j)) lambda[j - 1] += static_cast<unsigned long long>(tau[i].weight) * n[i];
    }
  }
  MultiPoly total(vars);
  for_each_compatible_table(tau, n, ell, [&](const ContingencyTable& table) {
    const auto c = table.col_margins();
    MultiPoly term = MultiPoly::constant(vars, Rational(1));
    for (unsigned j = 0; j < ell; ++j) {
      if (c[j] == 0) continue;
      MultiPoly top = MultiPoly::variable(vars, j);
      const long long shift = p_form
                                  ? static_cast<long long>(c[j]) - static_cast<long long>(lambda[j])
                                  : static_cast<long long>(lambda[j]);
      top += MultiPoly::constant(vars, Rational(shift));
      term *= binomial_poly(top, c[j]);
      std::vector<unsigned> column;
      for (std::size_t i = 0; i < table.cells.size(); ++i) column.push_back(table.cells[i][j]);
      term *= Rational(multinomial(column));
    }
    total += term;
  });
  return total;
}

void check_signature(const std::vector<EdgeType>& tau, const std::vector<unsigned>& n,
                     unsigned ell) {
  if (tau.size() != n.size()) throw std::invalid_argument("signature arity mismatch");
  for (const EdgeType& t : tau) {
    if (t.end > ell) throw std::invalid_argument("ell must be at least maxv(tau)");
  }
}

}  // namespace

MultiPoly p_poly(const std::vector<EdgeType>& tau, const std::vector<unsigned>& n, unsigned ell) {
  check_signature(tau, n, ell);
  return table_polynomial(tau, n, ell, "b", /*p_form=*/true);
}

MultiPoly s_poly(const std::vector<EdgeType>& tau, const std::vector<unsigned>& n, unsigned ell) {
  check_signature(tau, n, ell);
  return table_polynomial(tau, n, ell, "t", /*p_form=*/false);
}

}  // namespace severi
