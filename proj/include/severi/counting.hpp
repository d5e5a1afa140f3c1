#pragma once

#include <functional>
#include <vector>

#include "severi/graphs.hpp"
#include "severi/multipoly.hpp"

namespace severi {

// beta = (beta_1, ..., beta_{M+1}); entries may be negative when the
// vector is used as a polynomial evaluation point rather than a bound.
struct BetaVector {
  std::vector<long long> entries;

  BetaVector() = default;
  explicit BetaVector(std::vector<long long> e) : entries(std::move(e)) {}

  // v(d) = (0, 1, ..., d)
  static BetaVector v_of_degree(unsigned d);
  // v(k, ell) = (k, k+1, ..., k+ell-1)
  static BetaVector window(long long k, unsigned ell);

  std::size_t size() const { return entries.size(); }
  long long M() const { return static_cast<long long>(entries.size()) - 1; }
  long long operator[](std::size_t i) const { return entries[i]; }
};

// A tau-compatible contingency table: cells[i][j-1] edges of type i placed
// in the gap (j-1, j); nonzero cells only where j is in I_i.
struct ContingencyTable {
  std::vector<std::vector<unsigned>> cells;  // m rows, ell columns

  std::vector<unsigned> row_margins() const;
  std::vector<unsigned> col_margins() const;
};

// All tau-compatible tables with row margin n and column margin c.
// Throws std::domain_error when sum(n) != sum(c).
std::vector<ContingencyTable> enumerate_contingency_tables(
    const std::vector<EdgeType>& tau, const std::vector<unsigned>& n,
    const std::vector<unsigned>& c);

// Visits every tau-compatible table with row margin n and any column
// margin over ell columns.
void for_each_compatible_table(const std::vector<EdgeType>& tau,
                               const std::vector<unsigned>& n, unsigned ell,
                               const std::function<void(const ContingencyTable&)>& visit);

// P_beta(G): the number of beta-extended orderings up to equivalence,
// computed by the closed contingency-table formula.  Zero when G is not
// beta-allowable; one for the empty graph.
Integer count_orderings(const TauGraph& g, const BetaVector& beta);

// Strict variant: equals count_orderings when M >= maxv - eps1 and
// 1 <= minv + eps0, and is zero otherwise.  Long-edge mode only.
Integer count_orderings_strict(const TauGraph& g, const BetaVector& beta);

// The polynomial in beta_1..beta_ell agreeing with P_beta(G_tau(n)) for
// all beta >= lambda_bar; total degree |n|; 1 when n = 0.
MultiPoly p_poly(const std::vector<EdgeType>& tau, const std::vector<unsigned>& n,
                 unsigned ell);

// The polynomial in t_1..t_ell counting the words S_tau(n, t) for t >= 0.
MultiPoly s_poly(const std::vector<EdgeType>& tau, const std::vector<unsigned>& n,
                 unsigned ell);

}  // namespace severi
