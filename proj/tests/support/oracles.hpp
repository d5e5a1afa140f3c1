#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: orderings are counted by walking permutations, Phi by summing
// over explicit compositions.

#include <algorithm>
#include <vector>

#include "severi/counting.hpp"
#include "severi/graphs.hpp"
#include "severi/phi.hpp"
#include "severi/rational.hpp"

namespace severi::testing {

// Counts beta-extended orderings up to equivalence by enumerating the
// distinct permutations of the item multiset (vertices, weighted edges
// by type, unweighted edges by gap) and checking placement directly.
inline Integer oracle_count_orderings(const TauGraph& g, const BetaVector& beta) {
  if (g.empty()) return 1;
  const long long M = beta.M();
  if (static_cast<long long>(g.maxv()) > M + 1) return 0;
  for (std::size_t j = 1; j <= beta.size(); ++j) {
    if (beta[j - 1] < static_cast<long long>(g.lambda(static_cast<unsigned>(j)))) return 0;
  }

  // vertex v -> 3v, weighted type i -> 3i+1, unweighted gap j -> 3j+2
  std::vector<int> items;
  const unsigned top_vertex = static_cast<unsigned>(M + 1);
  for (unsigned v = 0; v <= top_vertex; ++v) items.push_back(static_cast<int>(3 * v));
  for (std::size_t i = 0; i < g.types().size(); ++i) {
    for (unsigned c = 0; c < g.counts()[i]; ++c) items.push_back(static_cast<int>(3 * i + 1));
  }
  for (unsigned j = 1; j <= top_vertex; ++j) {
    const long long extra = beta[j - 1] - static_cast<long long>(g.lambda(j));
    for (long long c = 0; c < extra; ++c) items.push_back(static_cast<int>(3 * j + 2));
  }
  std::sort(items.begin(), items.end());

  Integer count = 0;
  do {
    std::vector<long long> vertex_pos(top_vertex + 1, -1);
    for (std::size_t p = 0; p < items.size(); ++p) {
      if (items[p] % 3 == 0) vertex_pos[items[p] / 3] = static_cast<long long>(p);
    }
    bool ok = true;
    for (unsigned v = 0; ok && v < top_vertex; ++v) {
      if (vertex_pos[v] > vertex_pos[v + 1]) ok = false;
    }
    for (std::size_t p = 0; ok && p < items.size(); ++p) {
      const int kind = items[p] % 3;
      const int id = items[p] / 3;
      const long long pos = static_cast<long long>(p);
      if (kind == 1) {
        const EdgeType& t = g.types()[static_cast<std::size_t>(id)];
        ok = vertex_pos[t.start] < pos && pos < vertex_pos[t.end];
      } else if (kind == 2) {
        ok = vertex_pos[id - 1] < pos && pos < vertex_pos[id];
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(items.begin(), items.end()));
  return count;
}

// All nonzero vectors p <= bound componentwise.
inline std::vector<std::vector<unsigned>> nonzero_subvectors(const std::vector<unsigned>& bound) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> p(bound.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == bound.size()) {
      if (std::any_of(p.begin(), p.end(), [](unsigned v) { return v > 0; })) out.push_back(p);
      return;
    }
    for (unsigned v = 0; v <= bound[pos]; ++v) {
      p[pos] = v;
      self(self, pos + 1);
    }
    p[pos] = 0;
  };
  rec(rec, 0);
  return out;
}

// Phi by its definition: sum over ordered i-compositions of n into
// nonzero parts of ((-1)^{i+1}/i) prod P(G_tau(part)).
inline Rational oracle_phi(const TauGraph& g, const BetaVector& beta) {
  if (g.empty()) return Rational();
  const auto& n = g.counts();
  Rational total;
  std::vector<unsigned> remaining = n;
  auto subtract = [](std::vector<unsigned>& from, const std::vector<unsigned>& what) {
    for (std::size_t i = 0; i < from.size(); ++i) from[i] -= what[i];
  };
  auto add_back = [](std::vector<unsigned>& from, const std::vector<unsigned>& what) {
    for (std::size_t i = 0; i < from.size(); ++i) from[i] += what[i];
  };
  auto rec = [&](auto&& self, unsigned parts_so_far, const Rational& product) -> void {
    if (std::all_of(remaining.begin(), remaining.end(), [](unsigned v) { return v == 0; })) {
      const Rational weight(Integer(parts_so_far % 2 == 1 ? 1 : -1), Integer(parts_so_far));
      total += weight * product;
      return;
    }
    for (const auto& part : nonzero_subvectors(remaining)) {
      const Rational p_part(count_orderings(TauGraph(g.types(), part, g.mode()), beta));
      subtract(remaining, part);
      self(self, parts_so_far + 1, product * p_part);
      add_back(remaining, part);
    }
  };
  rec(rec, 0, Rational(1));
  return total;
}

// Signatures with intervals inside [0, max_end], weights up to
// max_weight, at most two distinct types.
inline std::vector<std::vector<EdgeType>> signature_family(unsigned max_end, unsigned max_weight,
                                                           bool long_edge_only) {
  std::vector<EdgeType> pool;
  for (unsigned start = 0; start < max_end; ++start) {
    for (unsigned end = start + 1; end <= max_end; ++end) {
      for (unsigned weight = 1; weight <= max_weight; ++weight) {
        const EdgeType t{start, end, weight};
        if (long_edge_only && t.is_short()) continue;
        pool.push_back(t);
      }
    }
  }
  std::vector<std::vector<EdgeType>> family;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    family.push_back({pool[i]});
    for (std::size_t k = i + 1; k < pool.size(); ++k) family.push_back({pool[i], pool[k]});
  }
  return family;
}

// All n in N^m with |n| <= max_total.
inline std::vector<std::vector<unsigned>> small_multiplicities(std::size_t m,
                                                               unsigned max_total) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> n(m, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned used) -> void {
    if (pos == m) {
      out.push_back(n);
      return;
    }
    for (unsigned v = 0; used + v <= max_total; ++v) {
      n[pos] = v;
      self(self, pos + 1, used + v);
    }
    n[pos] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace severi::testing
