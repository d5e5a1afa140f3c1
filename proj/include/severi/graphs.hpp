#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

// An edge type (I, r): the weighted edge {start, end} with weight r,
// carried as the gap interval I = {start+1, ..., end}.
struct EdgeType {
  unsigned start = 0;
  unsigned end = 0;
  unsigned weight = 1;

  unsigned length() const { return end - start; }
  // Cogenus contributed by one copy of this edge: length*weight - 1.
  unsigned cogenus() const { return length() * weight - 1; }
  // j in I, i.e. the edge spans the gap between vertices j-1 and j.
  bool contains(unsigned j) const { return start < j && j <= end; }
  bool is_short() const { return length() == 1 && weight == 1; }

  friend auto operator<=>(const EdgeType&, const EdgeType&) = default;
};

enum class GraphMode {
  LongEdge,  // consecutive intervals, no short edges; strict statistics defined
  General    // short edges allowed; strict statistics unavailable
};

// A tau-graph G_tau(n): a type signature tau (distinct edge types) with a
// multiplicity vector n.  Stored in canonical form: types sorted by
// (start, end, weight), zero counts dropped.  Immutable after construction.
class TauGraph {
 public:
  TauGraph() = default;  // the empty graph
  TauGraph(std::vector<EdgeType> types, std::vector<unsigned> counts,
           GraphMode mode = GraphMode::LongEdge);

  static TauGraph single(const EdgeType& type, unsigned count = 1,
                         GraphMode mode = GraphMode::LongEdge);

  bool empty() const { return types_.empty(); }
  const std::vector<EdgeType>& types() const { return types_; }
  const std::vector<unsigned>& counts() const { return counts_; }
  GraphMode mode() const { return mode_; }

  // |n|, the number of edges.
  unsigned num_edges() const;

  // prod (r_i^2)^{n_i}
  Integer multiplicity() const;
  // sum n_i (r_i |I_i| - 1); zero exactly for the empty graph.
  unsigned long long cogenus() const;

  // lambda_j: total weight of edges spanning the gap (j-1, j); j >= 1.
  unsigned long long lambda(unsigned j) const;
  // lambda_j minus the number of edges connecting exactly j-1 and j.
  unsigned long long lambda_bar(unsigned j) const;
  std::vector<unsigned long long> lambda_vector(unsigned ell) const;
  std::vector<unsigned long long> lambda_bar_vector(unsigned ell) const;

  // Extremal vertices of nonzero degree; undefined on the empty graph.
  unsigned minv() const;
  unsigned maxv() const;
  unsigned length() const;  // maxv - minv

  TauGraph shift(unsigned k) const;

  // 1 when every edge adjacent to minv (resp. maxv) has weight 1.
  int epsilon0() const;
  int epsilon1() const;

  // supp(n) cannot be split into two groups with disjoint interval unions.
  // For long-edge graphs this is exactly "shifted template".
  bool is_shifted_template() const;
  bool is_template() const { return is_shifted_template() && minv() == 0; }

  // Equality is equality of canonical forms.
  friend bool operator==(const TauGraph& a, const TauGraph& b) {
    return a.types_ == b.types_ && a.counts_ == b.counts_;
  }
  friend bool operator<(const TauGraph& a, const TauGraph& b);

  std::string to_string() const;  // "0-1:2 x2; 0-2:1" style

 private:
  std::vector<EdgeType> types_;
  std::vector<unsigned> counts_;
  GraphMode mode_ = GraphMode::LongEdge;
};

// A long-edge graph with minv = 0 in which every interior vertex is
// straddled by an edge.  Construction validates.
class Template {
 public:
  explicit Template(TauGraph graph);

  const TauGraph& graph() const { return graph_; }
  unsigned length() const { return graph_.length(); }
  unsigned long long cogenus() const { return graph_.cogenus(); }
  Integer multiplicity() const { return graph_.multiplicity(); }

  // Flip and renumber so minv is 0 again.  mu and length are preserved;
  // epsilon0/epsilon1 swap.
  Template conjugate() const;

  friend bool operator==(const Template& a, const Template& b) {
    return a.graph_ == b.graph_;
  }
  friend bool operator<(const Template& a, const Template& b) {
    return a.graph_ < b.graph_;
  }

 private:
  TauGraph graph_;
};

}  // namespace severi
