#include "severi/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace severi {

TauGraph::TauGraph(std::vector<EdgeType> types, std::vector<unsigned> counts, GraphMode mode)
    : mode_(mode) {
  if (types.size() != counts.size()) {
    throw std::invalid_argument("TauGraph: types/counts size mismatch");
  }
  std::vector<std::size_t> order(types.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return types[a] < types[b]; });
  for (std::size_t k : order) {
    const EdgeType& t = types[k];
    if (t.end <= t.start) throw std::invalid_argument("TauGraph: edge interval must be nonempty");
    if (t.weight == 0) throw std::invalid_argument("TauGraph: edge weight must be positive");
    if (mode == GraphMode::LongEdge && t.is_short()) {
      throw std::invalid_argument("TauGraph: short edge in long-edge mode");
    }
    if (counts[k] == 0) continue;
    if (!types_.empty() && types_.back() == t) {
      throw std::invalid_argument("TauGraph: edge types must be pairwise distinct");
    }
    types_.push_back(t);
    counts_.push_back(counts[k]);
  }
}

TauGraph TauGraph::single(const EdgeType& type, unsigned count, GraphMode mode) {
  return TauGraph({type}, {count}, mode);
}

unsigned TauGraph::num_edges() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0u);
}

Integer TauGraph::multiplicity() const {
  Integer mu = 1;
  for (std::size_t i = 0; i < types_.size(); ++i) {
    mu *= int_pow(Integer(types_[i].weight) * types_[i].weight, counts_[i]);
  }
  return mu;
}

unsigned long long TauGraph::cogenus() const {
  unsigned long long delta = 0;
  for (std::size_t i = 0; i < types_.size(); ++i) {
    delta += static_cast<unsigned long long>(types_[i].cogenus()) * counts_[i];
  }
  return delta;
}

unsigned long long TauGraph::lambda(unsigned j) const {
  if (j == 0) throw std::invalid_argument("lambda: j must be positive");
  unsigned long long total = 0;
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (types_[i].contains(j)) {
      total += static_cast<unsigned long long>(types_[i].weight) * counts_[i];
    }
  }
  return total;
}

unsigned long long TauGraph::lambda_bar(unsigned j) const {
  unsigned long long total = lambda(j);
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (types_[i].length() == 1 && types_[i].end == j) total -= counts_[i];
  }
  return total;
}

std::vector<unsigned long long> TauGraph::lambda_vector(unsigned ell) const {
  std::vector<unsigned long long> v(ell);
  for (unsigned j = 1; j <= ell; ++j) v[j - 1] = lambda(j);
  return v;
}

std::vector<unsigned long long> TauGraph::lambda_bar_vector(unsigned ell) const {
  std::vector<unsigned long long> v(ell);
  for (unsigned j = 1; j <= ell; ++j) v[j - 1] = lambda_bar(j);
  return v;
}

unsigned TauGraph::minv() const {
  if (empty()) throw std::domain_error("minv: undefined on the empty graph");
  unsigned m = types_.front().start;
  for (const EdgeType& t : types_) m = std::min(m, t.start);
  return m;
}

unsigned TauGraph::maxv() const {
  if (empty()) throw std::domain_error("maxv: undefined on the empty graph");
  unsigned m = 0;
  for (const EdgeType& t : types_) m = std::max(m, t.end);
  return m;
}

unsigned TauGraph::length() const { return maxv() - minv(); }

TauGraph TauGraph::shift(unsigned k) const {
  std::vector<EdgeType> types(types_);
  for (EdgeType& t : types) {
    t.start += k;
    t.end += k;
  }
  return TauGraph(std::move(types), counts_, mode_);
}

int TauGraph::epsilon0() const {
  const unsigned v = minv();
  for (const EdgeType& t : types_) {
    if (t.start == v && t.weight != 1) return 0;
  }
  return 1;
}

int TauGraph::epsilon1() const {
  const unsigned v = maxv();
  for (const EdgeType& t : types_) {
    if (t.end == v && t.weight != 1) return 0;
  }
  return 1;
}

bool TauGraph::is_shifted_template() const {
  if (empty()) return false;
  // Connectivity of the interval-intersection relation on supported types.
  const std::size_t m = types_.size();
  std::vector<bool> reached(m, false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t seen = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t k = 0; k < m; ++k) {
      if (reached[k]) continue;
      const bool overlap = types_[i].start < types_[k].end && types_[k].start < types_[i].end;
      if (overlap) {
        reached[k] = true;
        ++seen;
        stack.push_back(k);
      }
    }
  }
  return seen == m;
}

bool operator<(const TauGraph& a, const TauGraph& b) {
  const std::size_t n = std::min(a.types_.size(), b.types_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.types_[i] != b.types_[i]) return a.types_[i] < b.types_[i];
    if (a.counts_[i] != b.counts_[i]) return a.counts_[i] < b.counts_[i];
  }
  return a.types_.size() < b.types_.size();
}

std::string TauGraph::to_string() const {
  if (empty()) return "(empty)";
  std::ostringstream os;
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (i > 0) os << "; ";
    os << types_[i].start << "-" << types_[i].end << ":" << types_[i].weight;
    if (counts_[i] > 1) os << " x" << counts_[i];
  }
  return os.str();
}

Template::Template(TauGraph graph) : graph_(std::move(graph)) {
  if (graph_.mode() != GraphMode::LongEdge) {
    throw std::invalid_argument("Template: requires long-edge mode");
  }
  if (!graph_.is_template()) {
    throw std::invalid_argument("Template: graph fails the template condition");
  }
}

Template Template::conjugate() const {
  const unsigned span = graph_.maxv();
  std::vector<EdgeType> types;
  types.reserve(graph_.types().size());
  for (const EdgeType& t : graph_.types()) {
    types.push_back({span - t.end, span - t.start, t.weight});
  }
  return Template(TauGraph(std::move(types), graph_.counts(), graph_.mode()));
}

}  // namespace severi
