#include "severi/words.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "severi/errors.hpp"

namespace severi {

std::size_t TauWord::total_letters() const {
  std::size_t total = 0;
  for (const auto& w : words) total += w.size();
  return total;
}

bool TauWord::is_empty() const { return total_letters() == 0; }

std::vector<unsigned> TauWord::letter_counts(std::size_t m) const {
  std::vector<unsigned> n(m, 0);
  for (const auto& w : words) {
    for (unsigned letter : w) {
      if (letter >= 1) n.at(letter - 1)++;
    }
  }
  return n;
}

TauWord TauWord::concat(const TauWord& v) const {
  if (words.size() != v.words.size()) {
    throw std::invalid_argument("TauWord::concat: arity mismatch");
  }
  TauWord out = *this;
  for (std::size_t j = 0; j < words.size(); ++j) {
    out.words[j].insert(out.words[j].end(), v.words[j].begin(), v.words[j].end());
  }
  return out;
}

std::string TauWord::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < words.size(); ++j) {
    if (j > 0) os << " | ";
    if (words[j].empty()) os << "-";
    for (std::size_t p = 0; p < words[j].size(); ++p) {
      if (p > 0) os << " ";
      os << "s" << words[j][p];
    }
  }
  return os.str();
}

void validate_word(const std::vector<EdgeType>& tau, const TauWord& w) {
  for (std::size_t j = 0; j < w.words.size(); ++j) {
    for (unsigned letter : w.words[j]) {
      if (letter == 0) continue;
      if (letter > tau.size()) throw std::invalid_argument("word letter outside alphabet");
      if (!tau[letter - 1].contains(static_cast<unsigned>(j + 1))) {
        throw std::invalid_argument("letter s_i placed outside its interval I_i");
      }
    }
  }
}

HeightVector word_height(const std::vector<EdgeType>& tau, const TauWord& w) {
  validate_word(tau, w);
  const std::size_t ell = w.num_words();
  const auto n = w.letter_counts(tau.size());
  HeightVector h(ell, 0);
  for (std::size_t j = 0; j < ell; ++j) {
    long long value = 0;
    for (unsigned letter : w.words[j]) {
      if (letter == 0) {
        value -= 1;
      } else {
        value += static_cast<long long>(tau[letter - 1].weight) - 1;
      }
    }
    // Letters s_i appearing in other words still contribute r_i when j is in I_i.
    for (std::size_t i = 0; i < tau.size(); ++i) {
      if (!tau[i].contains(static_cast<unsigned>(j + 1))) continue;
      unsigned here = 0;
      for (unsigned letter : w.words[j]) {
        if (letter == i + 1) ++here;
      }
      value += static_cast<long long>(tau[i].weight) * (n[i] - here);
    }
    h[j] = value;
  }
  return h;
}

namespace {

struct WordKey {
  std::vector<EdgeType> tau;
  std::vector<unsigned> n;
  std::vector<unsigned> lengths;

  friend bool operator<(const WordKey& a, const WordKey& b) {
    if (a.tau != b.tau) return a.tau < b.tau;
    if (a.n != b.n) return a.n < b.n;
    return a.lengths < b.lengths;
  }
};

std::vector<TauWord> enumerate_words_uncached(const std::vector<EdgeType>& tau,
                                              const std::vector<unsigned>& n,
                                              const std::vector<unsigned>& lengths) {
  const std::size_t m = tau.size();
  const std::size_t ell = lengths.size();
  for (const EdgeType& t : tau) {
    if (t.end > ell) throw std::invalid_argument("enumerate_words: lengths shorter than maxv(tau)");
  }

  // Letters of type i may only go into words with index in I_i; track the
  // remaining capacity of those columns for pruning.
  std::vector<std::vector<std::size_t>> allowed(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      if (tau[i].contains(static_cast<unsigned>(j + 1))) allowed[i].push_back(j);
    }
  }

  std::vector<TauWord> out;
  TauWord current;
  current.words.assign(ell, {});
  std::vector<unsigned> remaining(n);

  auto capacity_ok = [&](std::size_t j, std::size_t pos) {
    // Remaining s_i letters must fit into the still-open slots of their columns.
    for (std::size_t i = 0; i < m; ++i) {
      if (remaining[i] == 0) continue;
      std::size_t room = 0;
      for (std::size_t col : allowed[i]) {
        if (col < j) continue;
        room += (col == j) ? lengths[col] - pos : lengths[col];
      }
      if (room < remaining[i]) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t j, std::size_t pos) -> void {
    if (j == ell) {
      if (std::all_of(remaining.begin(), remaining.end(), [](unsigned r) { return r == 0; })) {
        out.push_back(current);
      }
      return;
    }
    if (pos == lengths[j]) {
      self(self, j + 1, 0);
      return;
    }
    if (!capacity_ok(j, pos)) return;
    current.words[j].push_back(0);
    self(self, j, pos + 1);
    current.words[j].pop_back();
    for (std::size_t i = 0; i < m; ++i) {
      if (remaining[i] == 0 || !tau[i].contains(static_cast<unsigned>(j + 1))) continue;
      --remaining[i];
      current.words[j].push_back(static_cast<unsigned>(i + 1));
      self(self, j, pos + 1);
      current.words[j].pop_back();
      ++remaining[i];
    }
  };
  const unsigned total_needed = std::accumulate(n.begin(), n.end(), 0u);
  const unsigned total_slots = std::accumulate(lengths.begin(), lengths.end(), 0u);
  if (total_needed <= total_slots) rec(rec, 0, 0);
  return out;
}

}  // namespace

const std::vector<TauWord>& enumerate_words(const std::vector<EdgeType>& tau,
                                            const std::vector<unsigned>& n,
                                            const std::vector<unsigned>& lengths,
                                            std::size_t letter_budget) {
  if (tau.size() != n.size()) throw std::invalid_argument("enumerate_words: arity mismatch");
  const std::size_t total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  if (total > letter_budget) {
    throw ResourceLimitError("word enumeration needs " + std::to_string(total) +
                             " letters, budget is " + std::to_string(letter_budget) +
                             "; raise the letter budget to proceed");
  }
  static std::shared_mutex cache_mutex;
  static std::map<WordKey, std::vector<TauWord>> cache;
  WordKey key{tau, n, lengths};
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::unique_lock lock(cache_mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(std::move(key), enumerate_words_uncached(tau, n, lengths)).first;
  }
  return it->second;
}

const std::vector<TauWord>& enumerate_S(const std::vector<EdgeType>& tau,
                                        const std::vector<unsigned>& n,
                                        const std::vector<unsigned>& t,
                                        std::size_t letter_budget) {
  std::vector<unsigned> lengths(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    unsigned long long lambda = 0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      if (tau[i].contains(static_cast<unsigned>(j + 1))) {
        lambda += static_cast<unsigned long long>(tau[i].weight) * n[i];
      }
    }
    lengths[j] = t[j] + static_cast<unsigned>(lambda);
  }
  const auto& result = enumerate_words(tau, n, lengths, letter_budget);
  // Lemma-level guarantee: every member has height -t.
  for (const TauWord& w : result) {
    const auto h = word_height(tau, w);
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (h[j] != -static_cast<long long>(t[j])) {
        throw InternalInvariantError("enumerate_S: height is not -t");
      }
    }
  }
  return result;
}

std::pair<TauWord, TauWord> fis(const std::vector<EdgeType>& tau, const TauWord& w,
                                const HeightVector& h, FisTieBreak tie,
                                std::vector<FisStep>* trace) {
  validate_word(tau, w);
  if (h.size() != w.num_words()) throw std::invalid_argument("fis: height arity mismatch");
  for (long long value : h) {
    if (value > 0) throw std::domain_error("fis: target height must be non-positive");
  }
  const HeightVector hw = word_height(tau, w);
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (hw[j] > h[j]) throw std::domain_error("fis: requires h(w) <= h componentwise");
  }

  const std::size_t ell = w.num_words();
  TauWord u;
  u.words.assign(ell, {});
  std::vector<std::size_t> taken(ell, 0);  // prefix length consumed per word
  HeightVector hu(ell, 0);

  auto apply_letter = [&](std::size_t j, unsigned letter) {
    if (letter == 0) {
      hu[j] -= 1;
      return;
    }
    const EdgeType& t = tau[letter - 1];
    for (std::size_t jp = 0; jp < ell; ++jp) {
      if (!t.contains(static_cast<unsigned>(jp + 1))) continue;
      hu[jp] += (jp == j) ? static_cast<long long>(t.weight) - 1
                          : static_cast<long long>(t.weight);
    }
  };

  const std::size_t max_steps = w.total_letters() + 1;
  std::size_t steps = 0;
  while (hu != h) {
    if (++steps > max_steps) throw InternalInvariantError("fis: failed to terminate");
    std::size_t pick = ell;
    if (tie == FisTieBreak::SmallestIndex) {
      for (std::size_t j = 0; j < ell; ++j) {
        if (hu[j] > h[j]) {
          pick = j;
          break;
        }
      }
    } else {
      for (std::size_t j = ell; j-- > 0;) {
        if (hu[j] > h[j]) {
          pick = j;
          break;
        }
      }
    }
    if (pick == ell || taken[pick] >= w.words[pick].size()) {
      throw InternalInvariantError("fis: stuck, input contract must have been violated");
    }
    const unsigned letter = w.words[pick][taken[pick]];
    u.words[pick].push_back(letter);
    ++taken[pick];
    apply_letter(pick, letter);
    if (trace != nullptr) trace->push_back({static_cast<unsigned>(pick), letter});
  }

  TauWord v;
  v.words.assign(ell, {});
  for (std::size_t j = 0; j < ell; ++j) {
    v.words[j].assign(w.words[j].begin() + static_cast<std::ptrdiff_t>(taken[j]),
                      w.words[j].end());
  }
  return {std::move(u), std::move(v)};
}

bool is_irreducible(const std::vector<EdgeType>& tau, const TauWord& w) {
  const HeightVector h = word_height(tau, w);
  for (long long value : h) {
    if (value > 0) throw std::domain_error("is_irreducible: requires non-positive height");
  }
  const auto [u, v] = fis(tau, w, h);
  return v.is_empty();
}

std::uint64_t count_irreducible(const std::vector<EdgeType>& tau,
                                const std::vector<unsigned>& n,
                                const std::vector<unsigned>& t, std::size_t letter_budget) {
  std::uint64_t count = 0;
  for (const TauWord& w : enumerate_S(tau, n, t, letter_budget)) {
    if (is_irreducible(tau, w)) ++count;
  }
  return count;
}

namespace {

template <class Fn>
void for_each_index_below(const std::vector<unsigned>& bound, Fn&& fn) {
  std::vector<unsigned> idx(bound.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == bound.size()) {
      fn(idx);
      return;
    }
    for (unsigned v = 0; v <= bound[pos]; ++v) {
      idx[pos] = v;
      self(self, pos + 1);
    }
    idx[pos] = 0;
  };
  rec(rec, 0);
}

unsigned maxv_of(const std::vector<EdgeType>& tau) {
  unsigned ell = 0;
  for (const EdgeType& t : tau) ell = std::max(ell, t.end);
  return ell;
}

}  // namespace

TruncSeries<Rational> series_F(const std::vector<EdgeType>& tau, unsigned j,
                               const std::vector<unsigned>& order, std::size_t letter_budget) {
  const unsigned ell = maxv_of(tau);
  if (j < 1 || j > ell) throw std::invalid_argument("series_F: j out of range");
  TruncSeries<Rational> series(order, Rational());
  for_each_index_below(order, [&](const std::vector<unsigned>& n) {
    std::vector<unsigned> t(ell, 0);
    t[j - 1] = 1;
    series.set_coeff(n, Rational(Integer(count_irreducible(tau, n, t, letter_budget))));
  });
  return series;
}

TruncSeries<Rational> series_H(const std::vector<EdgeType>& tau,
                               const std::vector<unsigned>& order, std::size_t letter_budget) {
  const unsigned ell = maxv_of(tau);
  TruncSeries<Rational> series(order, Rational());
  const std::vector<unsigned> t(ell, 0);
  for_each_index_below(order, [&](const std::vector<unsigned>& n) {
    series.set_coeff(n, Rational(Integer(enumerate_S(tau, n, t, letter_budget).size())));
  });
  return series;
}

MultiPoly phi_via_words(const std::vector<EdgeType>& tau, const std::vector<unsigned>& n,
                        unsigned ell, std::size_t letter_budget) {
  const unsigned ell_active = maxv_of(tau);
  if (ell < ell_active) throw std::invalid_argument("phi_via_words: ell must be >= maxv(tau)");

  // f^(j)(n) vanishes for j > maxv(tau): those words hold a single s_0,
  // so only the j <= maxv series are needed.
  std::vector<Rational> f(ell, Rational());
  for (unsigned j = 1; j <= ell_active; ++j) {
    f[j - 1] = series_F(tau, j, n, letter_budget).log().coeff(n);
  }
  const Rational h = series_H(tau, n, letter_budget).log().coeff(n);

  const auto vars = MultiPoly::indexed_vars("b", ell);
  const unsigned total = std::accumulate(n.begin(), n.end(), 0u);
  const Rational sign(total % 2 == 0 ? 1 : -1);

  Rational f_sum;
  for (const Rational& value : f) f_sum += value;

  MultiPoly result = MultiPoly::constant(vars, sign * (h - f_sum));
  for (unsigned j = 0; j < ell; ++j) {
    result += MultiPoly::variable(vars, j) * (sign * -f[j]);
  }
  return result;
}

LinearForm phi_closed_m1(unsigned r, unsigned ell_span, unsigned n) {
  if (r == 0 || ell_span == 0 || n == 0) {
    throw std::invalid_argument("phi_closed_m1: arguments must be positive");
  }
  const unsigned rl = r * ell_span;
  const Rational sign(n % 2 == 1 ? 1 : -1);
  const Rational lead = sign * Rational(binomial(Integer(rl) * n, n), Integer(rl) * n);

  // Tail exponent n - i, not n - 1 - i: the derivative of
  // -log(1 - (rl-1) z) contributes one factor rl - 1 per term.
  Rational tail;
  for (unsigned i = 0; i < n; ++i) {
    tail += Rational(binomial(Integer(rl) * n, i) * int_pow(Integer(rl) - 1, n - i));
  }

  LinearForm form;
  form.coeffs.assign(ell_span, lead);
  form.constant = lead * Rational(static_cast<long long>(ell_span) - 1) -
                  sign * tail / Rational(static_cast<long long>(n));
  return form;
}

}  // namespace severi
