#pragma once

#include <cstdint>
#include <vector>

#include "severi/graphs.hpp"
#include "severi/multipoly.hpp"
#include "severi/phi.hpp"
#include "severi/series.hpp"

namespace severi {

// Letter 0 is s_0; letter i >= 1 is s_i, tied to edge type tau[i-1] and
// allowed in word w_j only when j is in I_i.
struct TauWord {
  std::vector<std::vector<unsigned>> words;

  std::size_t num_words() const { return words.size(); }
  std::size_t total_letters() const;
  bool is_empty() const;

  // Letter counts (n_1, ..., n_m) for an alphabet of m nonzero letters.
  std::vector<unsigned> letter_counts(std::size_t m) const;

  TauWord concat(const TauWord& v) const;

  friend bool operator==(const TauWord&, const TauWord&) = default;
  std::string to_string() const;  // "s1 s0 | s0" style
};

using HeightVector = std::vector<long long>;

// Total letters an enumeration call may touch; calls needing more raise
// ResourceLimitError.  Large sweeps (the generating-function checks)
// pass an explicit budget.
inline constexpr std::size_t kDefaultLetterBudget = 12;

// h_j: each s_0 in w_j contributes -1; s_i in w_j contributes r_i - 1;
// s_i elsewhere contributes r_i for every j in I_i.
HeightVector word_height(const std::vector<EdgeType>& tau, const TauWord& w);

// Throws if a letter appears in a word outside its interval.
void validate_word(const std::vector<EdgeType>& tau, const TauWord& w);

// All (tau, n)-words with prescribed word lengths; memoized per process.
const std::vector<TauWord>& enumerate_words(const std::vector<EdgeType>& tau,
                                            const std::vector<unsigned>& n,
                                            const std::vector<unsigned>& lengths,
                                            std::size_t letter_budget = kDefaultLetterBudget);

// S_tau(n, t): lengths t_j + lambda_j; every member has height -t.
const std::vector<TauWord>& enumerate_S(const std::vector<EdgeType>& tau,
                                        const std::vector<unsigned>& n,
                                        const std::vector<unsigned>& t,
                                        std::size_t letter_budget = kDefaultLetterBudget);

enum class FisTieBreak { SmallestIndex, LargestIndex };

struct FisStep {
  unsigned word_index;  // 0-based j
  unsigned letter;
};

// Find-Irreducible-Subword: splits w = u o v with h(u) = h and u
// irreducible.  Requires h <= 0 and h(w) <= h componentwise.  The result
// does not depend on the tie-break rule; it only fixes the step order.
std::pair<TauWord, TauWord> fis(const std::vector<EdgeType>& tau, const TauWord& w,
                                const HeightVector& h,
                                FisTieBreak tie = FisTieBreak::SmallestIndex,
                                std::vector<FisStep>* trace = nullptr);

// True when no proper initial subword has the same height; requires
// h(w) <= 0 componentwise.
bool is_irreducible(const std::vector<EdgeType>& tau, const TauWord& w);

// |S^irr_tau(n, t)|
std::uint64_t count_irreducible(const std::vector<EdgeType>& tau,
                                const std::vector<unsigned>& n,
                                const std::vector<unsigned>& t,
                                std::size_t letter_budget = kDefaultLetterBudget);

// F^(j)(x): coefficient of x^n is |S^irr(n, e_j)|; j is 1-based.
TruncSeries<Rational> series_F(const std::vector<EdgeType>& tau, unsigned j,
                               const std::vector<unsigned>& order,
                               std::size_t letter_budget = kDefaultLetterBudget);

// H(x): coefficient of x^n is |S(n, 0)|, the balanced word count.
TruncSeries<Rational> series_H(const std::vector<EdgeType>& tau,
                               const std::vector<unsigned>& order,
                               std::size_t letter_budget = kDefaultLetterBudget);

// varphi from the word side:
//   (-1)^|n| ( -sum_j f^(j)(n) beta_j + (h(n) - sum_j f^(j)(n)) )
// with f^(j), h the log-coefficients of F^(j), H.  Must equal phi_poly.
MultiPoly phi_via_words(const std::vector<EdgeType>& tau, const std::vector<unsigned>& n,
                        unsigned ell, std::size_t letter_budget = kDefaultLetterBudget);

// Closed form for tau = (({1..ell}, r)) with n edges:
//   ((-1)^{n+1}/n) ( C(r*ell*n, n)/(r*ell) * (sum beta_j + ell - 1)
//                    - sum_{i=0}^{n-1} C(r*ell*n, i) (r*ell-1)^{n-1-i} ).
LinearForm phi_closed_m1(unsigned r, unsigned ell_span, unsigned n);

}  // namespace severi
