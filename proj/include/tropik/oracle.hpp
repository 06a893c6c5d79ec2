#pragma once

#include "tropik/automaton.hpp"
#include "tropik/matrix.hpp"
#include "tropik/semigroup.hpp"
#include "tropik/values.hpp"

#include <utility>
#include <vector>

namespace tropik {
namespace oracle {

// Deliberately naive reference implementations: straight enumeration, no
// memoization and no pruning, so they share no machinery (and no bugs) with
// the production algorithms they cross-check.

inline constexpr long long kEnumerationBudget = 1'000'000;

// Maximum cycle mean by enumerating every elementary cycle (length <= d covers
// the maximum); bottom when the matrix is nilpotent. Errors when d > 8.
Rational brute_rho(const TropicalMatrix& m);

struct BruteJsrTrunc {
  struct LengthRow {
    Rational norm_term;  // min over all products of that length of norm/len
    Rational rho_term;   // min over all products of that length of rho/len
  };
  Rational upper;                     // min over every term of every row
  std::vector<LengthRow> per_length;  // per_length[i] is for length i+1
};

// Enumerates all |generators|^len products for each len <= max_len and takes
// exact minima; errors when the total product count exceeds the budget.
BruteJsrTrunc brute_jsr_trunc(const MatrixFamily& f, int max_len,
                              long long budget = kEnumerationBudget);

// Exact minimizer of evaluate over nonempty words of length <= max_len,
// tie-broken by (length, lexicographic in alphabet order); errors when the
// word count exceeds the budget.
std::pair<Word, TropicalValue> brute_min_word(const MaxPlusAutomaton& a, int max_len,
                                              long long budget = kEnumerationBudget);

// Min of ultimate_rank over all products of length <= max_len: an upper bound
// on the family's ultimate rank that is exact once max_len reaches the closure
// diameter. Errors when the product count exceeds the budget.
int brute_urk_set(const MatrixFamily& f, int max_len,
                  long long budget = kEnumerationBudget);

}  // namespace oracle
}  // namespace tropik
