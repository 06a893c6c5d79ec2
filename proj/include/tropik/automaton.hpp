#pragma once

#include "tropik/matrix.hpp"
#include "tropik/semigroup.hpp"
#include "tropik/values.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tropik {

using Word = std::vector<std::string>;

// Linear presentation of a max-plus automaton: f(w) = I * mu(w1) * ... * mu(wn) * F.
// Initial/final vectors carry weight 0 on their support and bottom elsewhere.
struct MaxPlusAutomaton {
  std::vector<std::string> alphabet;  // distinct symbols; order fixes enumeration order
  int dim = 0;
  std::vector<TropicalMatrix> mu;  // one dim x dim matrix per symbol
  std::vector<TropicalValue> initial;
  std::vector<TropicalValue> final;

  int symbol_index(const std::string& s) const;  // -1 when absent
  void validate() const;                         // throws std::invalid_argument
};

// Pre: w nonempty, all symbols in the alphabet.
TropicalValue evaluate(const MaxPlusAutomaton& a, const Word& w);
TropicalMatrix mu_of_word(const MaxPlusAutomaton& a, const Word& w);

// The transition matrices as a family, ordered like the alphabet.
MatrixFamily gamma_of(const MaxPlusAutomaton& a);

// True when every state is both initial and final, so f(w) = norm_inf(mu(w)).
bool is_all_initial_final(const MaxPlusAutomaton& a);

// First word in length-lexicographic order (lengths 1..max_len, symbols in
// alphabet order) whose value is < 0. Bottom values count as negative only
// when bottom_is_negative is set.
std::optional<std::pair<Word, TropicalValue>> find_negative_word(
    const MaxPlusAutomaton& a, int max_len, bool bottom_is_negative = false);

// First word (same order) where a's value exceeds b's, with both values;
// pre: identical alphabets.
std::optional<std::tuple<Word, TropicalValue, TropicalValue>> compare_bounded(
    const MaxPlusAutomaton& a, const MaxPlusAutomaton& b, int max_len);

}  // namespace tropik
