#pragma once

#include "tropik/automaton.hpp"
#include "tropik/matrix.hpp"
#include "tropik/semigroup.hpp"

#include <string>
#include <vector>

namespace tropik {

// Adds a fresh state q and a fresh letter `star` with weight-0 transitions
// final -> initial, final -> q, q -> q, q -> initial (final/initial meaning
// the sets of the input automaton); the result has every state initial and
// final. Satisfies f'((star w)^k star) = k * f(w). No original letter touches
// q. Pre: star not already in the alphabet.
MaxPlusAutomaton star_extend(const MaxPlusAutomaton& a, const std::string& star = "*");

// Block-diagonal (M, M, [0]) of size 2d+1, off-blocks bottom. The ultimate
// rank of hat(M) is 1 exactly when rho(M) < 0, and at least 2 otherwise.
TropicalMatrix hat(const TropicalMatrix& m);

// M bordered by a row and column of -1 with corner 0, size d+1. Pre: entries
// of M all in {0,-1}. ultimate rank: 1 when rho(M) < 0, else 1 + urk(M).
TropicalMatrix tilde(const TropicalMatrix& m);

// Generator-wise lifts.
MatrixFamily hat(const MatrixFamily& f);
MatrixFamily tilde(const MatrixFamily& f);

// Nondeterministic finite automaton over a two-letter alphabet.
struct Nfa {
  int states = 0;
  std::vector<std::string> alphabet{"a", "b"};
  struct Transition {
    int from;
    int symbol;  // index into alphabet
    int to;
  };
  std::vector<Transition> transitions;
  std::vector<int> initial;
  std::vector<int> final;

  void validate() const;  // throws std::invalid_argument
};

// The NFA as a weight-0 max-plus automaton: entry 0 where a transition
// exists, bottom elsewhere; I/F from the NFA's state sets.
MaxPlusAutomaton nfa_automaton(const Nfa& n);

// Weight-0 automaton, star-extended, then its generator family: 3 matrices
// of dimension states+1 with entries in {0, bottom}. The joint spectral
// radius is 0 when the NFA accepts every nonempty word and -inf otherwise.
// With the flag set every bottom entry becomes -1, making the family finite
// (radius 0 iff universal, strictly negative otherwise).
MatrixFamily nfa_to_gamma(const Nfa& n, bool replace_bottom_by_minus_one = false);

// Universality over nonempty words, decided by subset construction. Exact;
// used by tests and the CLI, not part of any reduction.
bool nfa_universal(const Nfa& n);

}  // namespace tropik
