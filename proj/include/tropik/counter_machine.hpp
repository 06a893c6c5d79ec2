#pragma once

#include "tropik/automaton.hpp"
#include "tropik/semigroup.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace tropik {

// Deterministic two-counter machine. Tables hold state indices. An increment
// (p,q) bumps its counter and moves p -> q. A decrement (p,q,r) tests its
// counter: zero -> q with the counter unchanged, positive -> r after
// decrementing. Each state sources at most one transition; the halt state
// sources none.
struct TwoCounterMachine {
  std::vector<std::string> states;
  std::vector<std::pair<int, int>> t1_plus, t2_plus;
  std::vector<std::array<int, 3>> t1_minus, t2_minus;
  int init = 0;
  int halt = 0;

  int state_index(const std::string& name) const;  // -1 when absent
  std::vector<std::string> validate() const;       // empty iff well formed
};

struct Configuration {
  int state = 0;
  long long c1 = 0, c2 = 0;
};

// One executed transition: the letter naming its kind plus the configuration
// it produced. Letters: c1p/c2p increments, c1m/c2m decrements.
struct Step {
  std::string letter;
  Configuration after;
};

struct ExecutionTrace {
  Configuration start;
  std::vector<Step> steps;
};

enum class RunStatus { Halted, OutOfBudget, Stuck };

struct RunResult {
  RunStatus status = RunStatus::Stuck;
  ExecutionTrace trace;
  Configuration last;
};

// Deterministic stepping from (n1, n2); stops on the halt state, on a state
// with no transition (Stuck), or after max_steps steps (OutOfBudget).
// Pre: validate() empty.
RunResult run(const TwoCounterMachine& m, long long n1, long long n2,
              long long max_steps);

// a^{n0} [b^{m0}] t1 a^{n1} b^{m1} t2 ... tk: counter blocks between
// consecutive actions, ending with the last action; the block after tk is not
// emitted, and empty blocks vanish. Pre: at least one step.
Word encode_trace_word(const ExecutionTrace& t);

inline const std::vector<std::string> kCheckerAlphabet = {"a",   "b",   "c1p",
                                                          "c2p", "c1m", "c2m"};

// Compiles the machine into a max-plus automaton over kCheckerAlphabet with
// f(w) = -1 exactly when w encodes the valid halting execution from counters
// (n, 0), and f(w) >= 0 on every other word. Weights stay inside
// {-n-1, -2, -1, 0, 1, n-1}; the state count is the consistency-tracking part
// (|states| plus one marker per decrement source) plus a fixed 21-state core.
MaxPlusAutomaton build_checker(const TwoCounterMachine& m, long long n);

struct ReductionFamilies {
  MatrixFamily gamma7;     // generators of the star-extended checker, 7 letters
  MatrixFamily gamma_hat;  // block-doubled lift of gamma7
};

// The checker, star-extended and read off as matrix families. When the
// machine halts from (n, 0), certify_jsr_negative on gamma7 finds a witness
// product, and some closure element of gamma_hat has ultimate rank 1.
ReductionFamilies reduction_pipeline(const TwoCounterMachine& m, long long n);

}  // namespace tropik
