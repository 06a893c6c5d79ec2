#include "tropik/counter_machine.hpp"

#include "tropik/constructions.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace tropik {

int TwoCounterMachine::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> TwoCounterMachine::validate() const {
  std::vector<std::string> out;
  int n = static_cast<int>(states.size());
  if (n == 0) {
    out.push_back("machine has no states");
    return out;
  }
  std::set<std::string> names(states.begin(), states.end());
  if (static_cast<int>(names.size()) != n) out.push_back("state names are not distinct");
  auto name = [&](int q) {
    return q >= 0 && q < n ? states[q] : "#" + std::to_string(q);
  };
  auto check_range = [&](int q, const char* what) {
    if (q < 0 || q >= n) out.push_back(std::string(what) + " refers to missing state " + name(q));
  };
  check_range(init, "init");
  check_range(halt, "halt");

  std::map<int, int> outgoing;  // source -> count
  auto source = [&](int p) { ++outgoing[p]; };
  for (const auto& [p, q] : t1_plus) {
    check_range(p, "t1_plus");
    check_range(q, "t1_plus");
    source(p);
  }
  for (const auto& [p, q] : t2_plus) {
    check_range(p, "t2_plus");
    check_range(q, "t2_plus");
    source(p);
  }
  for (const auto& t : t1_minus) {
    for (int q : t) check_range(q, "t1_minus");
    source(t[0]);
  }
  for (const auto& t : t2_minus) {
    for (int q : t) check_range(q, "t2_minus");
    source(t[0]);
  }
  for (const auto& [p, count] : outgoing) {
    if (count > 1)
      out.push_back("state " + name(p) + " has " + std::to_string(count) +
                    " outgoing transitions (must be deterministic)");
    if (p == halt && halt >= 0 && halt < n)
      out.push_back("halt state " + name(p) + " has an outgoing transition");
  }
  return out;
}

namespace {

void require_valid(const TwoCounterMachine& m) {
  auto violations = m.validate();
  if (!violations.empty())
    throw std::invalid_argument("invalid machine: " + violations.front());
}

}  // namespace

RunResult run(const TwoCounterMachine& m, long long n1, long long n2,
              long long max_steps) {
  require_valid(m);
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("counters must be nonnegative");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");

  RunResult res;
  res.trace.start = {m.init, n1, n2};
  Configuration c = res.trace.start;
  for (long long step = 0;; ++step) {
    if (c.state == m.halt) {
      res.status = RunStatus::Halted;
      break;
    }
    if (step == max_steps) {
      res.status = RunStatus::OutOfBudget;
      break;
    }
    bool moved = false;
    for (const auto& [p, q] : m.t1_plus)
      if (!moved && p == c.state) {
        ++c.c1;
        c.state = q;
        res.trace.steps.push_back({"c1p", c});
        moved = true;
      }
    for (const auto& [p, q] : m.t2_plus)
      if (!moved && p == c.state) {
        ++c.c2;
        c.state = q;
        res.trace.steps.push_back({"c2p", c});
        moved = true;
      }
    for (const auto& t : m.t1_minus)
      if (!moved && t[0] == c.state) {
        if (c.c1 == 0) {
          c.state = t[1];
        } else {
          --c.c1;
          c.state = t[2];
        }
        res.trace.steps.push_back({"c1m", c});
        moved = true;
      }
    for (const auto& t : m.t2_minus)
      if (!moved && t[0] == c.state) {
        if (c.c2 == 0) {
          c.state = t[1];
        } else {
          --c.c2;
          c.state = t[2];
        }
        res.trace.steps.push_back({"c2m", c});
        moved = true;
      }
    if (!moved) {
      res.status = RunStatus::Stuck;
      break;
    }
  }
  res.last = c;
  return res;
}

Word encode_trace_word(const ExecutionTrace& t) {
  if (t.steps.empty()) throw std::invalid_argument("cannot encode an empty trace");
  Word w;
  auto block = [&](long long a_count, long long b_count) {
    for (long long i = 0; i < a_count; ++i) w.push_back("a");
    for (long long i = 0; i < b_count; ++i) w.push_back("b");
  };
  block(t.start.c1, t.start.c2);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    if (i > 0) block(t.steps[i - 1].after.c1, t.steps[i - 1].after.c2);
    w.push_back(t.steps[i].letter);
  }
  return w;
}

MaxPlusAutomaton build_checker(const TwoCounterMachine& m, long long n) {
  require_valid(m);
  if (n < 0) throw std::invalid_argument("initial counter must be nonnegative");

  enum { A, B, C1P, C2P, C1M, C2M };
  const int action[] = {C1P, C2P, C1M, C2M};

  int dim = 0;
  auto add = [&] { return dim++; };

  // Word-shape part: accept (with 0) any word that is not a^* (t a^* b^*)^* t.
  int hub = add();   // consumes an arbitrary prefix, also the pattern anchor
  int acc = add();   // accepting sink, shared by every part
  int b0 = add();    // a 'b' before the first action
  int endr = add();  // the word ends on a counter letter
  int ba = add();    // factor "ba"
  // a-count comparison around one action; s-states carry the right half.
  int rC = add(), rpC = add(), sAm = add(), sAp = add();
  int r1E = add();            // decrement taken on an empty a-block
  int e3 = add(), r3 = add();  // decrement losing too few a's
  // Mirror for b-counts.
  int rD = add(), rpD = add(), sBm = add(), sBp = add();
  int rh1 = add();
  int eh3 = add(), rh3 = add();
  // First counter initialised to n.
  int i1 = add(), i2 = add();

  int nstates = static_cast<int>(m.states.size());
  std::vector<int> cs(nstates), csa(nstates, -1), csb(nstates, -1);
  for (int q = 0; q < nstates; ++q) cs[q] = add();
  for (const auto& t : m.t1_minus) csa[t[0]] = add();
  for (const auto& t : m.t2_minus) csb[t[0]] = add();

  std::vector<std::map<std::pair<int, int>, long long>> mu(6);
  auto edge = [&](int letter, int from, int to, long long w) {
    auto [it, fresh] = mu[letter].try_emplace({from, to}, w);
    if (!fresh && w > it->second) it->second = w;
  };

  for (int letter = 0; letter < 6; ++letter) {
    edge(letter, hub, hub, 0);
    edge(letter, acc, acc, 0);
  }
  edge(A, hub, endr, 0);
  edge(B, hub, endr, 0);
  edge(B, hub, ba, 0);
  edge(A, ba, acc, 0);
  edge(A, b0, b0, 0);
  edge(B, b0, acc, 0);

  // Every comparison pattern may start at the word head (its entry state is
  // initial) or right after any action (entered from the hub).
  const int entries[] = {rC, rpC, r1E, e3, rD, rpD, rh1, eh3};
  for (int t : action) {
    for (int s : entries) edge(t, hub, s, 0);
    for (int s : {sAm, sAp, sBm, sBp}) edge(t, s, acc, 0);
    edge(t, i1, acc, -n - 1);
    edge(t, i2, acc, n - 1);
  }

  // a-count across one action: the two slopes bracket the allowed change.
  edge(A, rC, rC, 1);
  edge(B, rC, rC, 0);
  edge(C1P, rC, sAm, 0);
  edge(C2P, rC, sAm, -1);
  edge(C2M, rC, sAm, -1);
  edge(C1M, rC, sAm, -2);
  edge(A, rpC, rpC, -1);
  edge(B, rpC, rpC, 0);
  edge(C1P, rpC, sAp, -2);
  edge(C2P, rpC, sAp, -1);
  edge(C2M, rpC, sAp, -1);
  edge(A, sAm, sAm, -1);
  edge(B, sAm, sAm, 0);
  edge(A, sAp, sAp, 1);
  edge(B, sAp, sAp, 0);
  // Decrement on an empty a-block must leave the a-count at zero.
  edge(B, r1E, r1E, 0);
  edge(C1M, r1E, sAp, -1);
  // Decrement on a nonempty a-block must lose exactly one a: the mandatory
  // first 'a' makes this branch fire only when the block is nonempty.
  edge(A, e3, r3, -1);
  edge(A, r3, r3, -1);
  edge(B, r3, r3, 0);
  edge(C1M, r3, sAp, 0);

  // b-count mirror; b-blocks sit after the a-block, so the entry states skip
  // leading a's at weight 0.
  edge(B, rD, rD, 1);
  edge(A, rD, rD, 0);
  edge(C2P, rD, sBm, 0);
  edge(C1P, rD, sBm, -1);
  edge(C1M, rD, sBm, -1);
  edge(C2M, rD, sBm, -2);
  edge(B, rpD, rpD, -1);
  edge(A, rpD, rpD, 0);
  edge(C2P, rpD, sBp, -2);
  edge(C1P, rpD, sBp, -1);
  edge(C1M, rpD, sBp, -1);
  edge(B, sBm, sBm, -1);
  edge(A, sBm, sBm, 0);
  edge(B, sBp, sBp, 1);
  edge(A, sBp, sBp, 0);
  edge(A, rh1, rh1, 0);
  edge(C2M, rh1, sBp, -1);
  edge(A, eh3, eh3, 0);
  edge(B, eh3, rh3, -1);
  edge(B, rh3, rh3, -1);
  edge(A, rh3, rh3, 0);
  edge(C2M, rh3, sBp, 0);

  edge(A, i1, i1, 1);
  edge(A, i2, i2, -1);

  // State-consistency part: replay the machine's control flow at weight 0.
  // A decrement source forks on the first 'a' (resp. 'b') so the zero and
  // positive branches can disagree on the successor state. Undefined action
  // letters fall into the accepting sink; endings before the halt state
  // accept through finality.
  std::set<std::pair<int, int>> defined;
  auto consistency = [&](int letter, int from, int to) {
    edge(letter, from, to, 0);
    defined.insert({from, letter});
  };
  for (int q = 0; q < nstates; ++q) {
    if (csa[q] >= 0) {
      edge(A, cs[q], csa[q], 0);
      edge(B, cs[q], cs[q], 0);
      edge(A, csa[q], csa[q], 0);
      edge(B, csa[q], csa[q], 0);
    } else if (csb[q] >= 0) {
      edge(A, cs[q], cs[q], 0);
      edge(B, cs[q], csb[q], 0);
      edge(A, csb[q], csb[q], 0);
      edge(B, csb[q], csb[q], 0);
    } else {
      edge(A, cs[q], cs[q], 0);
      edge(B, cs[q], cs[q], 0);
    }
  }
  for (const auto& [p, q] : m.t1_plus) consistency(C1P, cs[p], cs[q]);
  for (const auto& [p, q] : m.t2_plus) consistency(C2P, cs[p], cs[q]);
  for (const auto& t : m.t1_minus) {
    consistency(C1M, cs[t[0]], cs[t[1]]);
    consistency(C1M, csa[t[0]], cs[t[2]]);
  }
  for (const auto& t : m.t2_minus) {
    consistency(C2M, cs[t[0]], cs[t[1]]);
    consistency(C2M, csb[t[0]], cs[t[2]]);
  }
  auto complete = [&](int s) {
    for (int t : action)
      if (!defined.contains({s, t})) edge(t, s, acc, 0);
  };
  for (int q = 0; q < nstates; ++q) {
    complete(cs[q]);
    if (csa[q] >= 0) complete(csa[q]);
    if (csb[q] >= 0) complete(csb[q]);
  }

  MaxPlusAutomaton out;
  out.alphabet = kCheckerAlphabet;
  out.dim = dim;
  for (int letter = 0; letter < 6; ++letter) {
    TropicalMatrix mat(dim, dim);
    for (const auto& [key, w] : mu[letter]) mat.at(key.first, key.second) = TropicalValue(w);
    out.mu.push_back(std::move(mat));
  }
  out.initial.assign(dim, TropicalValue::bottom());
  out.final.assign(dim, TropicalValue::bottom());
  for (int s : entries) out.initial[s] = TropicalValue::zero();
  for (int s : {hub, b0, i1, i2, cs[m.init]}) out.initial[s] = TropicalValue::zero();
  out.final[acc] = TropicalValue::zero();
  out.final[endr] = TropicalValue::zero();
  for (int q = 0; q < nstates; ++q) {
    if (q != m.halt) out.final[cs[q]] = TropicalValue::zero();
    if (csa[q] >= 0) out.final[csa[q]] = TropicalValue::zero();
    if (csb[q] >= 0) out.final[csb[q]] = TropicalValue::zero();
  }
  return out;
}

ReductionFamilies reduction_pipeline(const TwoCounterMachine& m, long long n) {
  ReductionFamilies out;
  out.gamma7 = gamma_of(star_extend(build_checker(m, n), "*"));
  out.gamma_hat = hat(out.gamma7);
  return out;
}

}  // namespace tropik
