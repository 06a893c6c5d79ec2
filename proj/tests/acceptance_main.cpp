// Acceptance gate: ten end-to-end checks over the whole library, one
// [PASS]/[FAIL] line each, exit status 0 only when every check passes.
#include "test_util.hpp"

#include "tropik/automaton.hpp"
#include "tropik/constructions.hpp"
#include "tropik/counter_machine.hpp"
#include "tropik/matrix.hpp"
#include "tropik/oracle.hpp"
#include "tropik/semigroup.hpp"
#include "tropik/spectral.hpp"
#include "tropik/values.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace tropik;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

template <typename Body>
void criterion(int num, const char* label, Body body) {
  auto start = Clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("unexpected exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("[%s] criterion %d: %s (%s; %.2f s)\n", pass ? "PASS" : "FAIL", num, label,
              detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++failures;
}

TropicalValue tropical_multiple(int k, const TropicalValue& v) {
  TropicalValue acc = TropicalValue::zero();
  for (int i = 0; i < k; ++i) acc = acc * v;
  return acc;
}

Word pumped(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) {
    out.push_back("*");
    out.insert(out.end(), w.begin(), w.end());
  }
  out.push_back("*");
  return out;
}

MaxPlusAutomaton random_automaton(std::mt19937_64& rng, int d) {
  MaxPlusAutomaton a;
  a.alphabet = {"x", "y"};
  a.dim = d;
  for (int s = 0; s < 2; ++s) a.mu.push_back(testutil::random_matrix(rng, d, -3, 3, 1, 4));
  for (int i = 0; i < d; ++i) {
    a.initial.push_back(rng() % 2 ? TropicalValue::zero() : TropicalValue::bottom());
    a.final.push_back(rng() % 2 ? TropicalValue::zero() : TropicalValue::bottom());
  }
  a.initial[0] = TropicalValue::zero();
  a.final[d - 1] = TropicalValue::zero();
  return a;
}

// ---- counter-machine fixtures -------------------------------------------

TwoCounterMachine m_inc2() {
  TwoCounterMachine m;
  m.states = {"q0", "q1", "qh"};
  m.t1_plus = {{0, 1}};
  m.t2_plus = {{1, 2}};
  m.init = 0;
  m.halt = 2;
  return m;
}

TwoCounterMachine m_dec() {
  TwoCounterMachine m;
  m.states = {"q0", "qh"};
  m.t1_minus = {{0, 1, 0}};
  m.init = 0;
  m.halt = 1;
  return m;
}

TwoCounterMachine m_mix() {
  TwoCounterMachine m;
  m.states = {"q0", "q1", "q2", "qh"};
  m.t2_minus = {{0, 1, 0}, {2, 3, 3}};
  m.t2_plus = {{1, 2}};
  m.init = 0;
  m.halt = 3;
  return m;
}

// ---- criterion 9 machinery: exhaustive sparse evaluation ----------------

constexpr long long kBot = -(1LL << 50);

struct SparseAutomaton {
  int dim = 0;
  std::vector<long long> initial, final;
  struct Edge {
    int from, to;
    long long w;
  };
  std::array<std::vector<Edge>, 6> edges;  // indexed like kCheckerAlphabet
};

SparseAutomaton sparsify(const MaxPlusAutomaton& a) {
  SparseAutomaton s;
  s.dim = a.dim;
  auto scalar = [](const TropicalValue& v) {
    return v.is_bottom() ? kBot : static_cast<long long>(v.value());
  };
  for (const TropicalValue& v : a.initial) s.initial.push_back(scalar(v));
  for (const TropicalValue& v : a.final) s.final.push_back(scalar(v));
  for (int sym = 0; sym < 6; ++sym)
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j)
        if (a.mu[sym].at(i, j).is_finite())
          s.edges[sym].push_back({i, j, static_cast<long long>(a.mu[sym].at(i, j).value())});
  return s;
}

// Walks every word of length <= max_len depth-first, carrying the row vector
// I * mu(prefix); calls visit(word, value) at every node.
template <typename Visit>
void walk_words(const SparseAutomaton& s, int max_len, Visit visit) {
  std::vector<std::vector<long long>> stack(max_len + 1,
                                            std::vector<long long>(s.dim, kBot));
  stack[0] = s.initial;
  std::vector<int> word;

  auto value_of = [&](const std::vector<long long>& vec) {
    long long best = kBot;
    for (int i = 0; i < s.dim; ++i)
      if (vec[i] != kBot && s.final[i] != kBot && vec[i] + s.final[i] > best)
        best = vec[i] + s.final[i];
    return best;
  };

  auto rec = [&](auto&& self, int depth) -> void {
    for (int sym = 0; sym < 6; ++sym) {
      std::vector<long long>& next = stack[depth + 1];
      next.assign(s.dim, kBot);
      const std::vector<long long>& cur = stack[depth];
      for (const auto& e : s.edges[sym])
        if (cur[e.from] != kBot && cur[e.from] + e.w > next[e.to])
          next[e.to] = cur[e.from] + e.w;
      word.push_back(sym);
      visit(word, value_of(next));
      if (depth + 1 < max_len) self(self, depth + 1);
      word.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<int> letter_indices(const Word& w) {
  std::vector<int> out;
  for (const std::string& sym : w)
    for (int i = 0; i < 6; ++i)
      if (kCheckerAlphabet[i] == sym) out.push_back(i);
  return out;
}

}  // namespace

int main() {
  criterion(1, "max-letter-count automaton evaluates words exactly", [](std::string& detail) {
    std::mt19937_64 rng(1001);
    MaxPlusAutomaton a = testutil::max_count_automaton();
    int good = 0;
    const int total = 200;
    for (int t = 0; t < total; ++t) {
      int len = 1 + static_cast<int>(rng() % 12);
      Word w;
      long long na = 0, nb = 0;
      for (int i = 0; i < len; ++i) {
        bool is_a = rng() % 2 == 0;
        w.push_back(is_a ? "a" : "b");
        (is_a ? na : nb) += 1;
      }
      if (evaluate(a, w) == TropicalValue(std::max(na, nb))) ++good;
    }
    detail = std::to_string(good) + "/" + std::to_string(total) + " random words exact";
    return good == total;
  });

  criterion(2, "spectral radius matches the cycle-enumeration oracle", [](std::string& detail) {
    std::mt19937_64 rng(1002);
    int good = 0;
    const int total = 2000;
    for (int t = 0; t < total; ++t) {
      int d = 1 + static_cast<int>(rng() % 4);
      TropicalMatrix m = testutil::random_matrix(rng, d, -3, 3, t % 4, 6);
      if (spectral_radius(m) == oracle::brute_rho(m)) ++good;
    }
    detail = std::to_string(good) + "/" + std::to_string(total) + " matrices agree";
    return good == total;
  });

  criterion(3, "normalized products stay inside the derived entry bounds",
            [](std::string& detail) {
    std::mt19937_64 rng(1003);
    int good = 0;
    const int total = 10000;
    for (int t = 0; t < total; ++t) {
      int d = 1 + static_cast<int>(rng() % 4);
      long long b = 1 + static_cast<long long>(rng() % 3);
      // half the trials use nonpositive generators, where the bound halves
      bool nonpositive = t % 2 == 1;
      long long lo = -b, hi = nonpositive ? 0 : b;
      long long bound = nonpositive ? 2 * b : 4 * b;
      int len = 1 + static_cast<int>(rng() % 8);
      TropicalMatrix p = testutil::random_matrix(rng, d, lo, hi, 0, 1);
      for (int i = 1; i < len; ++i) p = p * testutil::random_matrix(rng, d, lo, hi, 0, 1);
      BigInt anchor = p.at(0, 0).value();
      bool ok = true;
      for (const TropicalValue& e : p.entries()) {
        BigInt diff = e.value() - anchor;
        if (diff < -bound || diff > bound) ok = false;
      }
      if (ok) ++good;
    }
    detail = std::to_string(good) + "/" + std::to_string(total) +
             " products within the entry-spread bounds";
    return good == total;
  });

  criterion(4, "exact joint radius obeys the truncated sandwich", [](std::string& detail) {
    std::mt19937_64 rng(1004);
    int good = 0;
    const int total = 200;
    for (int t = 0; t < total; ++t) {
      int d = 1 + static_cast<int>(rng() % 3);
      int count = 1 + t % 2;
      MatrixFamily f = testutil::random_finite_family(rng, d, count, -1, 1);
      Rational jsr = jsr_exact(f);
      oracle::BruteJsrTrunc trunc = oracle::brute_jsr_trunc(f, 12);
      bool ok = jsr <= trunc.upper && jsr.is_finite() && trunc.upper.is_finite();
      if (ok) {
        BigRational gap = trunc.upper.value() - jsr.value();
        ok = gap <= BigRational(2 * (d + 1), 12);
      }
      if (ok && count == 1) ok = jsr == spectral_radius(f.generators[0]);
      if (ok) ++good;
    }
    detail = std::to_string(good) + "/" + std::to_string(total) +
             " families bracketed (singletons exact)";
    return good == total;
  });

  criterion(5, "scalar offsets shift the joint radius and preserve ultimate rank",
            [](std::string& detail) {
    std::mt19937_64 rng(1005);
    int good = 0;
    const int total = 500;
    for (int t = 0; t < total; ++t) {
      int d = 1 + static_cast<int>(rng() % 2);
      int count = 1 + static_cast<int>(rng() % 2);
      MatrixFamily f = testutil::random_finite_family(rng, d, count, -2, 2);
      long long k = static_cast<long long>(rng() % 11) - 5;
      MatrixFamily shifted = scalar_offset(BigInt(k), f);
      bool ok = jsr_exact(shifted) == jsr_exact(f) + Rational(k);
      ok = ok && urk_exact(shifted) == urk_exact(f);
      if (ok) ++good;
    }
    detail = std::to_string(good) + "/" + std::to_string(total) + " offset families consistent";
    return good == total;
  });

  criterion(6, "star-extension scales pumped word values linearly", [](std::string& detail) {
    std::mt19937_64 rng(1006);
    int good = 0;
    const int total = 500;
    for (int t = 0; t < total; ++t) {
      int d = 1 + static_cast<int>(rng() % 3);
      MaxPlusAutomaton a = random_automaton(rng, d);
      MaxPlusAutomaton ext = star_extend(a);
      int len = 1 + static_cast<int>(rng() % 4);
      Word w;
      for (int i = 0; i < len; ++i) w.push_back(a.alphabet[rng() % 2]);
      int k = 1 + static_cast<int>(rng() % 5);
      if (evaluate(ext, pumped(w, k)) == tropical_multiple(k, evaluate(a, w))) ++good;
    }
    detail = std::to_string(good) + "/" + std::to_string(total) + " pumped words scale exactly";
    return good == total;
  });

  criterion(7, "lifted matrices read the radius sign off the ultimate rank",
            [](std::string& detail) {
    std::mt19937_64 rng(1007);
    int good = 0;
    const int total = 1000;
    for (int t = 0; t < total; ++t) {
      int d = 1 + static_cast<int>(rng() % 4);
      TropicalMatrix m = testutil::random_matrix(rng, d, -2, 2, t % 4, 6);
      bool negative = spectral_radius(m).is_negative();
      bool ok = (ultimate_rank(hat(m)) == 1) == negative;

      TropicalMatrix z = testutil::random_matrix(rng, d, -1, 0, 0, 1);
      Rational rho = spectral_radius(z);
      int lifted = ultimate_rank(tilde(z));
      ok = ok && (rho.is_negative() ? lifted == 1 : lifted == 1 + ultimate_rank(z));
      if (ok) ++good;
    }
    detail = std::to_string(good) + "/" + std::to_string(total) +
             " matrices with matching dichotomies";
    return good == total;
  });

  criterion(8, "NFA universality coincides with a zero joint radius", [](std::string& detail) {
    std::mt19937_64 rng(1008);
    int good = 0, total = 0;
    auto check = [&](const Nfa& n) {
      ++total;
      bool universal = nfa_universal(n);
      int max_len = (1 << n.states) + 1;
      bool certified = certify_jsr_negative(nfa_to_gamma(n), max_len).has_value();
      Rational finite_jsr = jsr_exact(nfa_to_gamma(n, true));
      if (certified == !universal && (finite_jsr == Rational(0)) == universal &&
          finite_jsr <= Rational(0))
        ++good;
    };

    for (int states = 1; states <= 2; ++states) {
      int slots = states * 2 * states;
      for (int tmask = 0; tmask < (1 << slots); ++tmask)
        for (int imask = 0; imask < (1 << states); ++imask)
          for (int fmask = 0; fmask < (1 << states); ++fmask) {
            Nfa n;
            n.states = states;
            int bit = 0;
            for (int from = 0; from < states; ++from)
              for (int sym = 0; sym < 2; ++sym)
                for (int to = 0; to < states; ++to, ++bit)
                  if (tmask & (1 << bit)) n.transitions.push_back({from, sym, to});
            for (int s = 0; s < states; ++s) {
              if (imask & (1 << s)) n.initial.push_back(s);
              if (fmask & (1 << s)) n.final.push_back(s);
            }
            check(n);
          }
    }

    for (int t = 0; t < 50; ++t) {
      Nfa n;
      n.states = 3;
      int density = 25 + (t % 5) * 12;
      for (int from = 0; from < 3; ++from)
        for (int sym = 0; sym < 2; ++sym)
          for (int to = 0; to < 3; ++to)
            if (static_cast<int>(rng() % 100) < density) n.transitions.push_back({from, sym, to});
      for (int s = 0; s < 3; ++s) {
        if (rng() % 2) n.initial.push_back(s);
        if (rng() % 2) n.final.push_back(s);
      }
      check(n);
    }

    detail = std::to_string(good) + "/" + std::to_string(total) +
             " automata where both radius tests match the language check";
    return good == total;
  });

  criterion(9, "checker automaton isolates valid halting encodings at value -1",
            [](std::string& detail) {
    const int max_len = 8;
    long long classified = 0;
    bool all_ok = true;
    std::string first_issue;
    for (const TwoCounterMachine& m : {m_inc2(), m_dec(), m_mix()}) {
      for (long long n = 0; n <= 2 && all_ok; ++n) {
        MaxPlusAutomaton a = build_checker(m, n);

        std::set<BigInt> allowed{BigInt(-n - 1), BigInt(-2), BigInt(-1),
                                 BigInt(0),      BigInt(1),  BigInt(n - 1)};
        for (const TropicalMatrix& mat : a.mu)
          for (const TropicalValue& e : mat.entries())
            if (e.is_finite() && !allowed.contains(e.value())) {
              all_ok = false;
              first_issue = "weight outside the allowed set";
            }

        RunResult r = run(m, n, 0, 1000);
        std::vector<int> valid;  // empty when the encoding exceeds the horizon
        if (r.status == RunStatus::Halted) {
          std::vector<int> enc = letter_indices(encode_trace_word(r.trace));
          if (static_cast<int>(enc.size()) <= max_len) valid = enc;
        }

        long long negatives = 0;
        SparseAutomaton s = sparsify(a);
        walk_words(s, max_len, [&](const std::vector<int>& word, long long value) {
          ++classified;
          if (value == kBot) {
            all_ok = false;
            first_issue = "bottom value reached";
            return;
          }
          bool is_valid = word == valid;
          if (is_valid && value != -1) {
            all_ok = false;
            first_issue = "halting encoding not valued -1";
          }
          if (!is_valid && value < 0) {
            all_ok = false;
            first_issue = "negative value on a non-encoding word";
          }
          if (value < 0) ++negatives;
        });
        if (all_ok && negatives != static_cast<long long>(!valid.empty())) {
          all_ok = false;
          first_issue = "wrong count of negative words";
        }
      }
      if (!all_ok) break;
    }
    detail = std::to_string(classified) + " words classified across 9 machine configurations" +
             (first_issue.empty() ? "" : "; " + first_issue);
    return all_ok;
  });

  criterion(10, "counter-machine pipeline certifies halting with a negative product",
            [](std::string& detail) {
    ReductionFamilies fam = reduction_pipeline(m_inc2(), 0);
    auto cert = certify_jsr_negative(fam.gamma7, 5);
    if (!cert.has_value()) {
      detail = "no certificate within length 5";
      return false;
    }
    const auto& [word, value] = *cert;
    TropicalMatrix p = fam.gamma7.generators[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) p = p * fam.gamma7.generators[word[i]];
    bool ok = value.is_negative() && static_cast<int>(word.size()) <= 5 &&
              spectral_radius(p).is_negative();
    std::ostringstream os;
    os << "certificate of length " << word.size() << " with value " << value.str();
    detail = os.str();
    return ok;
  });

  std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
