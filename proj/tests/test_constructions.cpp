#include "doctest.h"
#include "test_util.hpp"

#include "tropik/constructions.hpp"
#include "tropik/matrix.hpp"
#include "tropik/semigroup.hpp"
#include "tropik/spectral.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace tropik;
using testutil::max_count_automaton;
using testutil::mk;
using testutil::word_of;

namespace {

MaxPlusAutomaton random_automaton(std::mt19937_64& rng, int d, long long lo, long long hi) {
  MaxPlusAutomaton a;
  a.alphabet = {"x", "y"};
  a.dim = d;
  for (int s = 0; s < 2; ++s) a.mu.push_back(testutil::random_matrix(rng, d, lo, hi, 1, 4));
  for (int i = 0; i < d; ++i) {
    a.initial.push_back(rng() % 2 ? TropicalValue::zero() : TropicalValue::bottom());
    a.final.push_back(rng() % 2 ? TropicalValue::zero() : TropicalValue::bottom());
  }
  a.initial[0] = TropicalValue::zero();
  a.final[d - 1] = TropicalValue::zero();
  return a;
}

// (star w)^k star over the extended alphabet.
Word pumped(const Word& w, int k, const std::string& star = "*") {
  Word out;
  for (int i = 0; i < k; ++i) {
    out.push_back(star);
    out.insert(out.end(), w.begin(), w.end());
  }
  out.push_back(star);
  return out;
}

TropicalValue tropical_multiple(int k, const TropicalValue& v) {
  TropicalValue acc = TropicalValue::zero();
  for (int i = 0; i < k; ++i) acc = acc * v;
  return acc;
}

Nfa two_letter_nfa(int states, std::vector<Nfa::Transition> transitions,
                   std::vector<int> initial, std::vector<int> final_states) {
  Nfa n;
  n.states = states;
  n.transitions = std::move(transitions);
  n.initial = std::move(initial);
  n.final = std::move(final_states);
  return n;
}

}  // namespace

TEST_CASE("star extension: fresh state, fresh letter, all states initial-final") {
  MaxPlusAutomaton a = max_count_automaton();
  MaxPlusAutomaton ext = star_extend(a);
  CHECK(ext.dim == a.dim + 1);
  CHECK(ext.alphabet == std::vector<std::string>{"a", "b", "*"});
  CHECK(is_all_initial_final(ext));
  // original letters never touch the fresh state
  for (int s = 0; s < 2; ++s) {
    for (int i = 0; i < ext.dim; ++i) {
      CHECK(ext.mu[s].at(i, a.dim).is_bottom());
      CHECK(ext.mu[s].at(a.dim, i).is_bottom());
    }
  }
  CHECK_THROWS_AS(star_extend(a, "a"), std::invalid_argument);

  for (int m = 1; m <= 6; ++m) {
    Word stars(m, "*");
    CHECK(evaluate(ext, stars) == TropicalValue::zero());
  }

  // star-only words stay 0 even when the base automaton has no final state
  MaxPlusAutomaton dead = a;
  dead.final = {TropicalValue::bottom(), TropicalValue::bottom()};
  MaxPlusAutomaton dead_ext = star_extend(dead);
  CHECK(evaluate(dead_ext, Word{"*", "*", "*"}) == TropicalValue::zero());
}

TEST_CASE("pumping identity: k copies of a word scale its value") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 80; ++t) {
    int d = 1 + static_cast<int>(rng() % 3);
    MaxPlusAutomaton a = random_automaton(rng, d, -3, 3);
    MaxPlusAutomaton ext = star_extend(a);
    int len = 1 + static_cast<int>(rng() % 4);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(a.alphabet[rng() % 2]);
    TropicalValue base = evaluate(a, w);
    for (int k = 0; k <= 5; ++k)
      CHECK(evaluate(ext, pumped(w, k)) == tropical_multiple(k, base));
  }
}

TEST_CASE("two-sided star wrap recovers the base value exactly") {
  // Unanchored runs can dominate f_A badly; the (star w star) wrap restores
  // the initial/final restriction: here norm(mu(x)) = 7 but f(x) = -10.
  MaxPlusAutomaton a;
  a.alphabet = {"x"};
  a.dim = 2;
  a.mu = {mk("-10 7\n7 -10")};
  a.initial = {TropicalValue::zero(), TropicalValue::bottom()};
  a.final = {TropicalValue::zero(), TropicalValue::bottom()};
  MaxPlusAutomaton ext = star_extend(a);
  CHECK(evaluate(a, word_of("x")) == TropicalValue(-10));
  CHECK(evaluate(ext, Word{"*", "x", "*"}) == TropicalValue(-10));
  // Within one segment the interior is unanchored: xx may route through
  // state 1 and earn 7 + 7, and the wrap only pins the endpoints.
  CHECK(evaluate(a, word_of("xx")) == TropicalValue(14));
  CHECK(evaluate(ext, Word{"*", "x", "x", "*"}) == TropicalValue(14));
  // A star between the segments re-anchors each one separately.
  CHECK(evaluate(ext, Word{"*", "x", "*", "x", "*"}) == TropicalValue(-20));
}

TEST_CASE("star extension transfers bounded nonnegativity") {
  std::mt19937_64 rng(52);
  const int bound = 5;
  int transferred = 0;
  for (int t = 0; t < 40; ++t) {
    int d = 1 + static_cast<int>(rng() % 3);
    // skew nonnegative so the premise triggers often
    MaxPlusAutomaton a = random_automaton(rng, d, t % 2 ? 0 : -2, 3);
    if (find_negative_word(a, bound, true).has_value()) continue;
    ++transferred;
    MaxPlusAutomaton ext = star_extend(a);
    CHECK(!find_negative_word(ext, bound, true).has_value());
  }
  CHECK(transferred > 5);
}

TEST_CASE("hat doubles the matrix and adjoins a zero loop") {
  CHECK(hat(mk("-1")) == mk("-1 -i -i\n-i -1 -i\n-i -i 0"));
  CHECK(ultimate_rank(hat(mk("-1"))) == 1);
  CHECK(ultimate_rank(hat(mk("0"))) == 3);
  CHECK_THROWS_AS(hat(mk("0 0")), std::invalid_argument);

  std::mt19937_64 rng(53);
  for (int t = 0; t < 60; ++t) {
    int d = 1 + static_cast<int>(rng() % 3);
    TropicalMatrix m = testutil::random_matrix(rng, d, -2, 2, 1, 4);
    TropicalMatrix n = testutil::random_matrix(rng, d, -2, 2, 1, 4);
    CHECK(hat(m) * hat(n) == hat(m * n));
  }
}

TEST_CASE("hat dichotomy: rank one exactly for negative radius") {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 400; ++t) {
    int d = 1 + static_cast<int>(rng() % 4);
    TropicalMatrix m = testutil::random_matrix(rng, d, -2, 2, 1, 5);
    int rank = ultimate_rank(hat(m));
    if (spectral_radius(m).is_negative()) {
      CHECK(rank == 1);
    } else {
      CHECK(rank >= 2);
    }
  }
}

TEST_CASE("tilde borders with -1 and a zero corner") {
  CHECK(tilde(mk("-1")) == mk("-1 -1\n-1 0"));
  CHECK(ultimate_rank(tilde(mk("-1"))) == 1);
  CHECK(tilde(mk("0")) == mk("0 -1\n-1 0"));
  CHECK(ultimate_rank(tilde(mk("0"))) == 2);
  CHECK_THROWS_WITH_AS(tilde(mk("-2")), doctest::Contains("entries in {0,-1}"),
                       std::invalid_argument);
  CHECK_THROWS_AS(tilde(mk("1")), std::invalid_argument);
  CHECK_THROWS_AS(tilde(mk("-i")), std::invalid_argument);
  CHECK_THROWS_AS(tilde(mk("0 0")), std::invalid_argument);
}

TEST_CASE("tilde products keep the bordered block shape") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 120; ++t) {
    int d = 1 + static_cast<int>(rng() % 3);
    TropicalMatrix m = testutil::random_matrix(rng, d, -1, 0, 0, 1);
    TropicalMatrix n = testutil::random_matrix(rng, d, -1, 0, 0, 1);
    TropicalMatrix p = m * n;
    TropicalMatrix expected(d + 1, d + 1);
    bool in_range = true;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        expected.at(i, j) = p.at(i, j);
        if (p.at(i, j).value() < -1) in_range = false;
      }
      expected.at(i, d) = TropicalValue(-1);
      expected.at(d, i) = TropicalValue(-1);
    }
    expected.at(d, d) = TropicalValue::zero();
    CHECK(tilde(m) * tilde(n) == expected);
    if (in_range) CHECK(tilde(m) * tilde(n) == tilde(p));
  }
}

TEST_CASE("tilde dichotomy: bump the rank at radius zero, collapse below") {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 300; ++t) {
    int d = 1 + static_cast<int>(rng() % 4);
    TropicalMatrix m = testutil::random_matrix(rng, d, -1, 0, 0, 1);
    Rational rho = spectral_radius(m);
    REQUIRE(rho.is_finite());  // all entries finite, so cycles exist
    if (rho.is_negative()) {
      CHECK(ultimate_rank(tilde(m)) == 1);
    } else {
      CHECK(rho == Rational(0));
      CHECK(ultimate_rank(tilde(m)) == 1 + ultimate_rank(m));
    }
  }
}

TEST_CASE("NFA validation") {
  Nfa good = two_letter_nfa(2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}}, {0}, {1});
  good.validate();
  Nfa none;
  CHECK_THROWS_AS(none.validate(), std::invalid_argument);
  Nfa one_letter = good;
  one_letter.alphabet = {"a", "a"};
  CHECK_THROWS_AS(one_letter.validate(), std::invalid_argument);
  Nfa oob = good;
  oob.transitions.push_back({2, 0, 0});
  CHECK_THROWS_AS(oob.validate(), std::invalid_argument);
}

TEST_CASE("NFA to weight-zero automaton") {
  Nfa n = two_letter_nfa(2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}}, {0}, {1});
  MaxPlusAutomaton a = nfa_automaton(n);
  CHECK(a.dim == 2);
  CHECK(a.mu[0] == mk("-i 0\n-i 0"));
  CHECK(a.mu[1] == mk("-i 0\n-i -i"));
  CHECK(a.initial[0] == TropicalValue::zero());
  CHECK(a.initial[1].is_bottom());
  CHECK(a.final[1] == TropicalValue::zero());
  CHECK(evaluate(a, word_of("aa")) == TropicalValue::zero());
  CHECK(evaluate(a, word_of("bb")).is_bottom());
}

TEST_CASE("universality reduces to the sign of the joint radius") {
  Nfa universal = two_letter_nfa(1, {{0, 0, 0}, {0, 1, 0}}, {0}, {0});
  CHECK(nfa_universal(universal));
  MatrixFamily g = nfa_to_gamma(universal);
  CHECK(g.dim == 2);
  REQUIRE(g.generators.size() == 3);
  CHECK(jsr_upper_bound(g, 3) == Rational(0));
  CHECK(!certify_jsr_negative(g, 3).has_value());
  MatrixFamily gf = nfa_to_gamma(universal, true);
  CHECK(gf.finite_entries());
  CHECK(jsr_exact(gf) == Rational(0));

  Nfa only_a = two_letter_nfa(1, {{0, 0, 0}}, {0}, {0});
  CHECK(!nfa_universal(only_a));
  auto cert = certify_jsr_negative(nfa_to_gamma(only_a), 3);
  REQUIRE(cert.has_value());
  CHECK(cert->second.is_bottom());
  CHECK(jsr_exact(nfa_to_gamma(only_a, true)).is_negative());

  // rejects exactly the words with two or more letters b
  Nfa ab_star = two_letter_nfa(2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}}, {0}, {1});
  CHECK(!nfa_universal(ab_star));
  auto cert2 = certify_jsr_negative(nfa_to_gamma(ab_star), 5);
  REQUIRE(cert2.has_value());
  CHECK(cert2->second.is_bottom());
}

TEST_CASE("random two-state NFAs: language check versus certificates") {
  std::mt19937_64 rng(57);
  for (int t = 0; t < 25; ++t) {
    Nfa n;
    n.states = 2;
    for (int from = 0; from < 2; ++from)
      for (int sym = 0; sym < 2; ++sym)
        for (int to = 0; to < 2; ++to)
          if (rng() % 2) n.transitions.push_back({from, sym, to});
    for (int s = 0; s < 2; ++s) {
      if (rng() % 2) n.initial.push_back(s);
      if (rng() % 2) n.final.push_back(s);
    }
    bool universal = nfa_universal(n);
    CHECK(certify_jsr_negative(nfa_to_gamma(n), 5).has_value() == !universal);
    Rational finite_jsr = jsr_exact(nfa_to_gamma(n, true));
    CHECK((finite_jsr == Rational(0)) == universal);
    CHECK(finite_jsr <= Rational(0));
  }
}
