#include "tropik/oracle.hpp"

#include "tropik/spectral.hpp"

#include <stdexcept>
#include <vector>

namespace tropik {
namespace oracle {

namespace {

// Total number of nonempty sequences over `arity` symbols up to max_len,
// capped at budget+1 to avoid overflow.
long long sequence_count(long long arity, int max_len, long long budget) {
  long long total = 0, level = 1;
  for (int len = 1; len <= max_len; ++len) {
    if (level > budget / arity) return budget + 1;
    level *= arity;
    total += level;
    if (total > budget) return budget + 1;
  }
  return total;
}

}  // namespace

Rational brute_rho(const TropicalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("brute_rho requires a square matrix");
  int d = m.rows();
  if (d > 8) throw std::invalid_argument("brute_rho handles dimension at most 8");

  Rational best = Rational::bottom();
  std::vector<int> path;
  std::vector<bool> used(d, false);
  // Each elementary cycle is enumerated once, from its smallest vertex.
  auto dfs = [&](auto&& self, int start, int v, const BigInt& weight) -> void {
    const TropicalValue& close = m.at(v, start);
    if (close.is_finite()) {
      Rational mean(weight + close.value(), BigInt(path.size()));
      if (best < mean) best = mean;
    }
    for (int w = start + 1; w < d; ++w) {
      if (used[w] || m.at(v, w).is_bottom()) continue;
      used[w] = true;
      path.push_back(w);
      self(self, start, w, weight + m.at(v, w).value());
      path.pop_back();
      used[w] = false;
    }
  };
  for (int start = 0; start < d; ++start) {
    path.assign(1, start);
    dfs(dfs, start, start, BigInt(0));
  }
  return best;
}

BruteJsrTrunc brute_jsr_trunc(const MatrixFamily& f, int max_len, long long budget) {
  f.validate();
  if (max_len < 1) throw std::invalid_argument("brute_jsr_trunc requires max_len >= 1");
  long long arity = static_cast<long long>(f.generators.size());
  if (sequence_count(arity, max_len, budget) > budget)
    throw std::runtime_error("brute_jsr_trunc product count exceeds the enumeration budget");

  BruteJsrTrunc out;
  out.upper = Rational::bottom();
  bool upper_set = false;
  std::vector<TropicalMatrix> level;  // all products of the current length
  for (int len = 1; len <= max_len; ++len) {
    std::vector<TropicalMatrix> next;
    if (len == 1) {
      next = f.generators;
    } else {
      next.reserve(level.size() * f.generators.size());
      for (const auto& p : level)
        for (const auto& g : f.generators) next.push_back(p * g);
    }
    level = std::move(next);

    BruteJsrTrunc::LengthRow row;
    bool norm_set = false, rho_set = false;
    for (const auto& p : level) {
      TropicalValue n = norm_inf(p);
      Rational norm_term = n.is_finite() ? Rational(n.value(), BigInt(len)) : Rational::bottom();
      Rational rho = spectral_radius(p);
      Rational rho_term = rho.is_finite() ? Rational(BigRational(rho.value() / len)) : Rational::bottom();
      if (!norm_set || norm_term < row.norm_term) {
        row.norm_term = norm_term;
        norm_set = true;
      }
      if (!rho_set || rho_term < row.rho_term) {
        row.rho_term = rho_term;
        rho_set = true;
      }
    }
    for (const Rational& term : {row.norm_term, row.rho_term})
      if (!upper_set || term < out.upper) {
        out.upper = term;
        upper_set = true;
      }
    out.per_length.push_back(std::move(row));
  }
  return out;
}

std::pair<Word, TropicalValue> brute_min_word(const MaxPlusAutomaton& a, int max_len,
                                              long long budget) {
  a.validate();
  if (max_len < 1) throw std::invalid_argument("brute_min_word requires max_len >= 1");
  long long arity = static_cast<long long>(a.alphabet.size());
  if (sequence_count(arity, max_len, budget) > budget)
    throw std::runtime_error("brute_min_word word count exceeds the enumeration budget");

  Word best_word;
  TropicalValue best;
  bool best_set = false;
  // Lengths ascending, each length's words in lexicographic alphabet order:
  // replacing only on strict improvement realizes the (length, lexicographic)
  // tie-break.
  int nsym = static_cast<int>(a.alphabet.size());
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> indices(len, 0);
    for (;;) {
      Word w;
      w.reserve(len);
      for (int i : indices) w.push_back(a.alphabet[i]);
      TropicalValue v = evaluate(a, w);
      if (!best_set || v < best) {
        best = v;
        best_word = std::move(w);
        best_set = true;
      }
      int pos = len - 1;
      while (pos >= 0 && indices[pos] == nsym - 1) indices[pos--] = 0;
      if (pos < 0) break;
      ++indices[pos];
    }
  }
  return {best_word, best};
}

int brute_urk_set(const MatrixFamily& f, int max_len, long long budget) {
  f.validate();
  if (max_len < 1) throw std::invalid_argument("brute_urk_set requires max_len >= 1");
  long long arity = static_cast<long long>(f.generators.size());
  if (sequence_count(arity, max_len, budget) > budget)
    throw std::runtime_error("brute_urk_set product count exceeds the enumeration budget");

  int best = -1;
  std::vector<TropicalMatrix> level;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<TropicalMatrix> next;
    if (len == 1) {
      next = f.generators;
    } else {
      next.reserve(level.size() * f.generators.size());
      for (const auto& p : level)
        for (const auto& g : f.generators) next.push_back(p * g);
    }
    level = std::move(next);
    for (const auto& p : level) {
      int r = ultimate_rank(p);
      if (best < 0 || r < best) best = r;
    }
  }
  return best;
}

}  // namespace oracle
}  // namespace tropik
