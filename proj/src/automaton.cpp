#include "tropik/automaton.hpp"

#include <set>
#include <stdexcept>

namespace tropik {

int MaxPlusAutomaton::symbol_index(const std::string& s) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == s) return static_cast<int>(i);
  return -1;
}

void MaxPlusAutomaton::validate() const {
  if (dim < 1) throw std::invalid_argument("automaton dimension must be positive");
  if (alphabet.empty()) throw std::invalid_argument("automaton alphabet is empty");
  std::set<std::string> seen(alphabet.begin(), alphabet.end());
  if (seen.size() != alphabet.size())
    throw std::invalid_argument("automaton alphabet has duplicate symbols");
  if (mu.size() != alphabet.size())
    throw std::invalid_argument("automaton needs one matrix per symbol");
  for (const auto& m : mu)
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("transition matrix dimension mismatch");
  auto check_vec = [&](const std::vector<TropicalValue>& v, const char* which) {
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument(std::string(which) + " vector dimension mismatch");
    for (const auto& e : v)
      if (e.is_finite() && e.value() != 0)
        throw std::invalid_argument(std::string(which) + " vector entries must be 0 or -inf");
  };
  check_vec(initial, "initial");
  check_vec(final, "final");
}

namespace {

std::vector<int> to_indices(const MaxPlusAutomaton& a, const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word: automaton values range over nonempty words");
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& s : w) {
    int idx = a.symbol_index(s);
    if (idx < 0) throw std::invalid_argument("unknown symbol '" + s + "'");
    out.push_back(idx);
  }
  return out;
}

using Row = std::vector<TropicalValue>;

void propagate(const Row& v, const TropicalMatrix& m, Row& out) {
  int d = m.cols();
  out.assign(d, TropicalValue::bottom());
  for (int k = 0; k < m.rows(); ++k) {
    if (v[k].is_bottom()) continue;
    for (int j = 0; j < d; ++j) {
      const TropicalValue& mkj = m.at(k, j);
      if (mkj.is_bottom()) continue;
      TropicalValue cand(v[k].value() + mkj.value());
      if (out[j].is_bottom() || cand.value() > out[j].value()) out[j] = std::move(cand);
    }
  }
}

TropicalValue dot(const Row& v, const std::vector<TropicalValue>& f) {
  TropicalValue best = TropicalValue::bottom();
  for (std::size_t i = 0; i < v.size(); ++i) best += v[i] * f[i];
  return best;
}

}  // namespace

TropicalValue evaluate(const MaxPlusAutomaton& a, const Word& w) {
  std::vector<int> idx = to_indices(a, w);
  Row v = a.initial, next;
  for (int i : idx) {
    propagate(v, a.mu[i], next);
    v.swap(next);
  }
  return dot(v, a.final);
}

TropicalMatrix mu_of_word(const MaxPlusAutomaton& a, const Word& w) {
  std::vector<int> idx = to_indices(a, w);
  TropicalMatrix m = a.mu[idx[0]];
  for (std::size_t i = 1; i < idx.size(); ++i) m = m * a.mu[idx[i]];
  return m;
}

MatrixFamily gamma_of(const MaxPlusAutomaton& a) {
  MatrixFamily f;
  f.dim = a.dim;
  f.generators = a.mu;
  return f;
}

bool is_all_initial_final(const MaxPlusAutomaton& a) {
  for (const auto& e : a.initial)
    if (e.is_bottom()) return false;
  for (const auto& e : a.final)
    if (e.is_bottom()) return false;
  return true;
}

namespace {

// Depth-first over words of exactly target length, symbols in alphabet order;
// prefix row vectors are reused across siblings. Returns the first word the
// visitor accepts.
template <typename Leaf>
std::optional<Word> search_words(const MaxPlusAutomaton& a, int max_len, Leaf leaf) {
  int nsym = static_cast<int>(a.alphabet.size());
  for (int target = 1; target <= max_len; ++target) {
    std::vector<Row> rows(static_cast<std::size_t>(target) + 1);
    rows[0] = a.initial;
    std::vector<int> word(target, 0);
    int depth = 0;
    while (depth >= 0) {
      if (word[depth] < nsym) {
        propagate(rows[depth], a.mu[word[depth]], rows[depth + 1]);
        if (depth + 1 == target) {
          if (leaf(rows[depth + 1])) {
            Word w;
            for (int i = 0; i < target; ++i) w.push_back(a.alphabet[word[i]]);
            return w;
          }
          ++word[depth];
        } else {
          ++depth;
          word[depth] = 0;
        }
      } else {
        --depth;
        if (depth >= 0) ++word[depth];
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Word, TropicalValue>> find_negative_word(const MaxPlusAutomaton& a,
                                                                 int max_len,
                                                                 bool bottom_is_negative) {
  TropicalValue found;
  auto w = search_words(a, max_len, [&](const Row& v) {
    TropicalValue val = dot(v, a.final);
    bool neg = val.is_bottom() ? bottom_is_negative : val.value() < 0;
    if (neg) found = val;
    return neg;
  });
  if (!w) return std::nullopt;
  return std::make_pair(*w, found);
}

std::optional<std::tuple<Word, TropicalValue, TropicalValue>> compare_bounded(
    const MaxPlusAutomaton& a, const MaxPlusAutomaton& b, int max_len) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("compare_bounded needs identical alphabets");
  // Search on a product automaton so both row vectors advance together.
  MaxPlusAutomaton prod;
  prod.alphabet = a.alphabet;
  prod.dim = a.dim + b.dim;
  for (std::size_t s = 0; s < a.mu.size(); ++s) {
    TropicalMatrix m(prod.dim, prod.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) m.at(i, j) = a.mu[s].at(i, j);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = b.mu[s].at(i, j);
    prod.mu.push_back(std::move(m));
  }
  prod.initial = a.initial;
  prod.initial.insert(prod.initial.end(), b.initial.begin(), b.initial.end());
  prod.final.assign(prod.dim, TropicalValue::bottom());

  TropicalValue wa, wb;
  auto w = search_words(prod, max_len, [&](const std::vector<TropicalValue>& v) {
    TropicalValue va = TropicalValue::bottom(), vb = TropicalValue::bottom();
    for (int i = 0; i < a.dim; ++i) va += v[i] * a.final[i];
    for (int i = 0; i < b.dim; ++i) vb += v[a.dim + i] * b.final[i];
    if (va > vb) {
      wa = va;
      wb = vb;
      return true;
    }
    return false;
  });
  if (!w) return std::nullopt;
  return std::make_tuple(std::move(*w), wa, wb);
}

}  // namespace tropik
