#include "tropik/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tropik {

MaxPlusAutomaton star_extend(const MaxPlusAutomaton& a, const std::string& star) {
  a.validate();
  if (a.symbol_index(star) >= 0)
    throw std::invalid_argument("star symbol already in the alphabet");
  MaxPlusAutomaton out;
  out.alphabet = a.alphabet;
  out.alphabet.push_back(star);
  out.dim = a.dim + 1;
  int q = a.dim;
  for (const auto& m : a.mu) {
    TropicalMatrix ext(out.dim, out.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) ext.at(i, j) = m.at(i, j);
    out.mu.push_back(std::move(ext));
  }
  TropicalMatrix st(out.dim, out.dim);
  for (int i = 0; i < a.dim; ++i) {
    if (!a.final[i].is_finite()) continue;
    st.at(i, q) = TropicalValue::zero();
    for (int j = 0; j < a.dim; ++j)
      if (a.initial[j].is_finite()) st.at(i, j) = TropicalValue::zero();
  }
  st.at(q, q) = TropicalValue::zero();
  for (int j = 0; j < a.dim; ++j)
    if (a.initial[j].is_finite()) st.at(q, j) = TropicalValue::zero();
  out.mu.push_back(std::move(st));
  out.initial.assign(out.dim, TropicalValue::zero());
  out.final.assign(out.dim, TropicalValue::zero());
  return out;
}

TropicalMatrix hat(const TropicalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hat needs a square matrix");
  int d = m.rows();
  TropicalMatrix out(2 * d + 1, 2 * d + 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      out.at(i, j) = m.at(i, j);
      out.at(d + i, d + j) = m.at(i, j);
    }
  out.at(2 * d, 2 * d) = TropicalValue::zero();
  return out;
}

TropicalMatrix tilde(const TropicalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("tilde needs a square matrix");
  for (const auto& e : m.entries())
    if (!e.is_finite() || (e.value() != 0 && e.value() != -1))
      throw std::invalid_argument("tilde needs entries in {0,-1}");
  int d = m.rows();
  TropicalMatrix out(d + 1, d + 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out.at(i, j) = m.at(i, j);
  for (int i = 0; i < d; ++i) {
    out.at(i, d) = TropicalValue(-1);
    out.at(d, i) = TropicalValue(-1);
  }
  out.at(d, d) = TropicalValue::zero();
  return out;
}

namespace {

MatrixFamily lift(const MatrixFamily& f, TropicalMatrix (*op)(const TropicalMatrix&)) {
  f.validate();
  MatrixFamily out;
  out.generators.reserve(f.generators.size());
  for (const auto& g : f.generators) out.generators.push_back(op(g));
  out.dim = out.generators.front().rows();
  return out;
}

}  // namespace

MatrixFamily hat(const MatrixFamily& f) { return lift(f, hat); }
MatrixFamily tilde(const MatrixFamily& f) { return lift(f, tilde); }

void Nfa::validate() const {
  if (states < 1) throw std::invalid_argument("NFA needs at least one state");
  if (alphabet.size() != 2 || alphabet[0] == alphabet[1])
    throw std::invalid_argument("NFA alphabet must have exactly 2 distinct symbols");
  auto in_range = [&](int s) { return s >= 0 && s < states; };
  for (const auto& t : transitions)
    if (!in_range(t.from) || !in_range(t.to) || t.symbol < 0 || t.symbol > 1)
      throw std::invalid_argument("NFA transition out of range");
  for (int s : initial)
    if (!in_range(s)) throw std::invalid_argument("NFA initial state out of range");
  for (int s : final)
    if (!in_range(s)) throw std::invalid_argument("NFA final state out of range");
}

MaxPlusAutomaton nfa_automaton(const Nfa& n) {
  n.validate();
  MaxPlusAutomaton a;
  a.alphabet = n.alphabet;
  a.dim = n.states;
  a.mu.assign(2, TropicalMatrix(n.states, n.states));
  for (const auto& t : n.transitions) a.mu[t.symbol].at(t.from, t.to) = TropicalValue::zero();
  a.initial.assign(n.states, TropicalValue::bottom());
  a.final.assign(n.states, TropicalValue::bottom());
  for (int s : n.initial) a.initial[s] = TropicalValue::zero();
  for (int s : n.final) a.final[s] = TropicalValue::zero();
  return a;
}

MatrixFamily nfa_to_gamma(const Nfa& n, bool replace_bottom_by_minus_one) {
  MatrixFamily f = gamma_of(star_extend(nfa_automaton(n)));
  if (replace_bottom_by_minus_one)
    for (auto& g : f.generators)
      for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j)
          if (g.at(i, j).is_bottom()) g.at(i, j) = TropicalValue(-1);
  return f;
}

bool nfa_universal(const Nfa& n) {
  n.validate();
  // Subset construction over nonempty words: every subset reachable by at
  // least one letter must contain a final state.
  std::set<int> final(n.final.begin(), n.final.end());
  auto has_final = [&](const std::set<int>& s) {
    return std::any_of(s.begin(), s.end(), [&](int q) { return final.contains(q); });
  };
  std::set<int> start(n.initial.begin(), n.initial.end());
  std::set<std::set<int>> seen;
  std::vector<std::set<int>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::set<int>> next;
    for (const auto& s : frontier) {
      for (int sym = 0; sym < 2; ++sym) {
        std::set<int> succ;
        for (const auto& t : n.transitions)
          if (t.symbol == sym && s.contains(t.from)) succ.insert(t.to);
        if (!has_final(succ)) return false;
        if (seen.insert(succ).second) next.push_back(std::move(succ));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace tropik
