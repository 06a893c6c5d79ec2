#include "tropik/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tropik {
namespace io {

namespace {

BigInt parse_bigint(const std::string& tok) {
  std::size_t pos = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
  if (pos == tok.size()) throw std::invalid_argument("bad integer token '" + tok + "'");
  for (std::size_t i = pos; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw std::invalid_argument("bad integer token '" + tok + "'");
  return BigInt(tok);
}

TropicalValue parse_entry(const std::string& tok) {
  if (tok == "-i" || tok == "-inf") return TropicalValue::bottom();
  return TropicalValue(parse_bigint(tok));
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

}  // namespace

TropicalMatrix matrix_from_text(const std::string& text) {
  std::vector<std::vector<TropicalValue>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream toks(line);
    std::vector<TropicalValue> row;
    std::string tok;
    while (toks >> tok) row.push_back(parse_entry(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  for (const auto& row : rows)
    if (row.size() != rows[0].size())
      throw std::invalid_argument("matrix rows have unequal lengths");
  TropicalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::string matrix_to_text(const TropicalMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

Json value_to_json(const TropicalValue& v) {
  if (v.is_bottom()) return "-inf";
  const BigInt& x = v.value();
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

TropicalValue value_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "-inf" || s == "-i") return TropicalValue::bottom();
    return TropicalValue(parse_bigint(s));
  }
  if (j.is_number_integer()) return TropicalValue(BigInt(j.get<long long>()));
  throw std::invalid_argument("matrix entry must be an integer or \"-inf\"");
}

Json matrix_to_json(const TropicalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(value_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

TropicalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty list of rows");
  int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw std::invalid_argument("matrix rows must be nonempty lists");
  int cols = static_cast<int>(j[0].size());
  TropicalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument("matrix rows have unequal lengths");
    for (int k = 0; k < cols; ++k) m.at(i, k) = value_from_json(j[i][k]);
  }
  return m;
}

namespace {

Json vector_to_json(const std::vector<TropicalValue>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(value_to_json(x));
  return out;
}

std::vector<TropicalValue> vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight vector must be a list");
  std::vector<TropicalValue> out;
  for (const auto& x : j) out.push_back(value_from_json(x));
  return out;
}

}  // namespace

Json automaton_to_json(const MaxPlusAutomaton& a) {
  Json mu = Json::object();
  for (std::size_t i = 0; i < a.alphabet.size(); ++i) mu[a.alphabet[i]] = matrix_to_json(a.mu[i]);
  return Json{{"alphabet", a.alphabet},
              {"dim", a.dim},
              {"mu", std::move(mu)},
              {"initial", vector_to_json(a.initial)},
              {"final", vector_to_json(a.final)}};
}

MaxPlusAutomaton automaton_from_json(const Json& j) {
  MaxPlusAutomaton a;
  a.alphabet = field(j, "alphabet").get<std::vector<std::string>>();
  a.dim = int_field(j, "dim");
  const Json& mu = field(j, "mu");
  for (const auto& sym : a.alphabet) {
    if (!mu.contains(sym))
      throw std::invalid_argument("mu is missing the matrix for symbol '" + sym + "'");
    a.mu.push_back(matrix_from_json(mu.at(sym)));
  }
  a.initial = vector_from_json(field(j, "initial"));
  a.final = vector_from_json(field(j, "final"));
  a.validate();
  return a;
}

Json family_to_json(const MatrixFamily& f) {
  Json gens = Json::array();
  for (const auto& g : f.generators) gens.push_back(matrix_to_json(g));
  return Json{{"dim", f.dim}, {"generators", std::move(gens)}};
}

MatrixFamily family_from_json(const Json& j) {
  MatrixFamily f;
  f.dim = int_field(j, "dim");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw std::invalid_argument("generators must be a list");
  for (const auto& g : gens) f.generators.push_back(matrix_from_json(g));
  f.validate();
  return f;
}

Json nfa_to_json(const Nfa& n) {
  Json trans = Json::array();
  for (const auto& t : n.transitions)
    trans.push_back(Json::array({t.from, n.alphabet[t.symbol], t.to}));
  return Json{{"states", n.states},
              {"transitions", std::move(trans)},
              {"initial", n.initial},
              {"final", n.final}};
}

Nfa nfa_from_json(const Json& j) {
  Nfa n;
  n.states = int_field(j, "states");
  const Json& trans = field(j, "transitions");
  if (!trans.is_array()) throw std::invalid_argument("transitions must be a list");
  for (const auto& t : trans) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_string() ||
        !t[2].is_number_integer())
      throw std::invalid_argument("each transition must be [state, symbol, state]");
    std::string sym = t[1].get<std::string>();
    int s = -1;
    for (std::size_t i = 0; i < n.alphabet.size(); ++i)
      if (n.alphabet[i] == sym) s = static_cast<int>(i);
    if (s < 0) throw std::invalid_argument("transition symbol '" + sym + "' is not in the alphabet");
    n.transitions.push_back({t[0].get<int>(), s, t[2].get<int>()});
  }
  n.initial = field(j, "initial").get<std::vector<int>>();
  n.final = field(j, "final").get<std::vector<int>>();
  n.validate();
  return n;
}

namespace {

Json pairs_to_json(const TwoCounterMachine& m, const std::vector<std::pair<int, int>>& v) {
  Json out = Json::array();
  for (const auto& [p, q] : v) out.push_back(Json::array({m.states[p], m.states[q]}));
  return out;
}

Json triples_to_json(const TwoCounterMachine& m, const std::vector<std::array<int, 3>>& v) {
  Json out = Json::array();
  for (const auto& t : v)
    out.push_back(Json::array({m.states[t[0]], m.states[t[1]], m.states[t[2]]}));
  return out;
}

int state_of(const TwoCounterMachine& m, const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("machine states are referenced by name");
  int q = m.state_index(j.get<std::string>());
  if (q < 0) throw std::invalid_argument("unknown state '" + j.get<std::string>() + "'");
  return q;
}

}  // namespace

Json machine_to_json(const TwoCounterMachine& m) {
  return Json{{"states", m.states},
              {"t1_plus", pairs_to_json(m, m.t1_plus)},
              {"t1_minus", triples_to_json(m, m.t1_minus)},
              {"t2_plus", pairs_to_json(m, m.t2_plus)},
              {"t2_minus", triples_to_json(m, m.t2_minus)},
              {"init", m.states[m.init]},
              {"halt", m.states[m.halt]}};
}

TwoCounterMachine machine_from_json(const Json& j) {
  TwoCounterMachine m;
  m.states = field(j, "states").get<std::vector<std::string>>();
  auto pairs = [&](const char* name, std::vector<std::pair<int, int>>& out) {
    if (!j.contains(name)) return;
    for (const auto& t : j.at(name)) {
      if (!t.is_array() || t.size() != 2)
        throw std::invalid_argument(std::string(name) + " entries must be [from, to]");
      out.emplace_back(state_of(m, t[0]), state_of(m, t[1]));
    }
  };
  auto triples = [&](const char* name, std::vector<std::array<int, 3>>& out) {
    if (!j.contains(name)) return;
    for (const auto& t : j.at(name)) {
      if (!t.is_array() || t.size() != 3)
        throw std::invalid_argument(std::string(name) +
                                    " entries must be [from, zero_target, decrement_target]");
      out.push_back({state_of(m, t[0]), state_of(m, t[1]), state_of(m, t[2])});
    }
  };
  pairs("t1_plus", m.t1_plus);
  triples("t1_minus", m.t1_minus);
  pairs("t2_plus", m.t2_plus);
  triples("t2_minus", m.t2_minus);
  m.init = state_of(m, field(j, "init"));
  m.halt = state_of(m, field(j, "halt"));
  auto violations = m.validate();
  if (!violations.empty()) throw std::invalid_argument("invalid machine: " + violations.front());
  return m;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

namespace {

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed structured document");
  return j;
}

bool looks_structured(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '[' || c == '{';
  }
  return false;
}

}  // namespace

TropicalMatrix load_matrix(const std::string& path) {
  std::string text = read_file(path);
  if (looks_structured(text)) return matrix_from_json(parse_json(text));
  return matrix_from_text(text);
}

MaxPlusAutomaton load_automaton(const std::string& path) {
  return automaton_from_json(parse_json(read_file(path)));
}

MatrixFamily load_family(const std::string& path) {
  return family_from_json(parse_json(read_file(path)));
}

Nfa load_nfa(const std::string& path) { return nfa_from_json(parse_json(read_file(path))); }

TwoCounterMachine load_machine(const std::string& path) {
  return machine_from_json(parse_json(read_file(path)));
}

Word parse_word(const std::string& text, const MaxPlusAutomaton& a) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) toks.push_back(std::exchange(cur, {}));
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  if (toks.empty()) throw std::invalid_argument("empty word");

  bool all_symbols = true;
  for (const auto& t : toks)
    if (a.symbol_index(t) < 0) all_symbols = false;
  if (all_symbols) return toks;

  if (toks.size() == 1) {
    Word w;
    for (char c : toks[0]) {
      std::string sym(1, c);
      if (a.symbol_index(sym) < 0)
        throw std::invalid_argument("symbol '" + sym + "' is not in the alphabet");
      w.push_back(sym);
    }
    return w;
  }
  for (const auto& t : toks)
    if (a.symbol_index(t) < 0)
      throw std::invalid_argument("symbol '" + t + "' is not in the alphabet");
  return toks;
}

}  // namespace io
}  // namespace tropik
