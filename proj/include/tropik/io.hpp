#pragma once

#include "tropik/automaton.hpp"
#include "tropik/constructions.hpp"
#include "tropik/counter_machine.hpp"
#include "tropik/matrix.hpp"
#include "tropik/semigroup.hpp"
#include "tropik/values.hpp"

#include "json.hpp"

#include <string>

namespace tropik {
namespace io {

using Json = nlohmann::ordered_json;

// Text matrix form: one row per line, whitespace-separated entries, with the
// token "-i" or "-inf" for bottom. Emitted with "-inf".
TropicalMatrix matrix_from_text(const std::string& text);
std::string matrix_to_text(const TropicalMatrix& m);

// Structured forms. Integers that fit in 64 bits are JSON numbers; larger
// ones round-trip as decimal strings; bottom is the string "-inf".
Json value_to_json(const TropicalValue& v);
TropicalValue value_from_json(const Json& j);
Json matrix_to_json(const TropicalMatrix& m);       // list of rows
TropicalMatrix matrix_from_json(const Json& j);
Json automaton_to_json(const MaxPlusAutomaton& a);  // {alphabet, dim, mu, initial, final}
MaxPlusAutomaton automaton_from_json(const Json& j);
Json family_to_json(const MatrixFamily& f);  // {dim, generators}
MatrixFamily family_from_json(const Json& j);
Json nfa_to_json(const Nfa& n);  // {states, transitions, initial, final}
Nfa nfa_from_json(const Json& j);
Json machine_to_json(const TwoCounterMachine& m);  // {states, t1_plus, …, init, halt} by state name
TwoCounterMachine machine_from_json(const Json& j);

std::string read_file(const std::string& path);  // "-" reads stdin
void write_file(const std::string& path, const std::string& content);  // "-" writes stdout

// Matrices load from either form (structured when the document starts with
// '['); the other object kinds are structured-only.
TropicalMatrix load_matrix(const std::string& path);
MaxPlusAutomaton load_automaton(const std::string& path);
MatrixFamily load_family(const std::string& path);
Nfa load_nfa(const std::string& path);
TwoCounterMachine load_machine(const std::string& path);

// Splits on whitespace/commas; a single unseparated token falls back to
// per-character symbols. Errors on symbols outside the alphabet.
Word parse_word(const std::string& text, const MaxPlusAutomaton& a);

}  // namespace io
}  // namespace tropik
