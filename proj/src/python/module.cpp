#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropik/automaton.hpp"
#include "tropik/constructions.hpp"
#include "tropik/counter_machine.hpp"
#include "tropik/io.hpp"
#include "tropik/matrix.hpp"
#include "tropik/oracle.hpp"
#include "tropik/semigroup.hpp"
#include "tropik/spectral.hpp"
#include "tropik/values.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace tropik;

namespace {

// Python objects cross the boundary in the same shapes as the structured file
// formats: matrices are lists of rows with "-inf" for bottom, automata and
// families are dicts, rationals come back as "num/den" strings.
io::Json to_json(py::handle obj) {
  py::object dumps = py::module_::import("json").attr("dumps");
  return io::Json::parse(dumps(obj).cast<std::string>());
}

py::object from_json(const io::Json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(py::str(j.dump()));
}

py::object value_out(const TropicalValue& v) { return from_json(io::value_to_json(v)); }

}  // namespace

PYBIND11_MODULE(_tropik, m) {
  m.doc() = "Max-plus automata, tropical matrix semigroups, and their reductions";

  m.def("evaluate", [](py::handle aut, const Word& w) {
    return value_out(evaluate(io::automaton_from_json(to_json(aut)), w));
  });
  m.def("mu_of_word", [](py::handle aut, const Word& w) {
    return from_json(io::matrix_to_json(mu_of_word(io::automaton_from_json(to_json(aut)), w)));
  });
  m.def("is_all_initial_final", [](py::handle aut) {
    return is_all_initial_final(io::automaton_from_json(to_json(aut)));
  });
  m.def(
      "find_negative_word",
      [](py::handle aut, int max_len, bool bottom_is_negative) -> py::object {
        auto r = find_negative_word(io::automaton_from_json(to_json(aut)), max_len, bottom_is_negative);
        if (!r) return py::none();
        return py::make_tuple(r->first, value_out(r->second));
      },
      py::arg("automaton"), py::arg("max_len"), py::arg("bottom_is_negative") = false);

  m.def("spectral_radius", [](py::handle mat) {
    return spectral_radius(io::matrix_from_json(to_json(mat))).str();
  });
  m.def("ultimate_rank", [](py::handle mat) {
    return ultimate_rank(io::matrix_from_json(to_json(mat)));
  });
  m.def("critical_graph", [](py::handle mat) {
    CriticalGraph cg = critical_graph(io::matrix_from_json(to_json(mat)));
    io::Json edges = io::Json::array(), comps = io::Json::array();
    for (const auto& e : cg.edges)
      edges.push_back(io::Json::array({e.from, e.to, io::value_to_json(TropicalValue(e.weight))}));
    for (const auto& c : cg.components)
      comps.push_back(io::Json{{"vertices", c.vertices}, {"cyclicity", c.cyclicity}});
    return from_json(io::Json{{"vertices", cg.vertices}, {"edges", edges}, {"components", comps}});
  });

  m.def(
      "jsr_exact",
      [](py::handle fam, std::size_t max_elements) {
        return jsr_exact(io::family_from_json(to_json(fam)), max_elements).str();
      },
      py::arg("family"), py::arg("max_elements") = kDefaultMaxElements);
  m.def(
      "jsr_upper_bound",
      [](py::handle fam, int max_len) {
        return jsr_upper_bound(io::family_from_json(to_json(fam)), max_len).str();
      },
      py::arg("family"), py::arg("max_len") = kDefaultMaxLen);
  m.def(
      "certify_jsr_negative",
      [](py::handle fam, int max_len) -> py::object {
        auto r = certify_jsr_negative(io::family_from_json(to_json(fam)), max_len);
        if (!r) return py::none();
        return py::make_tuple(r->first, r->second.str());
      },
      py::arg("family"), py::arg("max_len") = kDefaultMaxLen);
  m.def(
      "normalized_closure",
      [](py::handle fam, std::size_t max_elements) {
        NormalizedSemigroup s = normalized_closure(io::family_from_json(to_json(fam)), max_elements);
        io::Json elems = io::Json::array();
        for (const auto& e : s.elements) elems.push_back(io::matrix_to_json(e));
        return from_json(io::Json{{"elements", elems}, {"witnesses", s.witnesses}});
      },
      py::arg("family"), py::arg("max_elements") = kDefaultMaxElements);
  m.def(
      "urk_exact",
      [](py::handle fam, std::size_t max_elements) {
        return urk_exact(io::family_from_json(to_json(fam)), max_elements);
      },
      py::arg("family"), py::arg("max_elements") = kDefaultMaxElements);

  m.def(
      "star_extend",
      [](py::handle aut, const std::string& letter) {
        return from_json(io::automaton_to_json(star_extend(io::automaton_from_json(to_json(aut)), letter)));
      },
      py::arg("automaton"), py::arg("letter") = "*");
  m.def("hat_matrix", [](py::handle mat) {
    return from_json(io::matrix_to_json(hat(io::matrix_from_json(to_json(mat)))));
  });
  m.def("tilde_matrix", [](py::handle mat) {
    return from_json(io::matrix_to_json(tilde(io::matrix_from_json(to_json(mat)))));
  });
  m.def("hat_family", [](py::handle fam) {
    return from_json(io::family_to_json(hat(io::family_from_json(to_json(fam)))));
  });
  m.def("tilde_family", [](py::handle fam) {
    return from_json(io::family_to_json(tilde(io::family_from_json(to_json(fam)))));
  });
  m.def(
      "nfa_to_gamma",
      [](py::handle nfa, bool replace_bottom_by_minus_one) {
        return from_json(
            io::family_to_json(nfa_to_gamma(io::nfa_from_json(to_json(nfa)), replace_bottom_by_minus_one)));
      },
      py::arg("nfa"), py::arg("replace_bottom_by_minus_one") = false);
  m.def("nfa_universal", [](py::handle nfa) {
    return nfa_universal(io::nfa_from_json(to_json(nfa)));
  });

  m.def(
      "run_machine",
      [](py::handle machine, long long n1, long long n2, long long max_steps) {
        TwoCounterMachine mc = io::machine_from_json(to_json(machine));
        RunResult r = run(mc, n1, n2, max_steps);
        const char* status = r.status == RunStatus::Halted ? "halted"
                             : r.status == RunStatus::OutOfBudget ? "out-of-budget"
                                                                  : "stuck";
        io::Json steps = io::Json::array();
        for (const auto& s : r.trace.steps)
          steps.push_back(io::Json{{"letter", s.letter},
                                   {"state", mc.states[s.after.state]},
                                   {"c1", s.after.c1},
                                   {"c2", s.after.c2}});
        return from_json(io::Json{
            {"status", status},
            {"steps", steps},
            {"final", io::Json{{"state", mc.states[r.last.state]}, {"c1", r.last.c1}, {"c2", r.last.c2}}}});
      },
      py::arg("machine"), py::arg("n1"), py::arg("n2") = 0, py::arg("max_steps") = 100000);
  m.def(
      "encode_halting_word",
      [](py::handle machine, long long n1, long long n2, long long max_steps) {
        RunResult r = run(io::machine_from_json(to_json(machine)), n1, n2, max_steps);
        if (r.status != RunStatus::Halted)
          throw std::runtime_error("machine did not halt within the step budget");
        return encode_trace_word(r.trace);
      },
      py::arg("machine"), py::arg("n1"), py::arg("n2") = 0, py::arg("max_steps") = 100000);
  m.def("build_checker", [](py::handle machine, long long n) {
    return from_json(io::automaton_to_json(build_checker(io::machine_from_json(to_json(machine)), n)));
  });
  m.def("reduction_pipeline", [](py::handle machine, long long n) {
    ReductionFamilies r = reduction_pipeline(io::machine_from_json(to_json(machine)), n);
    return py::make_tuple(from_json(io::family_to_json(r.gamma7)),
                          from_json(io::family_to_json(r.gamma_hat)));
  });

  m.def("brute_rho", [](py::handle mat) {
    return oracle::brute_rho(io::matrix_from_json(to_json(mat))).str();
  });
  m.def(
      "brute_min_word",
      [](py::handle aut, int max_len) {
        auto [w, v] = oracle::brute_min_word(io::automaton_from_json(to_json(aut)), max_len);
        return py::make_tuple(w, value_out(v));
      },
      py::arg("automaton"), py::arg("max_len"));
}
