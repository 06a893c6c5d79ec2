#include "CLI11.hpp"

#include "tropik/automaton.hpp"
#include "tropik/constructions.hpp"
#include "tropik/counter_machine.hpp"
#include "tropik/io.hpp"
#include "tropik/matrix.hpp"
#include "tropik/oracle.hpp"
#include "tropik/semigroup.hpp"
#include "tropik/spectral.hpp"
#include "tropik/values.hpp"

#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using namespace tropik;
using io::Json;

struct GlobalOpts {
  std::string format = "text";
  std::size_t max_elements = kDefaultMaxElements;
  int max_len = kDefaultMaxLen;
  long long budget = oracle::kEnumerationBudget;
};

void emit(const GlobalOpts& g, const std::string& text, const Json& structured) {
  if (g.format == "structured")
    std::cout << structured.dump(2) << "\n";
  else
    std::cout << text;
}

std::string join_word(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i];
  }
  return out.str();
}

std::string join_indices(const std::vector<int>& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i];
  }
  return out.str();
}

const char* status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Halted: return "halted";
    case RunStatus::OutOfBudget: return "out-of-budget";
    default: return "stuck";
  }
}

void add_eval(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("eval", "Evaluate an automaton on a word");
  sub->fallthrough();
  auto file = std::make_shared<std::string>();
  auto word = std::make_shared<std::string>();
  sub->add_option("-a,--automaton", *file, "Automaton file")->required();
  sub->add_option("-w,--word", *word, "Word (symbols separated by spaces or commas)")->required();
  sub->callback([&g, file, word] {
    MaxPlusAutomaton a = io::load_automaton(*file);
    TropicalValue v = evaluate(a, io::parse_word(*word, a));
    emit(g, v.str() + "\n", Json{{"value", io::value_to_json(v)}});
  });
}

void add_rho(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("rho", "Spectral radius (maximum cycle mean) of a matrix");
  sub->fallthrough();
  auto file = std::make_shared<std::string>();
  sub->add_option("file", *file, "Matrix file")->required();
  sub->callback([&g, file] {
    Rational r = spectral_radius(io::load_matrix(*file));
    emit(g, r.str() + "\n", Json{{"rho", r.str()}});
  });
}

void add_critical_graph(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("critical-graph", "Critical graph and cyclicities of a matrix");
  sub->fallthrough();
  auto file = std::make_shared<std::string>();
  sub->add_option("file", *file, "Matrix file")->required();
  sub->callback([&g, file] {
    CriticalGraph cg = critical_graph(io::load_matrix(*file));
    std::ostringstream text;
    Json edges = Json::array(), comps = Json::array();
    for (const auto& e : cg.edges) {
      text << "edge " << e.from << ' ' << e.to << ' ' << e.weight.str() << '\n';
      edges.push_back(Json::array({e.from, e.to, io::value_to_json(TropicalValue(e.weight))}));
    }
    for (std::size_t k = 0; k < cg.components.size(); ++k) {
      const auto& c = cg.components[k];
      text << "scc " << k << ": {";
      for (std::size_t i = 0; i < c.vertices.size(); ++i)
        text << (i ? "," : "") << c.vertices[i];
      text << "} cyclicity " << c.cyclicity << '\n';
      comps.push_back(Json{{"vertices", c.vertices}, {"cyclicity", c.cyclicity}});
    }
    emit(g, text.str(),
         Json{{"vertices", cg.vertices}, {"edges", std::move(edges)}, {"components", std::move(comps)}});
  });
}

void add_urk(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("urk", "Ultimate rank of a matrix, or of a family with --exact");
  sub->fallthrough();
  auto file = std::make_shared<std::string>();
  auto exact = std::make_shared<bool>(false);
  sub->add_option("file", *file, "Matrix file (family file with --exact)")->required();
  sub->add_flag("--exact", *exact, "Minimum ultimate rank over the semigroup of a family");
  sub->callback([&g, file, exact] {
    int r = *exact ? urk_exact(io::load_family(*file), g.max_elements)
                   : ultimate_rank(io::load_matrix(*file));
    emit(g, std::to_string(r) + "\n", Json{{"urk", r}});
  });
}

void add_jsr(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("jsr", "Joint spectral radius of a matrix family");
  sub->fallthrough();
  auto file = std::make_shared<std::string>();
  auto exact = std::make_shared<bool>(false);
  auto bound = std::make_shared<int>(0);
  auto certify = std::make_shared<int>(0);
  sub->add_option("file", *file, "Family file")->required();
  sub->add_flag("--exact", *exact, "Exact value (finite entries only)");
  auto bound_opt = sub->add_option("--bound", *bound, "Upper bound from products of length <= L");
  auto certify_opt =
      sub->add_option("--certify-negative", *certify, "Search a product certifying jsr < 0");
  sub->callback([&g, file, exact, bound, certify, bound_opt, certify_opt] {
    int modes = (*exact ? 1 : 0) + (bound_opt->count() ? 1 : 0) + (certify_opt->count() ? 1 : 0);
    if (modes != 1)
      throw CLI::ValidationError("jsr", "pass exactly one of --exact, --bound, --certify-negative");
    MatrixFamily f = io::load_family(*file);
    if (*exact) {
      if (!f.finite_entries()) throw std::invalid_argument("exact JSR requires finite entries");
      Rational r = jsr_exact(f, g.max_elements);
      emit(g, r.str() + "\n", Json{{"jsr", r.str()}});
    } else if (bound_opt->count()) {
      Rational r = jsr_upper_bound(f, *bound);
      emit(g, r.str() + "\n", Json{{"bound", r.str()}});
    } else {
      auto cert = certify_jsr_negative(f, *certify);
      if (cert) {
        emit(g, "word " + join_indices(cert->first) + "\nvalue " + cert->second.str() + "\n",
             Json{{"word", cert->first}, {"value", cert->second.str()}});
      } else {
        emit(g, "none\n", Json{{"word", nullptr}});
      }
    }
  });
}

void add_closure(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("closure", "Normalized semigroup closure of a family");
  sub->fallthrough();
  auto file = std::make_shared<std::string>();
  auto max = std::make_shared<std::size_t>(0);
  sub->add_option("file", *file, "Family file")->required();
  auto max_opt = sub->add_option("--max", *max, "Element budget");
  sub->callback([&g, file, max, max_opt] {
    std::size_t budget = max_opt->count() ? *max : g.max_elements;
    NormalizedSemigroup s = normalized_closure(io::load_family(*file), budget);
    std::ostringstream text;
    text << "size " << s.elements.size() << '\n';
    Json elems = Json::array(), wits = Json::array();
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
      text << "element " << i << " witness " << join_indices(s.witnesses[i]) << '\n'
           << io::matrix_to_text(s.elements[i]);
      elems.push_back(io::matrix_to_json(s.elements[i]));
      wits.push_back(s.witnesses[i]);
    }
    emit(g, text.str(),
         Json{{"size", s.elements.size()}, {"elements", std::move(elems)}, {"witnesses", std::move(wits)}});
  });
}

void add_construct(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("construct", "Automaton and matrix constructions");
  sub->require_subcommand(1);
  sub->fallthrough();

  auto star = sub->add_subcommand("star", "Star extension of an automaton");
  star->fallthrough();
  {
    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>("-");
    auto letter = std::make_shared<std::string>("*");
    star->add_option("-a,--automaton", *file, "Automaton file")->required();
    star->add_option("-o,--output", *out, "Output file (default stdout)");
    star->add_option("--letter", *letter, "Fresh letter");
    star->callback([file, out, letter] {
      io::write_file(*out, io::automaton_to_json(star_extend(io::load_automaton(*file), *letter)).dump(2) + "\n");
    });
  }

  for (bool is_hat : {true, false}) {
    auto lift = sub->add_subcommand(is_hat ? "hat" : "tilde",
                                    is_hat ? "Block-doubling extension (matrix or family)"
                                           : "Bordering extension (matrix or family)");
    lift->fallthrough();
    auto mfile = std::make_shared<std::string>();
    auto ffile = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>("-");
    auto mopt = lift->add_option("-m,--matrix", *mfile, "Matrix file");
    auto fopt = lift->add_option("-f,--family", *ffile, "Family file");
    lift->add_option("-o,--output", *out, "Output file (default stdout)");
    lift->callback([&g, is_hat, mfile, ffile, out, mopt, fopt] {
      if ((mopt->count() ? 1 : 0) + (fopt->count() ? 1 : 0) != 1)
        throw CLI::ValidationError("construct", "pass exactly one of --matrix, --family");
      if (mopt->count()) {
        TropicalMatrix r = is_hat ? hat(io::load_matrix(*mfile)) : tilde(io::load_matrix(*mfile));
        io::write_file(*out, g.format == "structured" ? io::matrix_to_json(r).dump(2) + "\n"
                                                      : io::matrix_to_text(r));
      } else {
        MatrixFamily r = is_hat ? hat(io::load_family(*ffile)) : tilde(io::load_family(*ffile));
        io::write_file(*out, io::family_to_json(r).dump(2) + "\n");
      }
    });
  }

  auto gamma = sub->add_subcommand("nfa-gamma", "Universality-to-JSR family of an NFA");
  gamma->fallthrough();
  {
    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>("-");
    auto finite = std::make_shared<bool>(false);
    gamma->add_option("-n,--nfa", *file, "NFA file")->required();
    gamma->add_option("-o,--output", *out, "Output file (default stdout)");
    gamma->add_flag("--finite", *finite, "Replace -inf entries by -1");
    gamma->callback([file, out, finite] {
      io::write_file(*out, io::family_to_json(nfa_to_gamma(io::load_nfa(*file), *finite)).dump(2) + "\n");
    });
  }
}

void add_cm(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("cm", "Two-counter machine operations");
  sub->require_subcommand(1);
  sub->fallthrough();

  auto run_cmd = sub->add_subcommand("run", "Run a machine from (n1, n2)");
  run_cmd->fallthrough();
  {
    auto file = std::make_shared<std::string>();
    auto n1 = std::make_shared<long long>(0);
    auto n2 = std::make_shared<long long>(0);
    auto max_steps = std::make_shared<long long>(100000);
    run_cmd->add_option("file", *file, "Machine file")->required();
    run_cmd->add_option("--n1", *n1, "First counter");
    run_cmd->add_option("--n2", *n2, "Second counter");
    run_cmd->add_option("--max-steps", *max_steps, "Step budget");
    run_cmd->callback([&g, file, n1, n2, max_steps] {
      TwoCounterMachine m = io::load_machine(*file);
      RunResult r = run(m, *n1, *n2, *max_steps);
      std::ostringstream text;
      text << "status " << status_name(r.status) << '\n' << "steps " << r.trace.steps.size() << '\n';
      Json steps = Json::array();
      for (const auto& s : r.trace.steps) {
        text << "step " << s.letter << ' ' << m.states[s.after.state] << ' ' << s.after.c1 << ' '
             << s.after.c2 << '\n';
        steps.push_back(Json{{"letter", s.letter},
                             {"state", m.states[s.after.state]},
                             {"c1", s.after.c1},
                             {"c2", s.after.c2}});
      }
      text << "final " << m.states[r.last.state] << ' ' << r.last.c1 << ' ' << r.last.c2 << '\n';
      emit(g, text.str(),
           Json{{"status", status_name(r.status)},
                {"steps", std::move(steps)},
                {"final", Json{{"state", m.states[r.last.state]}, {"c1", r.last.c1}, {"c2", r.last.c2}}}});
    });
  }

  auto enc = sub->add_subcommand("encode", "Encode the halting execution from (n1, n2) as a word");
  enc->fallthrough();
  {
    auto file = std::make_shared<std::string>();
    auto n1 = std::make_shared<long long>(0);
    auto n2 = std::make_shared<long long>(0);
    auto max_steps = std::make_shared<long long>(100000);
    enc->add_option("file", *file, "Machine file")->required();
    enc->add_option("--n1", *n1, "First counter");
    enc->add_option("--n2", *n2, "Second counter");
    enc->add_option("--max-steps", *max_steps, "Step budget");
    enc->callback([&g, file, n1, n2, max_steps] {
      RunResult r = run(io::load_machine(*file), *n1, *n2, *max_steps);
      if (r.status != RunStatus::Halted)
        throw std::runtime_error(std::string("machine did not halt: ") + status_name(r.status));
      Word w = encode_trace_word(r.trace);
      emit(g, join_word(w) + "\n", Json{{"word", w}});
    });
  }

  auto comp = sub->add_subcommand("compile", "Compile a machine into its checker automaton");
  comp->fallthrough();
  {
    auto file = std::make_shared<std::string>();
    auto n = std::make_shared<long long>(0);
    auto out = std::make_shared<std::string>("-");
    comp->add_option("file", *file, "Machine file")->required();
    comp->add_option("--n", *n, "Initial first counter")->required();
    comp->add_option("-o,--output", *out, "Output automaton file (default stdout)");
    comp->callback([file, n, out] {
      io::write_file(*out,
                     io::automaton_to_json(build_checker(io::load_machine(*file), *n)).dump(2) + "\n");
    });
  }

  auto pipe = sub->add_subcommand("pipeline", "Checker, star-extended, as a matrix family");
  pipe->fallthrough();
  {
    auto file = std::make_shared<std::string>();
    auto n = std::make_shared<long long>(0);
    auto out = std::make_shared<std::string>("-");
    auto lifted = std::make_shared<bool>(false);
    pipe->add_option("file", *file, "Machine file")->required();
    pipe->add_option("--n", *n, "Initial first counter")->required();
    pipe->add_option("-o,--output", *out, "Output family file (default stdout)");
    pipe->add_flag("--hat", *lifted, "Emit the block-doubled lift instead");
    pipe->callback([file, n, out, lifted] {
      ReductionFamilies r = reduction_pipeline(io::load_machine(*file), *n);
      io::write_file(*out, io::family_to_json(*lifted ? r.gamma_hat : r.gamma7).dump(2) + "\n");
    });
  }
}

void add_compare(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("compare", "Search a word where the first automaton exceeds the second");
  sub->fallthrough();
  auto afile = std::make_shared<std::string>();
  auto bfile = std::make_shared<std::string>();
  auto len = std::make_shared<int>(0);
  sub->add_option("-a,--first", *afile, "Automaton file")->required();
  sub->add_option("-b,--second", *bfile, "Automaton file")->required();
  auto len_opt = sub->add_option("-L,--max-word-len", *len, "Length bound");
  sub->callback([&g, afile, bfile, len, len_opt] {
    int bound = len_opt->count() ? *len : g.max_len;
    auto r = compare_bounded(io::load_automaton(*afile), io::load_automaton(*bfile), bound);
    if (r) {
      const auto& [w, va, vb] = *r;
      emit(g,
           "word " + join_word(w) + "\nleft " + va.str() + "\nright " + vb.str() + "\n",
           Json{{"word", w}, {"left", io::value_to_json(va)}, {"right", io::value_to_json(vb)}});
    } else {
      emit(g, "none\n", Json{{"word", nullptr}});
    }
  });
}

void add_find_negative(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("find-negative", "Search a word with negative value");
  sub->fallthrough();
  auto file = std::make_shared<std::string>();
  auto len = std::make_shared<int>(0);
  auto bottom = std::make_shared<bool>(false);
  sub->add_option("-a,--automaton", *file, "Automaton file")->required();
  auto len_opt = sub->add_option("-L,--max-word-len", *len, "Length bound");
  sub->add_flag("--bottom-negative", *bottom, "Treat -inf values as negative");
  sub->callback([&g, file, len, bottom, len_opt] {
    int bound = len_opt->count() ? *len : g.max_len;
    auto r = find_negative_word(io::load_automaton(*file), bound, *bottom);
    if (r) {
      emit(g, "word " + join_word(r->first) + "\nvalue " + r->second.str() + "\n",
           Json{{"word", r->first}, {"value", io::value_to_json(r->second)}});
    } else {
      emit(g, "none\n", Json{{"word", nullptr}});
    }
  });
}

void add_oracle(CLI::App& app, const GlobalOpts& g) {
  auto sub = app.add_subcommand("oracle", "Brute-force reference implementations");
  sub->require_subcommand(1);
  sub->fallthrough();
  sub->group("");  // debugging namespace, hidden from help

  auto rho_cmd = sub->add_subcommand("rho", "Elementary-cycle maximum mean");
  rho_cmd->fallthrough();
  {
    auto file = std::make_shared<std::string>();
    rho_cmd->add_option("file", *file, "Matrix file")->required();
    rho_cmd->callback([&g, file] {
      Rational r = oracle::brute_rho(io::load_matrix(*file));
      emit(g, r.str() + "\n", Json{{"rho", r.str()}});
    });
  }

  auto trunc = sub->add_subcommand("jsr-trunc", "Per-length product minima");
  trunc->fallthrough();
  {
    auto file = std::make_shared<std::string>();
    auto len = std::make_shared<int>(0);
    trunc->add_option("-f,--family", *file, "Family file")->required();
    auto len_opt = trunc->add_option("-L,--max-word-len", *len, "Length bound");
    trunc->callback([&g, file, len, len_opt] {
      int bound = len_opt->count() ? *len : g.max_len;
      auto r = oracle::brute_jsr_trunc(io::load_family(*file), bound, g.budget);
      std::ostringstream text;
      text << "upper " << r.upper.str() << '\n';
      Json rows = Json::array();
      for (std::size_t i = 0; i < r.per_length.size(); ++i) {
        text << "length " << i + 1 << " norm " << r.per_length[i].norm_term.str() << " rho "
             << r.per_length[i].rho_term.str() << '\n';
        rows.push_back(Json{{"len", i + 1},
                            {"norm", r.per_length[i].norm_term.str()},
                            {"rho", r.per_length[i].rho_term.str()}});
      }
      emit(g, text.str(), Json{{"upper", r.upper.str()}, {"per_length", std::move(rows)}});
    });
  }

  auto minw = sub->add_subcommand("min-word", "Exact minimizer over bounded words");
  minw->fallthrough();
  {
    auto file = std::make_shared<std::string>();
    auto len = std::make_shared<int>(0);
    minw->add_option("-a,--automaton", *file, "Automaton file")->required();
    auto len_opt = minw->add_option("-L,--max-word-len", *len, "Length bound");
    minw->callback([&g, file, len, len_opt] {
      int bound = len_opt->count() ? *len : g.max_len;
      auto [w, v] = oracle::brute_min_word(io::load_automaton(*file), bound, g.budget);
      emit(g, "word " + join_word(w) + "\nvalue " + v.str() + "\n",
           Json{{"word", w}, {"value", io::value_to_json(v)}});
    });
  }

  auto urkset = sub->add_subcommand("urk-set", "Minimum ultimate rank over bounded products");
  urkset->fallthrough();
  {
    auto file = std::make_shared<std::string>();
    auto len = std::make_shared<int>(0);
    urkset->add_option("-f,--family", *file, "Family file")->required();
    auto len_opt = urkset->add_option("-L,--max-word-len", *len, "Length bound");
    urkset->callback([&g, file, len, len_opt] {
      int bound = len_opt->count() ? *len : g.max_len;
      int r = oracle::brute_urk_set(io::load_family(*file), bound, g.budget);
      emit(g, std::to_string(r) + "\n", Json{{"urk", r}});
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-plus automata, tropical matrix semigroups, and their reductions"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output encoding")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--max-elements", g.max_elements, "Closure element budget");
  app.add_option("--max-len", g.max_len, "Default length bound for bounded searches");
  app.add_option("--budget", g.budget, "Enumeration budget for brute-force oracles");

  add_eval(app, g);
  add_rho(app, g);
  add_critical_graph(app, g);
  add_urk(app, g);
  add_jsr(app, g);
  add_closure(app, g);
  add_construct(app, g);
  add_cm(app, g);
  add_compare(app, g);
  add_find_negative(app, g);
  add_oracle(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help paths
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
