#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rmk/error.hpp"
#include "rmk/kripke.hpp"
#include "rmk/lab.hpp"
#include "rmk/semantics.hpp"
#include "rmk/simulation.hpp"
#include "rmk/translation.hpp"

namespace rmk::cli {

namespace {

using json = nlohmann::json;

// Input problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string formula_text(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open '" + file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (inline_text.empty()) throw UsageError("a formula is required (--formula or --formula-file)");
  return inline_text;
}

WorldPair parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects 'w,v'");
  try {
    return {static_cast<WorldId>(std::stoul(text.substr(0, comma))),
            static_cast<WorldId>(std::stoul(text.substr(comma + 1)))};
  } catch (const std::exception&) {
    throw UsageError("--pair expects two world ids, got '" + text + "'");
  }
}

void check_world(const KripkeModel& m, WorldId w) {
  if (w >= m.n_worlds())
    throw UsageError("world " + std::to_string(w) + " out of range (model has " + std::to_string(m.n_worlds()) +
                     " worlds)");
}

std::string pairs_text(const Relation& r) {
  std::string out;
  for (auto [a, b] : r.pairs()) out += "(" + std::to_string(a) + "," + std::to_string(b) + ") ";
  if (!out.empty()) out.pop_back();
  return out;
}

std::string relation_dot(const KripkeModel& m, const Relation& s) {
  std::string dot = model_to_dot(m);
  const auto close = dot.rfind('}');
  std::string extra;
  for (auto [a, b] : s.pairs())
    extra += "  w" + std::to_string(a) + " -> w" + std::to_string(b) + " [style=dashed, color=blue];\n";
  return dot.substr(0, close) + extra + "}\n";
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "  trials=" << r.trials
     << " checks=" << r.checks << " skipped=" << r.skipped << " failures=" << r.failures.size() << "\n";
  for (const auto& a : r.assertions) os << "  [" << (a.passed ? "PASS" : "FAIL") << "] " << a.name
                                        << (a.detail.empty() ? "" : "  -- " + a.detail) << "\n";
  for (const auto& f : r.failures) os << "  failure (" << f.lambda << "): " << f.detail << "\n";
  return os.str();
}

struct Options {
  std::string model_path, formula, formula_file, lambda, mode = "plain", relation_path, pair, sequent;
  std::string suite, var = "x";
  WorldId world = 0;
  bool world_given = false;
  bool pretty = false;
  bool dot = false;
  std::size_t cap = kDefaultClosureCap;
  TrialConfig trial;
  std::size_t gen_worlds = 4, gen_letters = 1;
  std::uint64_t gen_seed = 1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restorative modal logic toolkit: model checking, simulations, translations and test suites", "rmk"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  int status = 0;
  std::function<void()> action;

  auto add_model = [&](CLI::App* c) { c->add_option("--model", o.model_path, "Model JSON file")->required(); };
  auto add_formula = [&](CLI::App* c) {
    c->add_option("--formula", o.formula, "Formula text");
    c->add_option("--formula-file", o.formula_file, "File holding the formula text");
  };
  auto add_lambda = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--lambda", o.lambda, "Comma list of connectives, e.g. smile,con");
    if (required) opt->required();
  };
  auto add_mode = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "plain | symmetric | ablated:<tags>");
  };
  auto add_trials = [&](CLI::App* c) {
    c->add_option("--seed", o.trial.seed, "Base seed");
    c->add_option("--trials", o.trial.trials, "Number of trials");
    c->add_option("--max-worlds", o.trial.max_worlds, "Largest model size");
    c->add_option("--max-letters", o.trial.max_letters, "Most letters per model");
    c->add_option("--edge-prob", o.trial.edge_prob, "Edge probability");
    c->add_option("--letter-prob", o.trial.letter_prob, "Letter probability");
    c->add_option("--depth", o.trial.formula_depth, "Formula depth bound");
    c->add_option("--formulas", o.trial.formulas_per_trial, "Formulas sampled per trial");
    c->add_option("--cap", o.trial.closure_cap, "Closure size cap");
    c->add_option("--jobs", o.trial.jobs, "Parallel trial workers");
  };
  app.add_flag("--pretty", o.pretty, "Human-readable output instead of JSON");

  auto load = [&] { return load_model(read_json_file(o.model_path)); };
  auto emit = [&](const json& doc, const std::string& text) {
    if (o.pretty)
      out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    else
      out << doc.dump(2) << "\n";
  };
  auto world_opt = [&](CLI::App* c) {
    c->add_option("--world", o.world, "World id")->each([&](const std::string&) { o.world_given = true; });
  };

  auto* check = app.add_subcommand("check", "Does a world satisfy a formula");
  add_model(check);
  add_formula(check);
  world_opt(check);
  check->callback([&] {
    action = [&] {
      const auto m = load();
      const auto f = parse_formula(formula_text(o.formula, o.formula_file));
      const auto t = truth_set(m, f);
      if (o.world_given) {
        check_world(m, o.world);
        const bool sat = t.contains(o.world);
        emit({{"formula", print_formula(f)}, {"world", o.world}, {"satisfied", sat}}, sat ? "true" : "false");
      } else {
        emit({{"formula", print_formula(f)}, {"worlds", t.members()}}, "");
      }
    };
  });

  auto* truthset = app.add_subcommand("truthset", "Truth set of a formula");
  add_model(truthset);
  add_formula(truthset);
  truthset->callback([&] {
    action = [&] {
      const auto m = load();
      const auto f = parse_formula(formula_text(o.formula, o.formula_file));
      const auto ws = truth_set(m, f).members();
      std::string text;
      for (auto w : ws) text += std::to_string(w) + " ";
      emit({{"formula", print_formula(f)}, {"worlds", ws}}, "{ " + text + "}");
    };
  });

  auto* greatest = app.add_subcommand("sim-greatest", "Greatest simulation of a model");
  add_model(greatest);
  add_lambda(greatest, true);
  add_mode(greatest);
  greatest->add_flag("--dot", o.dot, "Graphviz output with the relation dashed");
  greatest->callback([&] {
    action = [&] {
      const auto m = load();
      const auto s = greatest_simulation(m, parse_similarity_type(o.lambda), parse_sim_mode(o.mode));
      if (o.dot) {
        out << relation_dot(m, s);
        return;
      }
      auto doc = relation_to_json(s);
      doc["lambda"] = parse_similarity_type(o.lambda).to_string();
      doc["mode"] = o.mode;
      emit(doc, pairs_text(s));
    };
  });

  auto* verify = app.add_subcommand("sim-verify", "Check a relation against the simulation conditions");
  add_model(verify);
  add_lambda(verify, true);
  add_mode(verify);
  verify->add_option("--relation", o.relation_path, "Relation JSON file")->required();
  verify->callback([&] {
    action = [&] {
      const auto m = load();
      const auto s = relation_from_json(read_json_file(o.relation_path), m.n_worlds());
      const auto report = verify_simulation(m, parse_similarity_type(o.lambda), s, parse_sim_mode(o.mode));
      std::string text = report.empty() ? "simulation" : "";
      for (const auto& v : report)
        text += std::string(condition_tag(v.condition)) + " at (" + std::to_string(v.pair.first) + "," +
                std::to_string(v.pair.second) + ") witness " + std::to_string(v.witness) + "\n";
      emit({{"ok", report.empty()}, {"violations", report_to_json(report)}}, text);
      if (!report.empty()) status = 1;
    };
  });

  auto* witness = app.add_subcommand("witness", "Formula separating a pair outside the greatest simulation");
  add_model(witness);
  add_lambda(witness, true);
  witness->add_option("--pair", o.pair, "w,v")->required();
  witness->callback([&] {
    action = [&] {
      const auto m = load();
      const auto [w, v] = parse_pair(o.pair);
      check_world(m, w);
      check_world(m, v);
      const auto f = witness_formula(m, parse_similarity_type(o.lambda), w, v);
      json doc = {{"pair", {w, v}}, {"similar", !f.has_value()}};
      if (f) doc["formula"] = print_formula(*f);
      emit(doc, f ? print_formula(*f) : "similar: no separating formula");
    };
  });

  auto* subsume = app.add_subcommand("subsume", "Subsumption relation via the definable-set closure");
  add_model(subsume);
  add_lambda(subsume, true);
  subsume->add_option("--cap", o.cap, "Closure size cap");
  subsume->callback([&] {
    action = [&] {
      const auto m = load();
      const auto s = subsumption(m, parse_similarity_type(o.lambda), o.cap);
      auto doc = relation_to_json(s);
      doc["lambda"] = parse_similarity_type(o.lambda).to_string();
      emit(doc, pairs_text(s));
    };
  });

  auto* closure = app.add_subcommand("closure", "All definable truth sets with a defining formula each");
  add_model(closure);
  add_lambda(closure, true);
  closure->add_option("--cap", o.cap, "Closure size cap");
  closure->callback([&] {
    action = [&] {
      const auto m = load();
      const auto fam = definable_closure(m, parse_similarity_type(o.lambda), o.cap);
      json sets = json::array();
      std::string text;
      for (std::size_t i = 0; i < fam.sets.size(); ++i) {
        sets.push_back({{"worlds", fam.sets[i].members()}, {"formula", print_formula(fam.generators[i])}});
        std::string ws;
        for (auto w : fam.sets[i].members()) ws += std::to_string(w) + " ";
        text += "{ " + ws + "}  " + print_formula(fam.generators[i]) + "\n";
      }
      emit({{"lambda", fam.lambda.to_string()}, {"count", fam.sets.size()}, {"sets", sets}}, text);
    };
  });

  auto* translate = app.add_subcommand("translate", "Standard translation into first-order logic");
  add_formula(translate);
  translate->add_option("--var", o.var, "Free variable: x or y<k>");
  translate->callback([&] {
    action = [&] {
      const auto f = parse_formula(formula_text(o.formula, o.formula_file));
      const auto probe = parse_fol(o.var + " = " + o.var);
      const auto fol = standard_translation(probe.var(), f);
      emit({{"formula", print_formula(f)}, {"fol", print_fol(fol)}}, print_fol(fol));
    };
  });

  auto* stcheck = app.add_subcommand("st-check", "Compare modal and first-order evaluation");
  add_model(stcheck);
  add_formula(stcheck);
  world_opt(stcheck);
  stcheck->callback([&] {
    action = [&] {
      const auto m = load();
      const auto f = parse_formula(formula_text(o.formula, o.formula_file));
      const auto fol = standard_translation(kVarX, f);
      json rows = json::array();
      bool all = true;
      std::string text;
      for (WorldId w = 0; w < m.n_worlds(); ++w) {
        if (o.world_given && w != o.world) continue;
        const bool modal = satisfies(m, w, f);
        const bool first_order = fol_eval(m, fol, {{kVarX, w}});
        all = all && modal == first_order;
        rows.push_back({{"world", w}, {"modal", modal}, {"fol", first_order}});
        text += std::to_string(w) + ": modal=" + (modal ? "1" : "0") + " fol=" + (first_order ? "1" : "0") + "\n";
      }
      if (o.world_given) check_world(m, o.world);
      emit({{"formula", print_formula(f)}, {"fol", print_fol(fol)}, {"agree", all}, {"worlds", rows}}, text);
      if (!all) status = 1;
    };
  });

  auto* suite = app.add_subcommand("suite", "Run a randomized property suite");
  suite->add_option("name", o.suite, "hm | adequacy | st | directed | symmetric | witness | union | principles")
      ->required();
  add_trials(suite);
  suite->callback([&] {
    action = [&] {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), o.suite) == names.end())
        throw UsageError("unknown suite '" + o.suite + "'");
      const auto r = run_suite(o.suite, o.trial);
      emit(r.to_json(), report_text(r));
      if (!r.passed()) status = 1;
    };
  });

  auto* examples = app.add_subcommand("examples", "Replay the worked examples");
  examples->callback([&] {
    action = [&] {
      const auto r = run_lab_examples();
      emit(r.to_json(), report_text(r));
      if (!r.passed()) status = 1;
    };
  });

  auto* gen = app.add_subcommand("gen", "Generate a seeded random model");
  gen->add_option("--worlds", o.gen_worlds, "Number of worlds");
  gen->add_option("--letters", o.gen_letters, "Number of letters");
  gen->add_option("--edge-prob", o.trial.edge_prob, "Edge probability");
  gen->add_option("--letter-prob", o.trial.letter_prob, "Letter probability");
  gen->add_option("--seed", o.gen_seed, "Seed");
  gen->add_flag("--dot", o.dot, "Graphviz output");
  gen->callback([&] {
    action = [&] {
      const auto m = random_model(o.gen_worlds, o.gen_letters, o.trial.edge_prob, o.trial.letter_prob, o.gen_seed);
      if (o.dot)
        out << model_to_dot(m);
      else
        out << model_to_json(m).dump(2) << "\n";
    };
  });

  auto* principles = app.add_subcommand("principles", "Validity and compatibility checks for the connectives");
  principles->add_option("--seed", o.trial.seed, "Seed for the random phase");
  principles->callback([&] {
    action = [&] {
      SearchConfig s;
      s.seed = o.trial.seed;
      const auto r = principle_suite(s);
      emit(r.to_json(), report_text(r));
      if (!r.passed()) status = 1;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (action) action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (offset " << e.offset() << ")\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}

}  // namespace rmk::cli
