#include "rmk/lab.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

#include "rmk/error.hpp"
#include "rmk/rng.hpp"
#include "rmk/translation.hpp"

namespace rmk {

// ---------------------------------------------------------------------------
// Registry

namespace {

std::vector<LabExample> build_registry() {
  std::vector<LabExample> out;
  const Formula p0 = Formula::letter(0);
  const Formula bot = Formula::bot();

  // w -> u, no letter true anywhere
  {
    KripkeModel m(3, {{0, 2}}, {{0, {}}});
    out.push_back({"smile_vsmile",
                   {"w", "v", "u"},
                   m,
                   {UnaryOp::Inc},
                   SimMode::plain(),
                   Relation(3, {{0, 2}, {0, 1}}),
                   {{0, Formula::unary(UnaryOp::Smile, p0), true}, {1, Formula::unary(UnaryOp::Smile, p0), false}}});
  }
  // w -> u, v -> t, p0 = {v, u, t}
  {
    KripkeModel m(4, {{0, 2}, {1, 3}}, {{0, {1, 2, 3}}});
    out.push_back({"neg",
                   {"w", "v", "u", "t"},
                   m,
                   {UnaryOp::Smile, UnaryOp::Con},
                   SimMode::plain(),
                   Relation(4, {{0, 1}, {2, 3}, {3, 2}}),
                   {{0, p0, false}, {1, p0, true}}});
  }
  // v -> t, p0 = {t}
  {
    KripkeModel m(3, {{1, 2}}, {{0, {2}}});
    out.push_back({"dashed",
                   {"w", "v", "t"},
                   m,
                   {UnaryOp::Con},
                   SimMode::plain(),
                   Relation(3, {{0, 1}, {1, 2}}),
                   {{2, p0, true}, {0, p0, false}, {1, p0, false}}});
  }
  // w -> w, no letter true anywhere
  {
    KripkeModel m(2, {{0, 0}}, {{0, {}}});
    const Formula box_bot = Formula::unary(UnaryOp::Box, bot);
    out.push_back({"undef_new",
                   {"w", "v"},
                   m,
                   {UnaryOp::Con, UnaryOp::Det, UnaryOp::Inc, UnaryOp::Und},
                   SimMode::symmetric(),
                   Relation(2, {{0, 1}, {1, 0}, {0, 0}}),
                   {{0, box_bot, false}, {1, box_bot, true}}});
  }
  return out;
}

}  // namespace

const std::vector<LabExample>& lab_examples() {
  static const std::vector<LabExample> registry = build_registry();
  return registry;
}

const LabExample& lab_example(const std::string& id) {
  for (const auto& e : lab_examples())
    if (e.id == id) return e;
  throw std::out_of_range("no example named '" + id + "'");
}

// ---------------------------------------------------------------------------
// Reports

nlohmann::json TrialConfig::to_json() const {
  return {{"seed", seed},
          {"trials", trials},
          {"max_worlds", max_worlds},
          {"max_letters", max_letters},
          {"edge_prob", edge_prob},
          {"letter_prob", letter_prob},
          {"formula_depth", formula_depth},
          {"formulas_per_trial", formulas_per_trial},
          {"closure_cap", closure_cap}};
}

bool SuiteReport::passed() const {
  return failures.empty() && std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) {
           return a.passed;
         });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) fails.push_back({{"model", f.model}, {"lambda", f.lambda}, {"detail", f.detail}});
  nlohmann::json doc = {{"suite", suite},   {"config", config},         {"trials", trials}, {"checks", checks},
                        {"skipped", skipped}, {"failures", fails}, {"passed", passed()}};
  if (!assertions.empty()) {
    nlohmann::json as = nlohmann::json::array();
    for (const auto& a : assertions) as.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
    doc["assertions"] = as;
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Certificates

bool verify_certificate(const UndefinabilityCertificate& c) {
  const auto [w, v] = c.pair;
  const auto n = c.model.n_worlds();
  if (w >= n || v >= n || c.relation.n_worlds() != n) return false;
  if (in_language(c.target, c.lambda)) return false;
  if (!c.relation.contains(w, v)) return false;
  try {
    if (!verify_simulation(c.model, c.lambda.without(UnaryOp::Not), c.relation, c.mode).empty()) return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (c.lambda.contains(UnaryOp::Not) && c.mode.variant != SimMode::Variant::Symmetric) return false;
  return satisfies(c.model, w, c.target) && !satisfies(c.model, v, c.target);
}

nlohmann::json certificate_to_json(const UndefinabilityCertificate& c) {
  const auto [w, v] = c.pair;
  return {{"target", print_formula(c.target)},
          {"lambda", c.lambda.to_string()},
          {"mode", c.mode.to_string()},
          {"model", model_to_json(c.model)},
          {"relation", relation_to_json(c.relation)},
          {"pair", {w, v}},
          {"source", c.source},
          {"evidence",
           {{"target_at_first", satisfies(c.model, w, c.target)},
            {"target_at_second", satisfies(c.model, v, c.target)},
            {"violations", report_to_json(verify_simulation(c.model, c.lambda.without(UnaryOp::Not), c.relation,
                                                            c.mode))}}}};
}

UndefinabilityCertificate certificate_from_json(const nlohmann::json& doc) {
  for (const char* key : {"target", "lambda", "mode", "model", "relation", "pair"})
    if (!doc.is_object() || !doc.contains(key)) throw ModelError(std::string("certificate is missing '") + key + "'");
  KripkeModel m = load_model(doc["model"]);
  const auto& p = doc["pair"];
  if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
    throw ModelError("certificate pair must be [w, v]");
  const WorldPair pair{p[0].get<WorldId>(), p[1].get<WorldId>()};
  if (pair.first >= m.n_worlds() || pair.second >= m.n_worlds()) throw ModelError("certificate pair out of range");
  Relation s = relation_from_json(doc["relation"], m.n_worlds());
  return {parse_formula(doc["target"].get<std::string>()),
          parse_similarity_type(doc["lambda"].get<std::string>()),
          parse_sim_mode(doc["mode"].get<std::string>()),
          std::move(m),
          std::move(s),
          pair,
          doc.value("source", std::string{})};
}

namespace {

std::optional<WorldPair> breaking_pair(const KripkeModel& m, const Relation& s, const Formula& target) {
  const auto t = truth_set(m, target);
  for (auto [a, b] : s.pairs())
    if (t.contains(a) && !t.contains(b)) return WorldPair{a, b};
  return std::nullopt;
}

}  // namespace

std::optional<UndefinabilityCertificate> definability_probe(const Formula& target, const SimilarityType& lambda,
                                                            const TrialConfig& cfg) {
  if (in_language(target, lambda)) return std::nullopt;
  if (lambda.contains(UnaryOp::Box) || lambda.contains(UnaryOp::Dia)) return std::nullopt;
  const SimMode mode = lambda.contains(UnaryOp::Not) ? SimMode::symmetric() : SimMode::plain();
  const SimilarityType checked = lambda.without(UnaryOp::Not);

  auto attempt = [&](const KripkeModel& m, const Relation& s,
                     const std::string& source) -> std::optional<UndefinabilityCertificate> {
    if (!verify_simulation(m, checked, s, mode).empty()) return std::nullopt;
    auto p = breaking_pair(m, s, target);
    if (!p) return std::nullopt;
    UndefinabilityCertificate c{target, lambda, mode, m, s, *p, source};
    if (!verify_certificate(c)) return std::nullopt;
    return c;
  };

  for (const auto& e : lab_examples())
    if (auto c = attempt(e.model, e.claimed, "example:" + e.id + ":claimed")) return c;
  for (const auto& e : lab_examples())
    if (auto c = attempt(e.model, greatest_simulation(e.model, lambda, mode), "example:" + e.id + ":greatest"))
      return c;

  const auto ls = letters(target);
  const std::size_t n_letters = ls.empty() ? 0 : *ls.rbegin() + 1;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng(derive_seed(cfg.seed, i));
    const std::size_t n = 1 + rng.below(std::max<std::size_t>(cfg.max_worlds, 1));
    KripkeModel m = random_model(n, n_letters, cfg.edge_prob, cfg.letter_prob, rng.next());
    if (auto c = attempt(m, greatest_simulation(m, lambda, mode),
                         "random:seed=" + std::to_string(cfg.seed) + ",trial=" + std::to_string(i)))
      return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Trial plumbing

SimilarityType random_restorative_type(SplitMix64& rng) {
  const std::uint64_t mask = 1 + rng.below(63);
  SimilarityType t;
  for (std::size_t i = 0; i < kRestorativeOps.size(); ++i)
    if ((mask >> i) & 1U) t.insert(kRestorativeOps[i]);
  return t;
}

namespace {

struct TrialOutcome {
  std::size_t checks = 0;
  bool skipped = false;
  std::vector<SuiteFailure> failures;
};

using TrialFn = std::function<void(std::size_t, SplitMix64&, TrialOutcome&)>;

SuiteReport run_trials(const std::string& name, const TrialConfig& cfg, const TrialFn& fn) {
  std::vector<TrialOutcome> outcomes(cfg.trials);
  auto worker = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < cfg.trials; i += stride) {
      SplitMix64 rng(derive_seed(cfg.seed, i));
      fn(i, rng, outcomes[i]);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(cfg.jobs, 1, std::max<std::size_t>(cfg.trials, 1));
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker, j, jobs);
    for (auto& t : pool) t.join();
  }

  SuiteReport r;
  r.suite = name;
  r.config = cfg.to_json();
  r.trials = cfg.trials;
  for (auto& o : outcomes) {
    r.checks += o.checks;
    if (o.skipped) ++r.skipped;
    for (auto& f : o.failures) r.failures.push_back(std::move(f));
  }
  return r;
}

KripkeModel trial_model(SplitMix64& rng, const TrialConfig& cfg) {
  const std::size_t n = 1 + rng.below(std::max<std::size_t>(cfg.max_worlds, 1));
  const std::size_t k = rng.below(cfg.max_letters + 1);
  return random_model(n, k, cfg.edge_prob, cfg.letter_prob, rng.next());
}

std::size_t letter_count(const KripkeModel& m) {
  const auto ls = m.letter_indices();
  return ls.empty() ? 0 : ls.back() + 1;
}

std::string describe_difference(const Relation& got, const Relation& want, const std::string& got_name,
                                const std::string& want_name) {
  for (auto [a, b] : got.pairs())
    if (!want.contains(a, b))
      return "(" + std::to_string(a) + "," + std::to_string(b) + ") in " + got_name + " but not in " + want_name;
  for (auto [a, b] : want.pairs())
    if (!got.contains(a, b))
      return "(" + std::to_string(a) + "," + std::to_string(b) + ") in " + want_name + " but not in " + got_name;
  return "relations agree";
}

Formula trial_formula(SplitMix64& rng, const TrialConfig& cfg, const std::vector<UnaryOp>& ops,
                      std::size_t n_letters) {
  return random_formula(rng, rng.below(cfg.formula_depth + 1), ops, n_letters);
}

}  // namespace

// ---------------------------------------------------------------------------
// Suites

SuiteReport hm_suite(const TrialConfig& cfg) {
  return run_trials("hm", cfg, [&](std::size_t, SplitMix64& rng, TrialOutcome& out) {
    const KripkeModel m = trial_model(rng, cfg);
    const SimilarityType lambda = random_restorative_type(rng);
    const Relation sim = greatest_simulation(m, lambda);
    Relation sub;
    try {
      sub = subsumption(m, lambda, cfg.closure_cap);
    } catch (const CapExceeded&) {
      out.skipped = true;
      return;
    }
    ++out.checks;
    if (sim != sub)
      out.failures.push_back({model_to_json(m), lambda.to_string(),
                              describe_difference(sim, sub, "greatest simulation", "subsumption")});
  });
}

SuiteReport adequacy_suite(const TrialConfig& cfg) {
  return run_trials("adequacy", cfg, [&](std::size_t, SplitMix64& rng, TrialOutcome& out) {
    const KripkeModel m = trial_model(rng, cfg);
    const SimilarityType lambda = random_restorative_type(rng);
    const auto pairs = greatest_simulation(m, lambda).pairs();
    const auto ops = lambda.ops();
    for (std::size_t i = 0; i < cfg.formulas_per_trial; ++i) {
      const Formula f = trial_formula(rng, cfg, ops, letter_count(m));
      const TruthSet t = truth_set(m, f);
      for (auto [w, v] : pairs) {
        ++out.checks;
        if (t.contains(w) && !t.contains(v))
          out.failures.push_back({model_to_json(m), lambda.to_string(),
                                  "(" + std::to_string(w) + "," + std::to_string(v) + ") similar but " +
                                      print_formula(f) + " not preserved"});
      }
    }
  });
}

SuiteReport st_suite(const TrialConfig& cfg) {
  const std::vector<UnaryOp> ops(kAllOps.begin(), kAllOps.end());
  return run_trials("st", cfg, [&](std::size_t, SplitMix64& rng, TrialOutcome& out) {
    const KripkeModel m = trial_model(rng, cfg);
    for (std::size_t i = 0; i < cfg.formulas_per_trial; ++i) {
      const Formula f = trial_formula(rng, cfg, ops, letter_count(m));
      const auto w = static_cast<WorldId>(rng.below(m.n_worlds()));
      ++out.checks;
      if (!st_check(m, w, f))
        out.failures.push_back({model_to_json(m), "all",
                                "modal and first-order evaluation disagree on " + print_formula(f) + " at " +
                                    std::to_string(w)});
    }
  });
}

SuiteReport directed_suite(const TrialConfig& cfg) {
  return run_trials("directed", cfg, [&](std::size_t, SplitMix64& rng, TrialOutcome& out) {
    const KripkeModel m1 = trial_model(rng, cfg);
    const KripkeModel m2 = trial_model(rng, cfg);
    SimilarityType lambda;
    const auto mask = rng.below(4);  // the empty type included
    if (mask & 1U) lambda.insert(UnaryOp::Smile);
    if (mask & 2U) lambda.insert(UnaryOp::Frown);

    const DirectedSimPair d = greatest_directed_simulation(m1, m2, lambda);
    const DisjointUnion u = disjoint_union(m1, m2);
    const DirectedSimPair via_union = to_directed(greatest_simulation(u.model, lambda), u.inj);
    ++out.checks;
    const nlohmann::json models = {{"left", model_to_json(m1)}, {"right", model_to_json(m2)}};
    if (!verify_directed(m1, m2, lambda, d).empty())
      out.failures.push_back({models, lambda.to_string(), "directed fixpoint does not verify"});
    if (d.forward != via_union.forward)
      out.failures.push_back({models, lambda.to_string(), "forward relation differs from cross-block similarity"});
    if (d.backward != via_union.backward)
      out.failures.push_back({models, lambda.to_string(), "backward relation differs from cross-block similarity"});
  });
}

SuiteReport symmetric_suite(const TrialConfig& cfg) {
  return run_trials("symmetric", cfg, [&](std::size_t, SplitMix64& rng, TrialOutcome& out) {
    const KripkeModel m = trial_model(rng, cfg);
    const SimilarityType lambda = random_restorative_type(rng);
    const Relation sym = greatest_simulation(m, lambda, SimMode::symmetric());
    Relation eq;
    try {
      eq = subsumption(m, lambda.with(UnaryOp::Not), cfg.closure_cap);
    } catch (const CapExceeded&) {
      out.skipped = true;
      return;
    }
    ++out.checks;
    if (sym != eq)
      out.failures.push_back({model_to_json(m), lambda.to_string(),
                              describe_difference(sym, eq, "symmetric similarity", "closure equivalence")});
    if (lambda.contains(UnaryOp::Smile) || lambda.contains(UnaryOp::Frown)) {
      ++out.checks;
      const Relation bis = kripke_bisimulation(m);
      if (sym != bis)
        out.failures.push_back({model_to_json(m), lambda.to_string(),
                                describe_difference(sym, bis, "symmetric similarity", "bisimilarity")});
    }
  });
}

SuiteReport witness_suite(const TrialConfig& cfg) {
  return run_trials("witness", cfg, [&](std::size_t, SplitMix64& rng, TrialOutcome& out) {
    const KripkeModel m = trial_model(rng, cfg);
    const SimilarityType lambda = random_restorative_type(rng);
    WitnessBuilder builder(m, lambda);
    const auto n = static_cast<WorldId>(m.n_worlds());
    for (WorldId w = 0; w < n; ++w)
      for (WorldId v = 0; v < n; ++v) {
        if (builder.trace().result.contains(w, v)) continue;
        ++out.checks;
        try {
          if (!builder.witness(w, v))
            out.failures.push_back({model_to_json(m), lambda.to_string(), "no witness for a deleted pair"});
        } catch (const std::logic_error& e) {
          out.failures.push_back({model_to_json(m), lambda.to_string(), e.what()});
        }
      }
  });
}

SuiteReport union_suite(const TrialConfig& cfg) {
  const std::vector<UnaryOp> ops(kAllOps.begin(), kAllOps.end());
  return run_trials("union", cfg, [&](std::size_t, SplitMix64& rng, TrialOutcome& out) {
    const KripkeModel m1 = trial_model(rng, cfg);
    const KripkeModel m2 = trial_model(rng, cfg);
    const DisjointUnion u = disjoint_union(m1, m2);
    const std::size_t nl = std::max(letter_count(m1), letter_count(m2));
    for (std::size_t i = 0; i < cfg.formulas_per_trial; ++i) {
      const Formula f = trial_formula(rng, cfg, ops, nl);
      const TruthSet tu = truth_set(u.model, f), t1 = truth_set(m1, f), t2 = truth_set(m2, f);
      bool ok = true;
      for (WorldId w = 0; w < m1.n_worlds(); ++w, ++out.checks) ok = ok && t1.contains(w) == tu.contains(u.inj.left(w));
      for (WorldId w = 0; w < m2.n_worlds(); ++w, ++out.checks)
        ok = ok && t2.contains(w) == tu.contains(u.inj.right(w));
      if (!ok)
        out.failures.push_back({{{"left", model_to_json(m1)}, {"right", model_to_json(m2)}},
                                "all",
                                "truth of " + print_formula(f) + " changes under the injections"});
    }
  });
}

// ---------------------------------------------------------------------------
// Principles

namespace {

Sequent seq(const char* text) { return parse_sequent(text); }

}  // namespace

SuiteReport principle_suite(const SearchConfig& search) {
  SuiteReport r;
  r.suite = "principles";
  r.config = {{"exhaustive_max_worlds", search.exhaustive_max_worlds},
              {"exhaustive_max_letters", search.exhaustive_max_letters},
              {"random_trials", search.random_trials},
              {"random_max_worlds", search.random_max_worlds},
              {"seed", search.seed}};

  auto run = [&](const Sequent& s) {
    Verdict v = sequent_valid(s, search);
    r.checks += v.models_checked;
    return v;
  };
  auto countermodel_text = [](const Verdict& v) {
    return "countermodel at world " + std::to_string(v.countermodel->world) + ": " +
           model_to_json(v.countermodel->model).dump();
  };

  // Valid sequents: no countermodel may turn up.
  const std::vector<std::pair<const char*, const char*>> valid = {
      {"Con1", "con p0, p0, smile p0 |-"},
      {"Con2a", "|- con p0, p0"},
      {"Con2b", "|- con p0, smile p0"},
      {"Und1", "|- p0, frown p0, und p0"},
      {"Und2a", "p0, und p0 |-"},
      {"Und2b", "frown p0, und p0 |-"},
      {"DM1.0 (frown)", "|- frown F"},
      {"DM1.1 (frown)", "frown (p0 | p1) |- frown p0 & frown p1"},
      {"DM1.2 (frown)", "frown p0 & frown p1 |- frown (p0 | p1)"},
      {"DM2.0 (smile)", "smile T |-"},
      {"DM2.1 (smile)", "smile p0 | smile p1 |- smile (p0 & p1)"},
      {"DM2.2 (smile)", "smile (p0 & p1) |- smile p0 | smile p1"},
      {"gentle square A", "con p0, p0, smile p0 |-"},
      {"gentle square E", "det p0 |- p0, frown p0"},
      {"gentle square I", "|- p0, frown p0, und p0"},
      {"gentle square O", "p0, smile p0 |- inc p0"},
      {"standard square A1", "|- con p0, p0"},
      {"standard square A2", "|- con p0, smile p0"},
      {"standard square E1", "p0 |- det p0"},
      {"standard square E2", "frown p0 |- det p0"},
      {"standard square I1", "und p0, p0 |-"},
      {"standard square I2", "und p0, frown p0 |-"},
      {"standard square O1", "inc p0 |- p0"},
      {"standard square O2", "inc p0 |- smile p0"},
  };
  for (const auto& [name, text] : valid) {
    const Verdict v = run(seq(text));
    r.assertions.push_back({name, v.valid(), v.valid() ? std::string("valid: ") + text : countermodel_text(v)});
  }

  // Compatibility (▶): a world asserting the left side and denying the right.
  const std::vector<std::pair<const char*, const char*>> compatible = {
      {"LegCa", "p0, con p0 |-"},
      {"LegCb", "smile p0, con p0 |-"},
      {"LegDa", "|- p0, und p0"},
      {"LegDb", "|- frown p0, und p0"},
      {"basic square A", "con p0, p0 |-"},
      {"basic square E", "det p0 |- p0"},
      {"basic square I", "|- p0, und p0"},
      {"basic square O", "p0 |- inc p0"},
      {"negation square A", "con p0, smile p0 |-"},
      {"negation square E", "det p0 |- frown p0"},
      {"negation square I", "|- frown p0, und p0"},
      {"negation square O", "smile p0 |- inc p0"},
      // printed in the standard square with smile; refutable as written
      {"standard square E2 as printed", "smile p0 |- det p0"},
  };
  for (const auto& [name, text] : compatible) {
    const Sequent s = seq(text);
    const Verdict v = run(s);
    bool ok = false;
    std::string detail = "no witness found";
    if (v.countermodel) {
      const auto& cm = *v.countermodel;
      ok = refuting_world(cm.model, s).has_value();
      detail = "witness " + countermodel_text(v);
    }
    r.assertions.push_back({name, ok, detail});
  }

  // Meta principles: both sides of each equivalence get the same verdict.
  SplitMix64 rng(search.seed);
  const std::vector<UnaryOp> ops(kRestorativeOps.begin(), kRestorativeOps.end());
  auto f = [&] { return random_formula(rng, 1, ops, 2); };
  const char* meta_names[] = {"StdC", "StdT", "StdD", "StdB", "ConInc", "UndDet"};
  for (int kind = 0; kind < 6; ++kind) {
    bool ok = true;
    std::string detail = "both sides agree on 4 sampled instances";
    for (int inst = 0; inst < 4 && ok; ++inst) {
      const Formula pi = f(), sigma = f(), a = f(), b = f();
      Sequent lhs{{pi}, {sigma}}, rhs{{pi}, {sigma}};
      switch (kind) {
        case 0:
          lhs.premises.push_back(Formula::conj(a, b));
          rhs.premises.insert(rhs.premises.end(), {a, b});
          break;
        case 1:
          lhs.premises.push_back(Formula::top());
          break;
        case 2:
          lhs.conclusions.push_back(Formula::disj(a, b));
          rhs.conclusions.insert(rhs.conclusions.end(), {a, b});
          break;
        case 3:
          lhs.conclusions.push_back(Formula::bot());
          break;
        case 4:
          lhs.premises.push_back(Formula::unary(UnaryOp::Inc, a));
          rhs.conclusions.push_back(Formula::unary(UnaryOp::Con, a));
          break;
        default:
          lhs.premises.push_back(Formula::unary(UnaryOp::Det, a));
          rhs.conclusions.push_back(Formula::unary(UnaryOp::Und, a));
          break;
      }
      const bool l = run(lhs).valid(), rv = run(rhs).valid();
      if (l != rv) {
        ok = false;
        detail = print_sequent(lhs) + (l ? " valid" : " invalid") + " but " + print_sequent(rhs) +
                 (rv ? " valid" : " invalid");
      }
    }
    r.assertions.push_back({meta_names[kind], ok, detail});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Worked examples

SuiteReport run_lab_examples() {
  SuiteReport r;
  r.suite = "examples";
  auto check = [&](const std::string& name, bool ok, std::string detail = {}) {
    ++r.checks;
    r.assertions.push_back({name, ok, std::move(detail)});
  };
  auto name_of = [](const LabExample& e, WorldId w) { return e.world_names[w]; };

  for (const auto& e : lab_examples()) {
    ++r.trials;
    const auto violations = verify_simulation(e.model, e.lambda, e.claimed, e.mode);
    std::string detail;
    for (const auto& v : violations)
      detail += std::string(condition_tag(v.condition)) + " at (" + name_of(e, v.pair.first) + "," +
                name_of(e, v.pair.second) + ") witness " + std::to_string(v.witness) + "; ";
    check(e.id + ": claimed relation verifies for " + e.lambda.to_string() + " (" + e.mode.to_string() + ")",
          violations.empty(), detail);
    for (const auto& fact : e.facts) {
      const bool got = satisfies(e.model, fact.world, fact.formula);
      check(e.id + ": " + name_of(e, fact.world) + (fact.expected ? " satisfies " : " refutes ") +
                print_formula(fact.formula),
            got == fact.expected);
    }
  }

  {
    auto c = definability_probe(parse_formula("smile p0"), {UnaryOp::Inc});
    check("smile_vsmile: smile p0 has no equivalent over inc", c && verify_certificate(*c),
          c ? c->source : "no certificate");
  }
  {
    auto c = definability_probe(parse_formula("not p0"), {UnaryOp::Smile, UnaryOp::Con});
    check("neg: classical negation has no equivalent over smile,con", c && verify_certificate(*c),
          c ? c->source : "no certificate");
  }
  {
    const auto& e = lab_example("dashed");
    const Relation plain = greatest_simulation(e.model, e.lambda);
    const Relation ablated = greatest_simulation(e.model, e.lambda, SimMode::ablated({SimCondition::Con}));
    const Relation sub = subsumption(e.model, e.lambda);
    check("dashed: plain greatest con-simulation contains (w,v)", plain.contains(0, 1));
    check("dashed: ablated greatest con-simulation excludes (w,v)", !ablated.contains(0, 1));
    check("dashed: subsumption contains (w,v)", sub.contains(0, 1));
  }
  {
    const auto& e = lab_example("undef_new");
    const std::vector<UnaryOp> four = {UnaryOp::Con, UnaryOp::Det, UnaryOp::Inc, UnaryOp::Und};
    bool all_subsets = true;
    for (unsigned mask = 0; mask < 16; ++mask) {
      SimilarityType l;
      for (unsigned i = 0; i < 4; ++i)
        if ((mask >> i) & 1U) l.insert(four[i]);
      all_subsets = all_subsets && verify_simulation(e.model, l, e.claimed, SimMode::symmetric()).empty();
    }
    check("undef_new: claimed relation is a symmetric simulation for every subset of con,det,inc,und", all_subsets);
    const auto fam = definable_closure(e.model, e.lambda.with(UnaryOp::Not));
    const bool agree =
        std::all_of(fam.sets.begin(), fam.sets.end(), [](const TruthSet& t) { return t.contains(0) == t.contains(1); });
    check("undef_new: w and v agree on every definable set with negation", agree);
    auto c = definability_probe(parse_formula("box F"), e.lambda.with(UnaryOp::Not));
    check("undef_new: box F has no equivalent over not,con,det,inc,und", c && verify_certificate(*c),
          c ? c->source : "no certificate");
  }
  return r;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hm",      "adequacy", "st",    "directed",
                                                 "symmetric", "witness", "union", "principles"};
  return names;
}

SuiteReport run_suite(const std::string& name, const TrialConfig& cfg) {
  if (name == "hm") return hm_suite(cfg);
  if (name == "adequacy") return adequacy_suite(cfg);
  if (name == "st") return st_suite(cfg);
  if (name == "directed") return directed_suite(cfg);
  if (name == "symmetric") return symmetric_suite(cfg);
  if (name == "witness") return witness_suite(cfg);
  if (name == "union") return union_suite(cfg);
  if (name == "principles") {
    SearchConfig s;
    s.seed = cfg.seed;
    return principle_suite(s);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace rmk
