#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmk/kripke.hpp"
#include "rmk/relation.hpp"
#include "rmk/semantics.hpp"
#include "rmk/simulation.hpp"
#include "rmk/syntax.hpp"

namespace rmk {

struct ClaimedFact {
  WorldId world;
  Formula formula;
  bool expected;
};

/// A worked example: model, language, a relation claimed to be a simulation
/// in `mode`, and truth claims. World ids follow order of introduction.
struct LabExample {
  std::string id;  // smile_vsmile | neg | dashed | undef_new
  std::vector<std::string> world_names;
  KripkeModel model;
  SimilarityType lambda;
  SimMode mode;
  Relation claimed;
  std::vector<ClaimedFact> facts;
};

const std::vector<LabExample>& lab_examples();
/// Throws std::out_of_range for unknown ids.
const LabExample& lab_example(const std::string& id);

struct TrialConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_worlds = 6;
  std::size_t max_letters = 2;
  double edge_prob = 0.35;
  double letter_prob = 0.5;
  std::size_t formula_depth = 5;
  std::size_t formulas_per_trial = 10;
  std::size_t closure_cap = kDefaultClosureCap;
  std::size_t jobs = 1;

  nlohmann::json to_json() const;
};

struct SuiteFailure {
  nlohmann::json model;
  std::string lambda;
  std::string detail;
};

struct Assertion {
  std::string name;
  bool passed;
  std::string detail;
};

/// Outcome of one suite run. `checks` counts the individual comparisons made.
struct SuiteReport {
  std::string suite;
  nlohmann::json config = nlohmann::json::object();
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t skipped = 0;
  std::vector<SuiteFailure> failures;
  std::vector<Assertion> assertions;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// A verified simulation pair (w, v) with w ⊨ target and v ⊭ target:
/// simulations preserve L_Λ, so target has no equivalent there.
struct UndefinabilityCertificate {
  Formula target;
  SimilarityType lambda;
  SimMode mode;
  KripkeModel model;
  Relation relation;
  WorldPair pair;
  std::string source;
};

/// Re-checks everything from the certificate's own fields.
bool verify_certificate(const UndefinabilityCertificate& c);
nlohmann::json certificate_to_json(const UndefinabilityCertificate& c);
/// Throws ModelError / ParseError on malformed documents.
UndefinabilityCertificate certificate_from_json(const nlohmann::json& doc);

/// Searches the example registry (claimed relations, then greatest
/// simulations) and then cfg.trials random models. Symmetric mode is used
/// when `not` ∈ lambda. Returns nullopt when target ∈ L_Λ or nothing is found.
std::optional<UndefinabilityCertificate> definability_probe(const Formula& target, const SimilarityType& lambda,
                                                            const TrialConfig& cfg = {});

SuiteReport run_lab_examples();

SuiteReport hm_suite(const TrialConfig& cfg);
SuiteReport adequacy_suite(const TrialConfig& cfg);
SuiteReport st_suite(const TrialConfig& cfg);
SuiteReport directed_suite(const TrialConfig& cfg);
SuiteReport symmetric_suite(const TrialConfig& cfg);
SuiteReport witness_suite(const TrialConfig& cfg);
SuiteReport union_suite(const TrialConfig& cfg);
SuiteReport principle_suite(const SearchConfig& search = {});

/// hm | adequacy | st | directed | symmetric | witness | union | principles
/// Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const TrialConfig& cfg);
const std::vector<std::string>& suite_names();

/// Random nonempty subset of the six restorative connectives.
SimilarityType random_restorative_type(SplitMix64& rng);

}  // namespace rmk
