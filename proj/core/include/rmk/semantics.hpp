#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rmk/kripke.hpp"
#include "rmk/relation.hpp"
#include "rmk/syntax.hpp"

namespace rmk {

using TruthSet = WorldSet;

/// Truth-set transformer of a unary connective:
///   smile {w | R[w] ⊄ T}        frown {w | R[w] ∩ T = ∅}
///   con   ~T ∪ {w | R[w] ⊆ T}   det   T ∪ {w | R[w] ∩ T = ∅}
///   inc   T ∩ {w | R[w] ⊄ T}    und   ~T ∩ {w | R[w] ∩ T ≠ ∅}
///   not   ~T   box {w | R[w] ⊆ T}   dia {w | R[w] ∩ T ≠ ∅}
TruthSet operator_transformer(UnaryOp op, const KripkeModel& m, const TruthSet& t);

TruthSet truth_set(const KripkeModel& m, const Formula& f);
bool satisfies(const KripkeModel& m, WorldId w, const Formula& f);

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

/// Every truth set definable over a finite model by formulas of the language,
/// each with one formula that defines it.
struct ClosureFamily {
  std::vector<TruthSet> sets;
  std::vector<Formula> generators;
  SimilarityType lambda;

  bool contains(const TruthSet& t) const;
  std::optional<Formula> generator_of(const TruthSet& t) const;
};

/// Least family containing ∅, W and the listed letters' truth sets, closed under
/// ∪, ∩ and the transformers of `lambda` (complement iff `not` ∈ lambda).
/// Worklist order per new set: unions, then intersections, then unary ops.
/// Throws CapExceeded once the family holds more than `cap` sets.
ClosureFamily definable_closure(const KripkeModel& m, const SimilarityType& lambda,
                                std::size_t cap = kDefaultClosureCap);

/// (w, v) iff every definable set containing w contains v.
Relation subsumption(const KripkeModel& m, const SimilarityType& lambda, std::size_t cap = kDefaultClosureCap);
Relation subsumption(const ClosureFamily& family, std::size_t n_worlds);

/// Π |- Σ, read locally: valid iff no world makes all of Π true and all of Σ false.
struct Sequent {
  std::vector<Formula> premises;
  std::vector<Formula> conclusions;
};

/// "phi1, phi2 |- psi1, psi2"; either side may be empty.
Sequent parse_sequent(std::string_view text);
std::string print_sequent(const Sequent& s);

struct SearchConfig {
  std::size_t exhaustive_max_worlds = 3;
  std::size_t exhaustive_max_letters = 2;
  std::size_t random_trials = 2000;
  std::size_t random_max_worlds = 6;
  double edge_prob = 0.35;
  double letter_prob = 0.5;
  std::uint64_t seed = 1;
};

struct Countermodel {
  KripkeModel model;
  WorldId world;
};

/// `countermodel` empty means no world refuting the sequent was found in the search.
/// A countermodel doubles as the witness that Π ▶ Σ (assert Π, deny Σ) is compatible.
struct Verdict {
  std::optional<Countermodel> countermodel;
  std::size_t models_checked = 0;

  bool valid() const { return !countermodel.has_value(); }
};

/// Exhaustive over all models with up to `exhaustive_max_worlds` worlds on the
/// sequent's letters (at most `exhaustive_max_letters` of them varied, the rest empty),
/// then `random_trials` seeded random models.
Verdict sequent_valid(const Sequent& s, const SearchConfig& search = {});

/// First world of `m` where all premises hold and all conclusions fail.
std::optional<WorldId> refuting_world(const KripkeModel& m, const Sequent& s);

}  // namespace rmk
