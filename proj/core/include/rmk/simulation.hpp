#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmk/kripke.hpp"
#include "rmk/relation.hpp"
#include "rmk/syntax.hpp"

namespace rmk {

/// The simulation conditions, one per restorative connective plus letter
/// preservation. `Symmetry` is only reported in symmetric mode.
enum class SimCondition : std::uint8_t { Letter, Smile, Frown, Con, Det, Inc, Und, Symmetry };

std::string_view condition_tag(SimCondition c);  // "Sim_k", "Sim_smile", ..., "Sym"
std::optional<SimCondition> condition_from_tag(std::string_view tag);
SimCondition condition_of(UnaryOp op);  // restorative ops only

struct Violation {
  WorldPair pair;
  SimCondition condition;
  /// Offending successor world, or the letter index for Sim_k, or the
  /// converse pair's first world for Sym.
  std::uint32_t witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using ViolationReport = std::vector<Violation>;

/// plain, symmetric, or ablated: the latter drops the dashed disjunct
/// ((v,t) for con, (t,v) for det, (w,s) for inc, (s,w) for und) of the listed conditions.
struct SimMode {
  enum class Variant : std::uint8_t { Plain, Symmetric, Ablated };

  Variant variant = Variant::Plain;
  std::set<SimCondition> dropped;

  static SimMode plain() { return {}; }
  static SimMode symmetric() { return {Variant::Symmetric, {}}; }
  static SimMode ablated(std::set<SimCondition> conds) { return {Variant::Ablated, std::move(conds)}; }

  bool drops(SimCondition c) const { return variant == Variant::Ablated && dropped.contains(c); }
  std::string to_string() const;
};

/// "plain" | "symmetric" | "ablated:Sim_con,Sim_det"
SimMode parse_sim_mode(std::string_view text);

/// Violations of the (mode-adjusted) conditions of `lambda` at the pair (w, v)
/// against relation `s`. `not` in lambda imposes no per-pair condition.
ViolationReport check_pair(const KripkeModel& m, const SimilarityType& lambda, const Relation& s, WorldPair wv,
                           const SimMode& mode = {});

/// Empty iff `s` is a (mode-adjusted) lambda-simulation. Symmetric mode also
/// reports every pair whose converse is missing.
ViolationReport verify_simulation(const KripkeModel& m, const SimilarityType& lambda, const Relation& s,
                                  const SimMode& mode = {});

/// Greatest fixpoint run with the deletion history kept for witness replay.
struct SimulationTrace {
  Relation result;
  /// round in which (a, b) was deleted, 1-based; 0 when it survived. Index a * n + b.
  std::vector<std::uint32_t> deleted_round;
  /// First violation found for each deleted pair, same indexing.
  std::vector<std::optional<Violation>> reason;
  std::uint32_t rounds = 0;
};

/// Starts from W × W (symmetric: pairs agreeing on every letter) and deletes all
/// violating pairs each round until nothing changes. Symmetric mode deletes
/// (w, v) and (v, w) together. Throws std::invalid_argument when lambda contains
/// box/dia, or contains not outside symmetric mode.
SimulationTrace greatest_simulation_trace(const KripkeModel& m, const SimilarityType& lambda,
                                          const SimMode& mode = {});
Relation greatest_simulation(const KripkeModel& m, const SimilarityType& lambda, const SimMode& mode = {});

/// Builds distinguishing formulas by replaying a plain-mode deletion history.
class WitnessBuilder {
 public:
  WitnessBuilder(const KripkeModel& m, const SimilarityType& lambda);

  const SimulationTrace& trace() const { return trace_; }

  /// nullopt iff (w, v) is in the greatest simulation; otherwise a formula of the
  /// language true at w and false at v. Throws std::logic_error if the built
  /// formula fails its model-checking re-check.
  std::optional<Formula> witness(WorldId w, WorldId v);

 private:
  Formula build(WorldId a, WorldId b);
  bool alive_before(WorldId a, WorldId b, std::uint32_t round) const;

  const KripkeModel& model_;
  SimilarityType lambda_;
  SimulationTrace trace_;
  std::vector<std::optional<Formula>> memo_;
};

std::optional<Formula> witness_formula(const KripkeModel& m, const SimilarityType& lambda, WorldId w, WorldId v);

/// Greatest Kripke bisimulation: letter agreement plus forth and back.
Relation kripke_bisimulation(const KripkeModel& m);

// ---------------------------------------------------------------------------
// Relations between two models

/// Relation from the worlds of one model to those of another.
class CrossRelation {
 public:
  CrossRelation() = default;
  CrossRelation(std::size_t n_from, std::size_t n_to) : n_to_(n_to), rows_(n_from, WorldSet(n_to)) {}

  static CrossRelation full(std::size_t n_from, std::size_t n_to);

  std::size_t n_from() const { return rows_.size(); }
  std::size_t n_to() const { return n_to_; }
  bool contains(WorldId a, WorldId b) const { return rows_[a].contains(b); }
  void insert(WorldId a, WorldId b) { rows_[a].insert(b); }
  void erase(WorldId a, WorldId b) { rows_[a].erase(b); }
  std::size_t size() const;
  std::vector<WorldPair> pairs() const;

  friend bool operator==(const CrossRelation&, const CrossRelation&) = default;

 private:
  std::size_t n_to_ = 0;
  std::vector<WorldSet> rows_;
};

/// Forward F ⊆ W1 × W2 and backward B ⊆ W2 × W1 (only meaningful for lambda ⊆ {smile, frown}).
struct DirectedSimPair {
  CrossRelation forward;
  CrossRelation backward;

  friend bool operator==(const DirectedSimPair&, const DirectedSimPair&) = default;
};

enum class DirectedCondition : std::uint8_t { Fk, Bk, FSmile, BSmile, FFrown, BFrown };
std::string_view directed_condition_tag(DirectedCondition c);  // "F_k", "B_smile", ...

struct DirectedViolation {
  /// Pair in its own relation's coordinates: (w1, w2) for F conditions, (w2, w1) for B.
  WorldPair pair;
  DirectedCondition condition;
  std::uint32_t witness;
};

/// F := S ∩ (W1 × W2), B := S ∩ (W2 × W1), in each model's own indices.
DirectedSimPair to_directed(const Relation& s, const UnionInjections& inj);
/// F ∪ B embedded in the union.
Relation from_directed(const DirectedSimPair& d, const UnionInjections& inj);

/// Throws std::invalid_argument unless lambda ⊆ {smile, frown}.
std::vector<DirectedViolation> verify_directed(const KripkeModel& m1, const KripkeModel& m2,
                                               const SimilarityType& lambda, const DirectedSimPair& d);
DirectedSimPair greatest_directed_simulation(const KripkeModel& m1, const KripkeModel& m2,
                                             const SimilarityType& lambda);

/// S_ij := S ∩ (W_i × W_j) in each model's own indices.
struct ConcreteSimQuad {
  CrossRelation s11, s12, s21, s22;

  friend bool operator==(const ConcreteSimQuad&, const ConcreteSimQuad&) = default;
};

ConcreteSimQuad to_concrete(const Relation& s, const UnionInjections& inj);
Relation from_concrete(const ConcreteSimQuad& q, const UnionInjections& inj);

/// Checks the retyped conditions block by block without building the union.
/// Violations are reported in union coordinates.
ViolationReport verify_concrete(const KripkeModel& m1, const KripkeModel& m2, const SimilarityType& lambda,
                                const ConcreteSimQuad& q, const SimMode& mode = {});

nlohmann::json report_to_json(const ViolationReport& r);

}  // namespace rmk
