#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmk/syntax.hpp"
#include "rmk/world_set.hpp"

namespace rmk {

using Edge = std::pair<WorldId, WorldId>;

/// Finite Kripke model ⟨W, R, {P_k}⟩ with W = {0, ..., n-1}. Immutable after construction.
class KripkeModel {
 public:
  /// Throws ModelError on n_worlds == 0 or any id >= n_worlds. Duplicate edges collapse.
  KripkeModel(std::size_t n_worlds, const std::vector<Edge>& edges,
              const std::map<LetterIndex, std::vector<WorldId>>& valuation);

  std::size_t n_worlds() const { return succ_.size(); }
  const WorldSet& successors(WorldId w) const { return succ_[w]; }
  bool has_edge(WorldId w, WorldId v) const { return succ_[w].contains(v); }
  /// Sorted, duplicate-free.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Truth set of p_k; empty when the letter is not listed.
  WorldSet letter_set(LetterIndex k) const;
  /// Letters listed in the valuation (possibly with empty truth sets).
  const std::map<LetterIndex, WorldSet>& valuation() const { return valuation_; }
  std::vector<LetterIndex> letter_indices() const;

  WorldSet all_worlds() const { return WorldSet::full(n_worlds()); }
  WorldSet no_worlds() const { return WorldSet(n_worlds()); }

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;

 private:
  std::vector<WorldSet> succ_;
  std::vector<Edge> edges_;
  std::map<LetterIndex, WorldSet> valuation_;
};

/// The inclusion maps of a disjoint union: left block first.
struct UnionInjections {
  std::size_t n_left = 0;
  std::size_t n_right = 0;

  WorldId left(WorldId w) const { return w; }
  WorldId right(WorldId w) const { return static_cast<WorldId>(n_left + w); }
  bool in_left(WorldId u) const { return u < n_left; }
};

struct DisjointUnion {
  KripkeModel model;
  UnionInjections inj;
};

DisjointUnion disjoint_union(const KripkeModel& m1, const KripkeModel& m2);

/// Seeded random model. Draw order: edges row-major (w, v), then for each letter
/// k in 0..n_letters-1 the worlds in order. Letters are always listed.
KripkeModel random_model(std::size_t n_worlds, std::size_t n_letters, double edge_prob, double letter_prob,
                         std::uint64_t seed);

/// {"worlds": n, "edges": [[w,v],...], "valuation": {"p0": [...], ...}}
KripkeModel load_model(const nlohmann::json& doc);
nlohmann::json model_to_json(const KripkeModel& m);

/// Graphviz rendering; letters listed inside each node.
std::string model_to_dot(const KripkeModel& m);

}  // namespace rmk
