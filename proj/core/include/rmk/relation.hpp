#pragma once

#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmk/world_set.hpp"

namespace rmk {

using WorldPair = std::pair<WorldId, WorldId>;

/// Binary relation on the worlds of one model, stored as a dense bit matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n_worlds) : rows_(n_worlds, WorldSet(n_worlds)) {}
  Relation(std::size_t n_worlds, const std::vector<WorldPair>& pairs);

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);

  std::size_t n_worlds() const { return rows_.size(); }
  bool contains(WorldId a, WorldId b) const { return rows_[a].contains(b); }
  void insert(WorldId a, WorldId b) { rows_[a].insert(b); }
  void erase(WorldId a, WorldId b) { rows_[a].erase(b); }
  /// {b | (a, b) ∈ S}
  const WorldSet& image(WorldId a) const { return rows_[a]; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  /// Lexicographically sorted.
  std::vector<WorldPair> pairs() const;

  Relation converse() const;
  bool is_symmetric() const;
  bool subset_of(const Relation& o) const;

  Relation& operator|=(const Relation& o);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<WorldSet> rows_;
};

/// {"pairs": [[w, v], ...]} with pairs sorted.
nlohmann::json relation_to_json(const Relation& r);
/// Throws ModelError on ids >= n_worlds.
Relation relation_from_json(const nlohmann::json& doc, std::size_t n_worlds);

}  // namespace rmk
