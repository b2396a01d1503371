#include "rmk/relation.hpp"

#include "rmk/error.hpp"

namespace rmk {

Relation::Relation(std::size_t n_worlds, const std::vector<WorldPair>& pairs) : Relation(n_worlds) {
  for (auto [a, b] : pairs) {
    if (a >= n_worlds || b >= n_worlds)
      throw ModelError("relation pair [" + std::to_string(a) + "," + std::to_string(b) + "] out of range");
    insert(a, b);
  }
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (WorldId w = 0; w < n; ++w) r.insert(w, w);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r;
  r.rows_.assign(n, WorldSet::full(n));
  return r;
}

std::size_t Relation::size() const {
  std::size_t c = 0;
  for (const auto& row : rows_) c += row.count();
  return c;
}

std::vector<WorldPair> Relation::pairs() const {
  std::vector<WorldPair> out;
  for (WorldId a = 0; a < rows_.size(); ++a) rows_[a].for_each([&](WorldId b) { out.emplace_back(a, b); });
  return out;
}

Relation Relation::converse() const {
  Relation r(n_worlds());
  for (WorldId a = 0; a < rows_.size(); ++a) rows_[a].for_each([&](WorldId b) { r.insert(b, a); });
  return r;
}

bool Relation::is_symmetric() const { return *this == converse(); }

bool Relation::subset_of(const Relation& o) const {
  for (std::size_t a = 0; a < rows_.size(); ++a)
    if (!rows_[a].subset_of(o.rows_[a])) return false;
  return true;
}

Relation& Relation::operator|=(const Relation& o) {
  for (std::size_t a = 0; a < rows_.size(); ++a) rows_[a] |= o.rows_[a];
  return *this;
}

nlohmann::json relation_to_json(const Relation& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : r.pairs()) pairs.push_back({a, b});
  return {{"pairs", pairs}};
}

Relation relation_from_json(const nlohmann::json& doc, std::size_t n_worlds) {
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array())
    throw ModelError("relation document must be {\"pairs\": [[w, v], ...]}");
  std::vector<WorldPair> pairs;
  for (const auto& p : doc["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      throw ModelError("each relation pair must be [w, v] with non-negative ids");
    pairs.emplace_back(p[0].get<WorldId>(), p[1].get<WorldId>());
  }
  return Relation(n_worlds, pairs);
}

}  // namespace rmk
