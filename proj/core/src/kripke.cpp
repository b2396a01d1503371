#include "rmk/kripke.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rmk/error.hpp"
#include "rmk/rng.hpp"

namespace rmk {

KripkeModel::KripkeModel(std::size_t n_worlds, const std::vector<Edge>& edges,
                         const std::map<LetterIndex, std::vector<WorldId>>& valuation) {
  if (n_worlds == 0) throw ModelError("a model needs at least one world");
  succ_.assign(n_worlds, WorldSet(n_worlds));
  for (auto [w, v] : edges) {
    if (w >= n_worlds || v >= n_worlds)
      throw ModelError("dangling world id in edge [" + std::to_string(w) + "," + std::to_string(v) + "]");
    succ_[w].insert(v);
  }
  for (WorldId w = 0; w < n_worlds; ++w) succ_[w].for_each([&](WorldId v) { edges_.emplace_back(w, v); });
  for (const auto& [k, members] : valuation) {
    WorldSet s(n_worlds);
    for (auto w : members) {
      if (w >= n_worlds)
        throw ModelError("dangling world id " + std::to_string(w) + " in truth set of p" + std::to_string(k));
      s.insert(w);
    }
    valuation_.emplace(k, std::move(s));
  }
}

WorldSet KripkeModel::letter_set(LetterIndex k) const {
  auto it = valuation_.find(k);
  return it == valuation_.end() ? WorldSet(n_worlds()) : it->second;
}

std::vector<LetterIndex> KripkeModel::letter_indices() const {
  std::vector<LetterIndex> out;
  for (const auto& [k, s] : valuation_) out.push_back(k);
  return out;
}

DisjointUnion disjoint_union(const KripkeModel& m1, const KripkeModel& m2) {
  UnionInjections inj{m1.n_worlds(), m2.n_worlds()};
  std::vector<Edge> edges;
  for (auto [w, v] : m1.edges()) edges.emplace_back(inj.left(w), inj.left(v));
  for (auto [w, v] : m2.edges()) edges.emplace_back(inj.right(w), inj.right(v));
  std::map<LetterIndex, std::vector<WorldId>> val;
  for (const auto& [k, s] : m1.valuation()) {
    auto& dst = val[k];
    s.for_each([&](WorldId w) { dst.push_back(inj.left(w)); });
  }
  for (const auto& [k, s] : m2.valuation()) {
    auto& dst = val[k];
    s.for_each([&](WorldId w) { dst.push_back(inj.right(w)); });
  }
  return {KripkeModel(inj.n_left + inj.n_right, edges, val), inj};
}

KripkeModel random_model(std::size_t n_worlds, std::size_t n_letters, double edge_prob, double letter_prob,
                         std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (WorldId w = 0; w < n_worlds; ++w)
    for (WorldId v = 0; v < n_worlds; ++v)
      if (rng.bernoulli(edge_prob)) edges.emplace_back(w, v);
  std::map<LetterIndex, std::vector<WorldId>> val;
  for (LetterIndex k = 0; k < n_letters; ++k) {
    auto& members = val[k];
    for (WorldId w = 0; w < n_worlds; ++w)
      if (rng.bernoulli(letter_prob)) members.push_back(w);
  }
  return KripkeModel(n_worlds, edges, val);
}

namespace {

LetterIndex parse_letter_key(const std::string& key) {
  LetterIndex k = 0;
  if (key.size() < 2 || key[0] != 'p') throw ModelError("valuation key '" + key + "' is not of the form p<N>");
  auto [ptr, ec] = std::from_chars(key.data() + 1, key.data() + key.size(), k);
  if (ec != std::errc{} || ptr != key.data() + key.size())
    throw ModelError("valuation key '" + key + "' is not of the form p<N>");
  return k;
}

WorldId world_id(const nlohmann::json& v, const char* where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ModelError(std::string("non-negative integer world id expected in ") + where);
  return v.get<WorldId>();
}

}  // namespace

KripkeModel load_model(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ModelError("model document must be a JSON object");
  if (!doc.contains("worlds") || !doc["worlds"].is_number_integer())
    throw ModelError("missing integer field 'worlds'");
  const auto n = doc["worlds"].get<std::int64_t>();
  if (n < 1) throw ModelError("'worlds' must be at least 1");

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ModelError("'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ModelError("each edge must be a pair [w, v]");
      edges.emplace_back(world_id(e[0], "edges"), world_id(e[1], "edges"));
    }
  }

  std::map<LetterIndex, std::vector<WorldId>> val;
  if (doc.contains("valuation")) {
    if (!doc["valuation"].is_object()) throw ModelError("'valuation' must be an object");
    for (const auto& [key, members] : doc["valuation"].items()) {
      if (!members.is_array()) throw ModelError("truth set of '" + key + "' must be an array");
      auto& dst = val[parse_letter_key(key)];
      for (const auto& w : members) dst.push_back(world_id(w, "valuation"));
    }
  }
  return KripkeModel(static_cast<std::size_t>(n), edges, val);
}

nlohmann::json model_to_json(const KripkeModel& m) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [w, v] : m.edges()) edges.push_back({w, v});
  nlohmann::json val = nlohmann::json::object();
  for (const auto& [k, s] : m.valuation()) val["p" + std::to_string(k)] = s.members();
  return {{"worlds", m.n_worlds()}, {"edges", edges}, {"valuation", val}};
}

std::string model_to_dot(const KripkeModel& m) {
  std::ostringstream os;
  os << "digraph kripke {\n";
  for (WorldId w = 0; w < m.n_worlds(); ++w) {
    os << "  w" << w << " [label=\"" << w;
    for (const auto& [k, s] : m.valuation())
      if (s.contains(w)) os << "\\np" << k;
    os << "\"];\n";
  }
  for (auto [w, v] : m.edges()) os << "  w" << w << " -> w" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace rmk
