#include "rmk/simulation.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "rmk/error.hpp"
#include "rmk/semantics.hpp"
#include "sim_conditions.hpp"

namespace rmk {

namespace {

constexpr std::array<std::string_view, 8> kTags = {"Sim_k",   "Sim_smile", "Sim_frown", "Sim_con",
                                                   "Sim_det", "Sim_inc",   "Sim_und",   "Sym"};

bool has_letter(const KripkeModel& m, LetterIndex k, WorldId w) {
  const auto& val = m.valuation();
  auto it = val.find(k);
  return it != val.end() && it->second.contains(w);
}

std::vector<LetterIndex> merged_letters(const KripkeModel& a, const KripkeModel& b) {
  auto ls = a.letter_indices();
  for (auto k : b.letter_indices()) ls.push_back(k);
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  return ls;
}

struct ModelView {
  using World = WorldId;
  const KripkeModel& m;
  const Relation& s;

  template <class F>
  void for_each_succ(World x, F&& f) const {
    m.successors(x).for_each(f);
  }
  bool related(World a, World b) const { return s.contains(a, b); }
  template <class F>
  void letter_failures(World w, World v, F&& f) const {
    for (const auto& [k, set] : m.valuation())
      if (set.contains(w) && !set.contains(v)) f(k);
  }
  static std::uint32_t id(World x) { return x; }
};

void require_usable(const SimilarityType& lambda, const SimMode& mode) {
  if (lambda.contains(UnaryOp::Box) || lambda.contains(UnaryOp::Dia))
    throw std::invalid_argument("simulations are defined for restorative connectives (and not), got " +
                                lambda.to_string());
  if (lambda.contains(UnaryOp::Not) && mode.variant != SimMode::Variant::Symmetric)
    throw std::invalid_argument("'not' in the similarity type needs symmetric mode");
}

std::optional<Violation> first_violation(const KripkeModel& m, const SimilarityType& lambda, const Relation& s,
                                         WorldId w, WorldId v, const SimMode& mode) {
  std::optional<Violation> out;
  detail::check_conditions(ModelView{m, s}, lambda, mode, w, v, [&](SimCondition c, std::uint32_t wit) {
    out = Violation{{w, v}, c, wit};
    return true;
  });
  return out;
}

}  // namespace

std::string_view condition_tag(SimCondition c) { return kTags[static_cast<std::size_t>(c)]; }

std::optional<SimCondition> condition_from_tag(std::string_view tag) {
  for (std::size_t i = 0; i < kTags.size(); ++i)
    if (kTags[i] == tag) return static_cast<SimCondition>(i);
  return std::nullopt;
}

SimCondition condition_of(UnaryOp op) {
  switch (op) {
    case UnaryOp::Smile:
      return SimCondition::Smile;
    case UnaryOp::Frown:
      return SimCondition::Frown;
    case UnaryOp::Con:
      return SimCondition::Con;
    case UnaryOp::Det:
      return SimCondition::Det;
    case UnaryOp::Inc:
      return SimCondition::Inc;
    case UnaryOp::Und:
      return SimCondition::Und;
    default:
      throw std::invalid_argument("no simulation condition for " + std::string(op_name(op)));
  }
}

std::string SimMode::to_string() const {
  switch (variant) {
    case Variant::Plain:
      return "plain";
    case Variant::Symmetric:
      return "symmetric";
    case Variant::Ablated:
      break;
  }
  std::string out = "ablated:";
  bool first = true;
  for (auto c : dropped) {
    out += (first ? "" : ",") + std::string(condition_tag(c));
    first = false;
  }
  return out;
}

SimMode parse_sim_mode(std::string_view text) {
  if (text == "plain") return SimMode::plain();
  if (text == "symmetric") return SimMode::symmetric();
  constexpr std::string_view prefix = "ablated:";
  if (!text.starts_with(prefix)) throw ParseError(0, {"plain", "symmetric", "ablated:<tags>"}, "unknown mode");
  std::set<SimCondition> dropped;
  std::size_t pos = prefix.size();
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto tag = text.substr(pos, comma - pos);
    const auto c = condition_from_tag(tag);
    if (!c || (*c != SimCondition::Con && *c != SimCondition::Det && *c != SimCondition::Inc &&
               *c != SimCondition::Und))
      throw ParseError(pos, {"Sim_con", "Sim_det", "Sim_inc", "Sim_und"},
                       "only conditions with a dashed clause can be ablated, got '" + std::string(tag) + "'");
    dropped.insert(*c);
    pos = comma + 1;
  }
  return SimMode::ablated(std::move(dropped));
}

ViolationReport check_pair(const KripkeModel& m, const SimilarityType& lambda, const Relation& s, WorldPair wv,
                           const SimMode& mode) {
  ViolationReport out;
  detail::check_conditions(ModelView{m, s}, lambda, mode, wv.first, wv.second,
                           [&](SimCondition c, std::uint32_t wit) {
                             out.push_back({wv, c, wit});
                             return false;
                           });
  return out;
}

ViolationReport verify_simulation(const KripkeModel& m, const SimilarityType& lambda, const Relation& s,
                                  const SimMode& mode) {
  ViolationReport out;
  for (auto p : s.pairs()) {
    auto r = check_pair(m, lambda, s, p, mode);
    out.insert(out.end(), r.begin(), r.end());
    if (mode.variant == SimMode::Variant::Symmetric && !s.contains(p.second, p.first))
      out.push_back({p, SimCondition::Symmetry, p.second});
  }
  return out;
}

SimulationTrace greatest_simulation_trace(const KripkeModel& m, const SimilarityType& lambda, const SimMode& mode) {
  require_usable(lambda, mode);
  const auto n = m.n_worlds();
  const bool symmetric = mode.variant == SimMode::Variant::Symmetric;
  SimulationTrace tr;
  tr.result = Relation::full(n);
  tr.deleted_round.assign(n * n, 0);
  tr.reason.assign(n * n, std::nullopt);

  // Symmetric seed: pairs agreeing on every letter. Counted as round 1.
  if (symmetric) {
    bool any = false;
    for (WorldId w = 0; w < n; ++w)
      for (WorldId v = 0; v < n; ++v)
        for (const auto& [k, set] : m.valuation()) {
          if (set.contains(w) == set.contains(v)) continue;
          tr.result.erase(w, v);
          tr.deleted_round[w * n + v] = 1;
          tr.reason[w * n + v] = Violation{{w, v}, SimCondition::Letter, k};
          any = true;
          break;
        }
    if (any) tr.rounds = 1;
  }

  const SimilarityType checked = lambda.without(UnaryOp::Not);
  while (true) {
    std::vector<Violation> doomed;
    for (WorldId w = 0; w < n; ++w) {
      tr.result.image(w).for_each([&](WorldId v) {
        if (symmetric && v < w) return;
        auto fail = first_violation(m, checked, tr.result, w, v, mode);
        if (symmetric) {
          auto mirror = first_violation(m, checked, tr.result, v, w, mode);
          if (!fail && !mirror) return;
          doomed.push_back(fail ? *fail : Violation{{w, v}, SimCondition::Symmetry, v});
          if (v != w) doomed.push_back(mirror ? *mirror : Violation{{v, w}, SimCondition::Symmetry, w});
        } else if (fail) {
          doomed.push_back(*fail);
        }
      });
    }
    if (doomed.empty()) break;
    ++tr.rounds;
    for (const auto& d : doomed) {
      const auto [a, b] = d.pair;
      tr.result.erase(a, b);
      tr.deleted_round[a * n + b] = tr.rounds;
      tr.reason[a * n + b] = d;
    }
  }
  return tr;
}

Relation greatest_simulation(const KripkeModel& m, const SimilarityType& lambda, const SimMode& mode) {
  return greatest_simulation_trace(m, lambda, mode).result;
}

// ---------------------------------------------------------------------------
// Witnesses

WitnessBuilder::WitnessBuilder(const KripkeModel& m, const SimilarityType& lambda)
    : model_(m), lambda_(lambda), trace_(greatest_simulation_trace(m, lambda)) {
  if (!lambda.is_restorative()) throw std::invalid_argument("witnesses need a restorative similarity type");
  memo_.assign(m.n_worlds() * m.n_worlds(), std::nullopt);
}

bool WitnessBuilder::alive_before(WorldId a, WorldId b, std::uint32_t round) const {
  const auto r = trace_.deleted_round[a * model_.n_worlds() + b];
  return r == 0 || r >= round;
}

std::optional<Formula> WitnessBuilder::witness(WorldId w, WorldId v) {
  if (trace_.result.contains(w, v)) return std::nullopt;
  Formula f = build(w, v);
  if (!satisfies(model_, w, f) || satisfies(model_, v, f) || !in_language(f, lambda_))
    throw std::logic_error("witness for (" + std::to_string(w) + "," + std::to_string(v) +
                           ") failed its re-check: " + print_formula(f));
  return f;
}

// (a, b) was deleted at round r for the recorded condition, checked against
// S_{r-1}; every sub-pair used below is absent from S_{r-1}, so it was deleted
// strictly earlier and the recursion terminates.
Formula WitnessBuilder::build(WorldId a, WorldId b) {
  const auto n = model_.n_worlds();
  auto& slot = memo_[a * n + b];
  if (slot) return *slot;

  const auto round = trace_.deleted_round[a * n + b];
  const auto& why = trace_.reason[a * n + b];
  if (round == 0 || !why) throw std::logic_error("witness requested for a surviving pair");
  const WorldId x = why->witness;
  const auto& ra = model_.successors(a);
  const auto& rb = model_.successors(b);

  auto disj_over = [&](const WorldSet& ws, auto pick) {
    std::vector<Formula> parts;
    ws.for_each([&](WorldId y) { parts.push_back(pick(y)); });
    return parts;
  };

  Formula f = Formula::top();
  switch (why->condition) {
    case SimCondition::Letter:
      f = Formula::letter(x);
      break;
    case SimCondition::Smile:
      // s = x ∈ R[a]; each t ∈ R[b] has (t, s) ∉ S
      f = Formula::unary(UnaryOp::Smile, big_or(disj_over(rb, [&](WorldId t) { return build(t, x); })));
      break;
    case SimCondition::Frown:
      // t = x ∈ R[b]; (t, s) ∉ S for every s ∈ R[a]
      f = Formula::unary(UnaryOp::Frown, big_and(disj_over(ra, [&](WorldId s) { return build(x, s); })));
      break;
    case SimCondition::Con: {
      const Formula chi = build(b, x);
      if (!alive_before(b, a, round))
        f = Formula::unary(UnaryOp::Con, Formula::conj(chi, build(b, a)));
      else
        f = Formula::unary(UnaryOp::Con,
                           Formula::disj(big_or(disj_over(ra, [&](WorldId s) { return build(s, x); })), chi));
      break;
    }
    case SimCondition::Det: {
      const Formula psi = big_and(disj_over(ra, [&](WorldId s) { return build(x, s); }));
      f = Formula::unary(UnaryOp::Det, Formula::conj(psi, build(x, b)));
      break;
    }
    case SimCondition::Inc: {
      const Formula psi = big_or(disj_over(rb, [&](WorldId t) { return build(t, x); }));
      f = Formula::unary(UnaryOp::Inc, Formula::disj(psi, build(a, x)));
      break;
    }
    case SimCondition::Und: {
      const Formula chi = build(x, a);
      if (!alive_before(b, a, round))
        f = Formula::unary(UnaryOp::Und, Formula::disj(chi, build(b, a)));
      else
        f = Formula::unary(UnaryOp::Und,
                           Formula::conj(big_and(disj_over(rb, [&](WorldId t) { return build(x, t); })), chi));
      break;
    }
    case SimCondition::Symmetry:
      throw std::logic_error("symmetry deletions do not occur in plain mode");
  }
  slot = f;
  return f;
}

std::optional<Formula> witness_formula(const KripkeModel& m, const SimilarityType& lambda, WorldId w, WorldId v) {
  WitnessBuilder b(m, lambda);
  return b.witness(w, v);
}

Relation kripke_bisimulation(const KripkeModel& m) {
  const auto n = m.n_worlds();
  Relation z = Relation::full(n);
  for (WorldId w = 0; w < n; ++w)
    for (WorldId v = 0; v < n; ++v)
      for (const auto& [k, set] : m.valuation())
        if (set.contains(w) != set.contains(v)) z.erase(w, v);

  auto covered = [&](const WorldSet& from, const WorldSet& to, bool forward) {
    bool ok = true;
    from.for_each([&](WorldId s) {
      if (!ok) return;
      bool hit = false;
      to.for_each([&](WorldId t) { hit = hit || (forward ? z.contains(s, t) : z.contains(t, s)); });
      ok = hit;
    });
    return ok;
  };

  while (true) {
    std::vector<WorldPair> doomed;
    for (auto [w, v] : z.pairs()) {
      if (!covered(m.successors(w), m.successors(v), true) || !covered(m.successors(v), m.successors(w), false))
        doomed.emplace_back(w, v);
    }
    if (doomed.empty()) return z;
    for (auto [w, v] : doomed) z.erase(w, v);
  }
}

// ---------------------------------------------------------------------------
// Cross-model relations

CrossRelation CrossRelation::full(std::size_t n_from, std::size_t n_to) {
  CrossRelation r(n_from, n_to);
  for (auto& row : r.rows_) row = WorldSet::full(n_to);
  return r;
}

std::size_t CrossRelation::size() const {
  std::size_t c = 0;
  for (const auto& row : rows_) c += row.count();
  return c;
}

std::vector<WorldPair> CrossRelation::pairs() const {
  std::vector<WorldPair> out;
  for (WorldId a = 0; a < rows_.size(); ++a) rows_[a].for_each([&](WorldId b) { out.emplace_back(a, b); });
  return out;
}

std::string_view directed_condition_tag(DirectedCondition c) {
  constexpr std::array<std::string_view, 6> tags = {"F_k", "B_k", "F_smile", "B_smile", "F_frown", "B_frown"};
  return tags[static_cast<std::size_t>(c)];
}

DirectedSimPair to_directed(const Relation& s, const UnionInjections& inj) {
  DirectedSimPair d{CrossRelation(inj.n_left, inj.n_right), CrossRelation(inj.n_right, inj.n_left)};
  for (auto [a, b] : s.pairs()) {
    if (inj.in_left(a) && !inj.in_left(b)) d.forward.insert(a, static_cast<WorldId>(b - inj.n_left));
    if (!inj.in_left(a) && inj.in_left(b)) d.backward.insert(static_cast<WorldId>(a - inj.n_left), b);
  }
  return d;
}

Relation from_directed(const DirectedSimPair& d, const UnionInjections& inj) {
  Relation s(inj.n_left + inj.n_right);
  for (auto [a, b] : d.forward.pairs()) s.insert(inj.left(a), inj.right(b));
  for (auto [a, b] : d.backward.pairs()) s.insert(inj.right(a), inj.left(b));
  return s;
}

namespace {

void require_directed(const SimilarityType& lambda) {
  if (!lambda.subset_of(SimilarityType{UnaryOp::Smile, UnaryOp::Frown}))
    throw std::invalid_argument("directed simulations need lambda within {smile,frown}, got " + lambda.to_string());
}

// Conditions on own(wa, wb) where own relates model a to model b and other
// relates b back to a. Works for F (a = 1) and B (a = 2) alike.
template <class Sink>
void directed_failures(const KripkeModel& ma, const KripkeModel& mb, const std::vector<LetterIndex>& ls,
                       const SimilarityType& lambda, const CrossRelation& other, WorldId wa, WorldId wb,
                       bool backward, Sink&& sink) {
  const auto tag = [&](DirectedCondition f, DirectedCondition b) { return backward ? b : f; };
  for (auto k : ls)
    if (has_letter(ma, k, wa) && !has_letter(mb, k, wb)) sink(tag(DirectedCondition::Fk, DirectedCondition::Bk), k);
  if (lambda.contains(UnaryOp::Smile)) {
    ma.successors(wa).for_each([&](WorldId va) {
      bool hit = false;
      mb.successors(wb).for_each([&](WorldId tb) { hit = hit || other.contains(tb, va); });
      if (!hit) sink(tag(DirectedCondition::FSmile, DirectedCondition::BSmile), va);
    });
  }
  if (lambda.contains(UnaryOp::Frown)) {
    mb.successors(wb).for_each([&](WorldId vb) {
      bool hit = false;
      ma.successors(wa).for_each([&](WorldId ta) { hit = hit || other.contains(vb, ta); });
      if (!hit) sink(tag(DirectedCondition::FFrown, DirectedCondition::BFrown), vb);
    });
  }
}

}  // namespace

std::vector<DirectedViolation> verify_directed(const KripkeModel& m1, const KripkeModel& m2,
                                               const SimilarityType& lambda, const DirectedSimPair& d) {
  require_directed(lambda);
  const auto ls = merged_letters(m1, m2);
  std::vector<DirectedViolation> out;
  for (auto p : d.forward.pairs())
    directed_failures(m1, m2, ls, lambda, d.backward, p.first, p.second, false,
                      [&](DirectedCondition c, std::uint32_t wit) { out.push_back({p, c, wit}); });
  for (auto p : d.backward.pairs())
    directed_failures(m2, m1, ls, lambda, d.forward, p.first, p.second, true,
                      [&](DirectedCondition c, std::uint32_t wit) { out.push_back({p, c, wit}); });
  return out;
}

DirectedSimPair greatest_directed_simulation(const KripkeModel& m1, const KripkeModel& m2,
                                             const SimilarityType& lambda) {
  require_directed(lambda);
  const auto ls = merged_letters(m1, m2);
  DirectedSimPair d{CrossRelation::full(m1.n_worlds(), m2.n_worlds()),
                    CrossRelation::full(m2.n_worlds(), m1.n_worlds())};
  while (true) {
    std::vector<WorldPair> doomed_f, doomed_b;
    for (auto p : d.forward.pairs()) {
      bool bad = false;
      directed_failures(m1, m2, ls, lambda, d.backward, p.first, p.second, false,
                        [&](DirectedCondition, std::uint32_t) { bad = true; });
      if (bad) doomed_f.push_back(p);
    }
    for (auto p : d.backward.pairs()) {
      bool bad = false;
      directed_failures(m2, m1, ls, lambda, d.forward, p.first, p.second, true,
                        [&](DirectedCondition, std::uint32_t) { bad = true; });
      if (bad) doomed_b.push_back(p);
    }
    if (doomed_f.empty() && doomed_b.empty()) return d;
    for (auto [a, b] : doomed_f) d.forward.erase(a, b);
    for (auto [a, b] : doomed_b) d.backward.erase(a, b);
  }
}

// ---------------------------------------------------------------------------
// Concrete quads

ConcreteSimQuad to_concrete(const Relation& s, const UnionInjections& inj) {
  const auto n1 = inj.n_left, n2 = inj.n_right;
  ConcreteSimQuad q{CrossRelation(n1, n1), CrossRelation(n1, n2), CrossRelation(n2, n1), CrossRelation(n2, n2)};
  for (auto [a, b] : s.pairs()) {
    const bool la = inj.in_left(a), lb = inj.in_left(b);
    const auto ia = static_cast<WorldId>(la ? a : a - n1);
    const auto ib = static_cast<WorldId>(lb ? b : b - n1);
    (la ? (lb ? q.s11 : q.s12) : (lb ? q.s21 : q.s22)).insert(ia, ib);
  }
  return q;
}

Relation from_concrete(const ConcreteSimQuad& q, const UnionInjections& inj) {
  Relation s(inj.n_left + inj.n_right);
  for (auto [a, b] : q.s11.pairs()) s.insert(inj.left(a), inj.left(b));
  for (auto [a, b] : q.s12.pairs()) s.insert(inj.left(a), inj.right(b));
  for (auto [a, b] : q.s21.pairs()) s.insert(inj.right(a), inj.left(b));
  for (auto [a, b] : q.s22.pairs()) s.insert(inj.right(a), inj.right(b));
  return s;
}

namespace {

struct TypedWorld {
  std::uint8_t side;  // 0 for the first model, 1 for the second
  WorldId idx;
};

struct QuadView {
  using World = TypedWorld;
  const KripkeModel& m1;
  const KripkeModel& m2;
  const ConcreteSimQuad& q;
  const std::vector<LetterIndex>& ls;

  const KripkeModel& model(std::uint8_t side) const { return side == 0 ? m1 : m2; }
  const CrossRelation& block(std::uint8_t i, std::uint8_t j) const {
    return i == 0 ? (j == 0 ? q.s11 : q.s12) : (j == 0 ? q.s21 : q.s22);
  }

  template <class F>
  void for_each_succ(World x, F&& f) const {
    model(x.side).successors(x.idx).for_each([&](WorldId y) { f(World{x.side, y}); });
  }
  bool related(World a, World b) const { return block(a.side, b.side).contains(a.idx, b.idx); }
  template <class F>
  void letter_failures(World w, World v, F&& f) const {
    for (auto k : ls)
      if (has_letter(model(w.side), k, w.idx) && !has_letter(model(v.side), k, v.idx)) f(k);
  }
  std::uint32_t id(World x) const { return x.side == 0 ? x.idx : static_cast<WorldId>(m1.n_worlds() + x.idx); }
};

}  // namespace

ViolationReport verify_concrete(const KripkeModel& m1, const KripkeModel& m2, const SimilarityType& lambda,
                                const ConcreteSimQuad& q, const SimMode& mode) {
  const auto ls = merged_letters(m1, m2);
  const QuadView view{m1, m2, q, ls};
  const SimilarityType checked = lambda.without(UnaryOp::Not);
  ViolationReport out;
  for (std::uint8_t i = 0; i < 2; ++i)
    for (std::uint8_t j = 0; j < 2; ++j)
      for (auto [a, b] : view.block(i, j).pairs()) {
        const TypedWorld w{i, a}, v{j, b};
        const WorldPair p{view.id(w), view.id(v)};
        detail::check_conditions(view, checked, mode, w, v, [&](SimCondition c, std::uint32_t wit) {
          out.push_back({p, c, wit});
          return false;
        });
        if (mode.variant == SimMode::Variant::Symmetric && !view.related(v, w))
          out.push_back({p, SimCondition::Symmetry, p.second});
      }
  return out;
}

nlohmann::json report_to_json(const ViolationReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : r)
    out.push_back({{"pair", {v.pair.first, v.pair.second}},
                   {"condition", condition_tag(v.condition)},
                   {"witness", v.witness}});
  return out;
}

}  // namespace rmk
