#include "rmk/semantics.hpp"

#include <algorithm>
#include <unordered_map>

#include "rmk/error.hpp"
#include "rmk/rng.hpp"

namespace rmk {

TruthSet operator_transformer(UnaryOp op, const KripkeModel& m, const TruthSet& t) {
  const auto n = m.n_worlds();
  TruthSet out(n);
  if (op == UnaryOp::Not) return t.complement();
  for (WorldId w = 0; w < n; ++w) {
    const auto& succ = m.successors(w);
    const bool all_in = succ.subset_of(t);  // R[w] ⊆ T
    const bool some_in = succ.intersects(t);  // R[w] ∩ T ≠ ∅
    const bool here = t.contains(w);
    bool val = false;
    switch (op) {
      case UnaryOp::Box:
        val = all_in;
        break;
      case UnaryOp::Dia:
        val = some_in;
        break;
      case UnaryOp::Smile:
        val = !all_in;
        break;
      case UnaryOp::Frown:
        val = !some_in;
        break;
      case UnaryOp::Con:
        val = !here || all_in;
        break;
      case UnaryOp::Det:
        val = here || !some_in;
        break;
      case UnaryOp::Inc:
        val = here && !all_in;
        break;
      case UnaryOp::Und:
        val = !here && some_in;
        break;
      case UnaryOp::Not:
        break;
    }
    if (val) out.insert(w);
  }
  return out;
}

namespace {

using Memo = std::unordered_map<const void*, TruthSet>;

const TruthSet& eval(const KripkeModel& m, const Formula& f, Memo& memo) {
  if (auto it = memo.find(f.id()); it != memo.end()) return it->second;
  TruthSet result;
  switch (f.kind()) {
    case Formula::Kind::Top:
      result = m.all_worlds();
      break;
    case Formula::Kind::Bot:
      result = m.no_worlds();
      break;
    case Formula::Kind::Letter:
      result = m.letter_set(f.letter_index());
      break;
    case Formula::Kind::And:
      result = eval(m, f.left(), memo) & eval(m, f.right(), memo);
      break;
    case Formula::Kind::Or:
      result = eval(m, f.left(), memo) | eval(m, f.right(), memo);
      break;
    case Formula::Kind::Unary:
      result = operator_transformer(f.op(), m, eval(m, f.operand(), memo));
      break;
  }
  return memo.emplace(f.id(), std::move(result)).first->second;
}

}  // namespace

TruthSet truth_set(const KripkeModel& m, const Formula& f) {
  Memo memo;
  return eval(m, f, memo);
}

bool satisfies(const KripkeModel& m, WorldId w, const Formula& f) { return truth_set(m, f).contains(w); }

// ---------------------------------------------------------------------------
// Closure

bool ClosureFamily::contains(const TruthSet& t) const {
  return std::find(sets.begin(), sets.end(), t) != sets.end();
}

std::optional<Formula> ClosureFamily::generator_of(const TruthSet& t) const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == t) return generators[i];
  return std::nullopt;
}

ClosureFamily definable_closure(const KripkeModel& m, const SimilarityType& lambda, std::size_t cap) {
  ClosureFamily fam;
  fam.lambda = lambda;
  std::unordered_map<TruthSet, std::size_t, WorldSetHash> index;

  auto add = [&](TruthSet s, Formula gen) {
    if (index.contains(s)) return;
    if (fam.sets.size() >= cap) throw CapExceeded(cap);
    index.emplace(s, fam.sets.size());
    fam.sets.push_back(std::move(s));
    fam.generators.push_back(std::move(gen));
  };

  add(m.no_worlds(), Formula::bot());
  add(m.all_worlds(), Formula::top());
  for (const auto& [k, s] : m.valuation()) add(s, Formula::letter(k));

  const auto ops = lambda.ops();
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      add(fam.sets[i] | fam.sets[j], Formula::disj(fam.generators[j], fam.generators[i]));
    for (std::size_t j = 0; j < i; ++j)
      add(fam.sets[i] & fam.sets[j], Formula::conj(fam.generators[j], fam.generators[i]));
    for (auto op : ops) add(operator_transformer(op, m, fam.sets[i]), Formula::unary(op, fam.generators[i]));
  }
  return fam;
}

Relation subsumption(const ClosureFamily& family, std::size_t n_worlds) {
  Relation r = Relation::full(n_worlds);
  for (const auto& t : family.sets) {
    t.for_each([&](WorldId w) {
      for (WorldId v = 0; v < n_worlds; ++v)
        if (!t.contains(v)) r.erase(w, v);
    });
  }
  return r;
}

Relation subsumption(const KripkeModel& m, const SimilarityType& lambda, std::size_t cap) {
  return subsumption(definable_closure(m, lambda, cap), m.n_worlds());
}

// ---------------------------------------------------------------------------
// Sequents

Sequent parse_sequent(std::string_view text) {
  const auto turnstile = text.find("|-");
  if (turnstile == std::string_view::npos) throw ParseError(text.size(), {"'|-'"}, "sequent is missing '|-'");
  auto side = [&](std::string_view part, std::size_t base) {
    std::vector<Formula> out;
    if (part.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
    std::size_t pos = 0;
    while (true) {
      const auto comma = part.find(',', pos);
      const auto item = part.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      try {
        out.push_back(parse_formula(item));
      } catch (const ParseError& e) {
        throw ParseError(base + pos + e.offset(), e.expected(), e.what());
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  };
  return {side(text.substr(0, turnstile), 0), side(text.substr(turnstile + 2), turnstile + 2)};
}

std::string print_sequent(const Sequent& s) {
  auto side = [](const std::vector<Formula>& fs) {
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? ", " : "") + print_formula(fs[i]);
    return out;
  };
  std::string lhs = side(s.premises), rhs = side(s.conclusions);
  return lhs + (lhs.empty() ? "|-" : " |-") + (rhs.empty() ? "" : " " + rhs);
}

std::optional<WorldId> refuting_world(const KripkeModel& m, const Sequent& s) {
  Memo memo;
  TruthSet candidates = m.all_worlds();
  for (const auto& p : s.premises) candidates &= eval(m, p, memo);
  for (const auto& c : s.conclusions) candidates &= eval(m, c, memo).complement();
  if (candidates.empty()) return std::nullopt;
  return candidates.members().front();
}

namespace {

std::vector<LetterIndex> sequent_letters(const Sequent& s) {
  std::set<LetterIndex> ls;
  for (const auto& f : s.premises) ls.merge(letters(f));
  for (const auto& f : s.conclusions) ls.merge(letters(f));
  return {ls.begin(), ls.end()};
}

}  // namespace

Verdict sequent_valid(const Sequent& s, const SearchConfig& search) {
  Verdict verdict;
  const auto all_letters = sequent_letters(s);
  const std::size_t varied = std::min(all_letters.size(), search.exhaustive_max_letters);

  for (std::size_t n = 1; n <= search.exhaustive_max_worlds; ++n) {
    const std::size_t edge_bits = n * n;
    const std::size_t val_bits = n * varied;
    for (std::uint64_t em = 0; em < (std::uint64_t{1} << edge_bits); ++em) {
      std::vector<Edge> edges;
      for (std::size_t b = 0; b < edge_bits; ++b)
        if ((em >> b) & 1U) edges.emplace_back(static_cast<WorldId>(b / n), static_cast<WorldId>(b % n));
      for (std::uint64_t vm = 0; vm < (std::uint64_t{1} << val_bits); ++vm) {
        std::map<LetterIndex, std::vector<WorldId>> val;
        for (std::size_t li = 0; li < varied; ++li) {
          auto& members = val[all_letters[li]];
          for (std::size_t w = 0; w < n; ++w)
            if ((vm >> (li * n + w)) & 1U) members.push_back(static_cast<WorldId>(w));
        }
        KripkeModel m(n, edges, val);
        ++verdict.models_checked;
        if (auto w = refuting_world(m, s)) {
          verdict.countermodel = Countermodel{std::move(m), *w};
          return verdict;
        }
      }
    }
  }

  SplitMix64 rng(search.seed);
  for (std::size_t trial = 0; trial < search.random_trials; ++trial) {
    const std::size_t n = 1 + rng.below(std::max<std::size_t>(search.random_max_worlds, 1));
    auto base = random_model(n, 0, search.edge_prob, 0.0, rng.next());
    std::map<LetterIndex, std::vector<WorldId>> val;
    for (auto k : all_letters) {
      auto& members = val[k];
      for (WorldId w = 0; w < n; ++w)
        if (rng.bernoulli(search.letter_prob)) members.push_back(w);
    }
    KripkeModel m(n, base.edges(), val);
    ++verdict.models_checked;
    if (auto w = refuting_world(m, s)) {
      verdict.countermodel = Countermodel{std::move(m), *w};
      return verdict;
    }
  }
  return verdict;
}

}  // namespace rmk
