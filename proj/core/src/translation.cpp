#include "rmk/translation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "rmk/error.hpp"
#include "rmk/rng.hpp"
#include "rmk/semantics.hpp"

namespace rmk {

struct FolFormula::Node {
  Kind kind;
  LetterIndex letter = 0;
  Var a = 0;
  Var b = 0;
  std::optional<FolFormula> lhs;
  std::optional<FolFormula> rhs;
};

namespace {

using Kind = FolFormula::Kind;

}  // namespace

FolFormula FolFormula::pred(LetterIndex k, Var v) {
  return FolFormula(std::make_shared<const Node>(Node{Kind::Pred, k, v, 0, {}, {}}));
}
FolFormula FolFormula::rel(Var a, Var b) {
  return FolFormula(std::make_shared<const Node>(Node{Kind::Rel, 0, a, b, {}, {}}));
}
FolFormula FolFormula::eq(Var a, Var b) {
  return FolFormula(std::make_shared<const Node>(Node{Kind::Eq, 0, a, b, {}, {}}));
}
FolFormula FolFormula::negation(FolFormula f) {
  return FolFormula(std::make_shared<const Node>(Node{Kind::Not, 0, 0, 0, std::move(f), {}}));
}
FolFormula FolFormula::conj(FolFormula a, FolFormula b) {
  return FolFormula(std::make_shared<const Node>(Node{Kind::And, 0, 0, 0, std::move(a), std::move(b)}));
}
FolFormula FolFormula::disj(FolFormula a, FolFormula b) {
  return FolFormula(std::make_shared<const Node>(Node{Kind::Or, 0, 0, 0, std::move(a), std::move(b)}));
}
FolFormula FolFormula::implies(FolFormula a, FolFormula b) {
  return FolFormula(std::make_shared<const Node>(Node{Kind::Implies, 0, 0, 0, std::move(a), std::move(b)}));
}
FolFormula FolFormula::forall(Var v, FolFormula body) {
  return FolFormula(std::make_shared<const Node>(Node{Kind::Forall, 0, v, 0, std::move(body), {}}));
}
FolFormula FolFormula::exists(Var v, FolFormula body) {
  return FolFormula(std::make_shared<const Node>(Node{Kind::Exists, 0, v, 0, std::move(body), {}}));
}

FolFormula::Kind FolFormula::kind() const { return node_->kind; }
LetterIndex FolFormula::letter_index() const { return node_->letter; }
Var FolFormula::var() const { return node_->a; }
Var FolFormula::var2() const { return node_->b; }
const FolFormula& FolFormula::left() const { return *node_->lhs; }
const FolFormula& FolFormula::right() const { return *node_->rhs; }

bool operator==(const FolFormula& x, const FolFormula& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  return a.kind == b.kind && a.letter == b.letter && a.a == b.a && a.b == b.b && a.lhs == b.lhs && a.rhs == b.rhs;
}

std::string var_name(Var v) { return v == 0 ? "x" : "y" + std::to_string(v - 1); }

// ---------------------------------------------------------------------------
// Standard translation

namespace {

class Translator {
 public:
  explicit Translator(Var x) : next_(std::max<Var>(1, x + 1)) {}

  FolFormula st(Var x, const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Top:
        return FolFormula::eq(x, x);
      case Formula::Kind::Bot:
        return FolFormula::negation(FolFormula::eq(x, x));
      case Formula::Kind::Letter:
        return FolFormula::pred(f.letter_index(), x);
      case Formula::Kind::And: {
        auto l = st(x, f.left());
        return FolFormula::conj(std::move(l), st(x, f.right()));
      }
      case Formula::Kind::Or: {
        auto l = st(x, f.left());
        return FolFormula::disj(std::move(l), st(x, f.right()));
      }
      case Formula::Kind::Unary:
        break;
    }
    const Formula& g = f.operand();
    using FF = FolFormula;
    switch (f.op()) {
      case UnaryOp::Not:
        return FF::negation(st(x, g));
      case UnaryOp::Box:
        return all_succ(x, g, false);
      case UnaryOp::Dia:
        return some_succ(x, g, false);
      case UnaryOp::Smile:
        return some_succ(x, g, true);
      case UnaryOp::Frown:
        return all_succ(x, g, true);
      case UnaryOp::Con: {
        auto l = FF::negation(st(x, g));
        return FF::disj(std::move(l), all_succ(x, g, false));
      }
      case UnaryOp::Det: {
        auto l = st(x, g);
        return FF::disj(std::move(l), all_succ(x, g, true));
      }
      case UnaryOp::Inc: {
        auto l = st(x, g);
        return FF::conj(std::move(l), some_succ(x, g, true));
      }
      case UnaryOp::Und: {
        auto l = FF::negation(st(x, g));
        return FF::conj(std::move(l), some_succ(x, g, false));
      }
    }
    return FolFormula::eq(x, x);
  }

 private:
  // ∀y (R(x,y) → [¬]st(y, g))
  FolFormula all_succ(Var x, const Formula& g, bool negate) {
    const Var y = next_++;
    auto inner = st(y, g);
    if (negate) inner = FolFormula::negation(std::move(inner));
    return FolFormula::forall(y, FolFormula::implies(FolFormula::rel(x, y), std::move(inner)));
  }
  // ∃y (R(x,y) ∧ [¬]st(y, g))
  FolFormula some_succ(Var x, const Formula& g, bool negate) {
    const Var y = next_++;
    auto inner = st(y, g);
    if (negate) inner = FolFormula::negation(std::move(inner));
    return FolFormula::exists(y, FolFormula::conj(FolFormula::rel(x, y), std::move(inner)));
  }

  Var next_;
};

bool eval(const KripkeModel& m, const FolFormula& f, std::vector<std::optional<WorldId>>& env) {
  auto lookup = [&](Var v) {
    if (v >= env.size() || !env[v]) throw UnassignedVariable("variable " + var_name(v) + " has no assigned world");
    return *env[v];
  };
  switch (f.kind()) {
    case Kind::Pred: {
      const auto& val = m.valuation();
      auto it = val.find(f.letter_index());
      return it != val.end() && it->second.contains(lookup(f.var()));
    }
    case Kind::Rel:
      return m.has_edge(lookup(f.var()), lookup(f.var2()));
    case Kind::Eq:
      return lookup(f.var()) == lookup(f.var2());
    case Kind::Not:
      return !eval(m, f.left(), env);
    case Kind::And:
      return eval(m, f.left(), env) && eval(m, f.right(), env);
    case Kind::Or:
      return eval(m, f.left(), env) || eval(m, f.right(), env);
    case Kind::Implies:
      return !eval(m, f.left(), env) || eval(m, f.right(), env);
    case Kind::Forall:
    case Kind::Exists: {
      const Var v = f.var();
      if (v >= env.size()) env.resize(v + 1);
      const auto saved = env[v];
      const bool universal = f.kind() == Kind::Forall;
      bool result = universal;
      for (WorldId w = 0; w < m.n_worlds(); ++w) {
        env[v] = w;
        if (eval(m, f.body(), env) != universal) {
          result = !universal;
          break;
        }
      }
      env[v] = saved;
      return result;
    }
  }
  return false;
}

void collect_free(const FolFormula& f, std::set<Var>& bound, std::set<Var>& out) {
  auto use = [&](Var v) {
    if (!bound.contains(v)) out.insert(v);
  };
  switch (f.kind()) {
    case Kind::Pred:
      use(f.var());
      return;
    case Kind::Rel:
    case Kind::Eq:
      use(f.var());
      use(f.var2());
      return;
    case Kind::Not:
      collect_free(f.left(), bound, out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      return;
    case Kind::Forall:
    case Kind::Exists: {
      const bool was_bound = bound.contains(f.var());
      bound.insert(f.var());
      collect_free(f.body(), bound, out);
      if (!was_bound) bound.erase(f.var());
      return;
    }
  }
}

}  // namespace

FolFormula standard_translation(Var x, const Formula& f) { return Translator(x).st(x, f); }

bool fol_eval(const KripkeModel& m, const FolFormula& f, const Assignment& a) {
  std::vector<std::optional<WorldId>> env;
  for (auto [v, w] : a) {
    if (v >= env.size()) env.resize(v + 1);
    env[v] = w;
  }
  return eval(m, f, env);
}

bool st_check(const KripkeModel& m, WorldId w, const Formula& f) {
  return satisfies(m, w, f) == fol_eval(m, standard_translation(kVarX, f), {{kVarX, w}});
}

std::set<Var> free_vars(const FolFormula& f) {
  std::set<Var> bound, out;
  collect_free(f, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Printing and parsing

namespace {

// Implies = 1, Or = 2, And = 3, everything at unary level = 4.
int fol_precedence(const FolFormula& f) {
  switch (f.kind()) {
    case Kind::Implies:
      return 1;
    case Kind::Or:
      return 2;
    case Kind::And:
      return 3;
    default:
      return 4;
  }
}

void fol_print_into(const FolFormula& f, std::string& out);

void fol_child(const FolFormula& c, bool parens, std::string& out) {
  if (parens) out += '(';
  fol_print_into(c, out);
  if (parens) out += ')';
}

void fol_print_into(const FolFormula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Pred:
      out += "P" + std::to_string(f.letter_index()) + "(" + var_name(f.var()) + ")";
      return;
    case Kind::Rel:
      out += "R(" + var_name(f.var()) + "," + var_name(f.var2()) + ")";
      return;
    case Kind::Eq:
      out += var_name(f.var()) + " = " + var_name(f.var2());
      return;
    case Kind::Not:
      out += '!';
      fol_child(f.left(), fol_precedence(f.left()) < 4 || f.left().kind() == Kind::Eq, out);
      return;
    case Kind::And:
    case Kind::Or: {
      const int p = fol_precedence(f);
      fol_child(f.left(), fol_precedence(f.left()) < p, out);
      out += f.kind() == Kind::And ? " & " : " | ";
      fol_child(f.right(), fol_precedence(f.right()) <= p, out);
      return;
    }
    case Kind::Implies:
      // right-associative
      fol_child(f.left(), fol_precedence(f.left()) <= 1, out);
      out += " -> ";
      fol_child(f.right(), fol_precedence(f.right()) < 1, out);
      return;
    case Kind::Forall:
    case Kind::Exists:
      out += f.kind() == Kind::Forall ? "forall " : "exists ";
      out += var_name(f.var()) + ". ";
      fol_child(f.body(), fol_precedence(f.body()) < 4, out);
      return;
  }
}

class FolParser {
 public:
  explicit FolParser(std::string_view text) : text_(text) {}

  FolFormula parse() {
    FolFormula f = impl();
    skip_ws();
    if (pos_ != text_.size()) fail({"'->'", "'|'", "'&'", "end of input"});
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_).starts_with(tok)) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail({"'" + std::string(tok) + "'"});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "FOL syntax error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    throw ParseError(pos_, std::move(expected), msg);
  }

  std::string_view word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  static std::optional<std::uint32_t> number(std::string_view digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return std::nullopt;
    std::uint32_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return k;
  }

  static std::optional<Var> as_var(std::string_view w) {
    if (w == "x") return kVarX;
    if (w.size() >= 2 && w[0] == 'y')
      if (auto k = number(w.substr(1)); k && *k < UINT32_MAX) return *k + 1;
    return std::nullopt;
  }

  Var var() {
    const std::size_t start = (skip_ws(), pos_);
    auto v = as_var(word());
    if (!v) {
      pos_ = start;
      fail({"variable"});
    }
    return *v;
  }

  FolFormula impl() {
    FolFormula lhs = disj();
    if (accept("->")) return FolFormula::implies(lhs, impl());
    return lhs;
  }

  FolFormula disj() {
    FolFormula acc = conj();
    while (accept("|")) acc = FolFormula::disj(acc, conj());
    return acc;
  }

  FolFormula conj() {
    FolFormula acc = unary();
    while (accept("&")) acc = FolFormula::conj(acc, unary());
    return acc;
  }

  FolFormula unary() {
    if (accept("!")) return FolFormula::negation(unary());
    if (accept("(")) {
      FolFormula f = impl();
      expect(")");
      return f;
    }
    skip_ws();
    const std::size_t start = pos_;
    const auto w = word();
    if (w == "forall" || w == "exists") {
      const Var v = var();
      expect(".");
      FolFormula body = unary();
      return w == "forall" ? FolFormula::forall(v, body) : FolFormula::exists(v, body);
    }
    if (w == "R") {
      expect("(");
      const Var a = var();
      expect(",");
      const Var b = var();
      expect(")");
      return FolFormula::rel(a, b);
    }
    if (w.size() >= 2 && w[0] == 'P') {
      if (auto k = number(w.substr(1))) {
        expect("(");
        const Var v = var();
        expect(")");
        return FolFormula::pred(*k, v);
      }
    }
    if (auto a = as_var(w)) {
      expect("=");
      return FolFormula::eq(*a, var());
    }
    pos_ = start;
    fail({"'!'", "'('", "quantifier", "atom"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string print_fol(const FolFormula& f) {
  std::string out;
  fol_print_into(f, out);
  return out;
}

FolFormula parse_fol(std::string_view text) { return FolParser(text).parse(); }

FolFormula random_fol(SplitMix64& rng, std::size_t depth, std::size_t n_vars, std::size_t n_letters) {
  const auto nv = std::max<std::size_t>(n_vars, 1);
  auto v = [&] { return static_cast<Var>(rng.below(nv)); };
  if (depth == 0 || rng.below(4) == 0) {
    switch (rng.below(3)) {
      case 0:
        if (n_letters > 0) return FolFormula::pred(static_cast<LetterIndex>(rng.below(n_letters)), v());
        [[fallthrough]];
      case 1:
        return FolFormula::rel(v(), v());
      default:
        return FolFormula::eq(v(), v());
    }
  }
  switch (rng.below(6)) {
    case 0:
      return FolFormula::negation(random_fol(rng, depth - 1, n_vars, n_letters));
    case 1: {
      auto a = random_fol(rng, depth - 1, n_vars, n_letters);
      return FolFormula::conj(a, random_fol(rng, depth - 1, n_vars, n_letters));
    }
    case 2: {
      auto a = random_fol(rng, depth - 1, n_vars, n_letters);
      return FolFormula::disj(a, random_fol(rng, depth - 1, n_vars, n_letters));
    }
    case 3: {
      auto a = random_fol(rng, depth - 1, n_vars, n_letters);
      return FolFormula::implies(a, random_fol(rng, depth - 1, n_vars, n_letters));
    }
    case 4: {
      const Var q = v();
      return FolFormula::forall(q, random_fol(rng, depth - 1, n_vars, n_letters));
    }
    default: {
      const Var q = v();
      return FolFormula::exists(q, random_fol(rng, depth - 1, n_vars, n_letters));
    }
  }
}

}  // namespace rmk
