#include "rmk/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "rmk/error.hpp"
#include "rmk/rng.hpp"

namespace rmk {

namespace {

constexpr std::array<std::string_view, 9> kOpNames = {"not", "box", "dia", "smile", "frown",
                                                      "con", "det", "inc", "und"};

}  // namespace

std::string_view op_name(UnaryOp op) { return kOpNames[static_cast<std::size_t>(op)]; }

std::optional<UnaryOp> op_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kOpNames.size(); ++i)
    if (kOpNames[i] == name) return static_cast<UnaryOp>(i);
  return std::nullopt;
}

bool is_restorative(UnaryOp op) {
  return op != UnaryOp::Not && op != UnaryOp::Box && op != UnaryOp::Dia;
}

bool SimilarityType::is_restorative() const {
  return !contains(UnaryOp::Not) && !contains(UnaryOp::Box) && !contains(UnaryOp::Dia);
}

bool SimilarityType::is_classical_restorative() const {
  return contains(UnaryOp::Not) && without(UnaryOp::Not).is_restorative();
}

std::vector<UnaryOp> SimilarityType::ops() const {
  std::vector<UnaryOp> out;
  for (auto op : kAllOps)
    if (contains(op)) out.push_back(op);
  return out;
}

std::string SimilarityType::to_string() const {
  std::string out;
  for (auto op : ops()) {
    if (!out.empty()) out += ',';
    out += op_name(op);
  }
  return out;
}

SimilarityType parse_similarity_type(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  SimilarityType t;
  if (trim(text).empty()) return t;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    const bool last = comma == std::string_view::npos;
    if (last) comma = text.size();
    auto item = trim(text.substr(pos, comma - pos));
    if (item.empty()) throw ParseError(pos, {"operator name"}, "empty entry in operator list");
    auto op = op_from_name(item);
    if (!op)
      throw ParseError(pos, {kOpNames.begin(), kOpNames.end()}, "unknown operator '" + std::string(item) + "'");
    t.insert(*op);
    if (last) break;
    pos = comma + 1;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Kind kind;
  UnaryOp op = UnaryOp::Not;
  LetterIndex letter = 0;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
};

Formula Formula::top() {
  static const Formula t{std::make_shared<const Node>(Node{Kind::Top, {}, 0, {}, {}})};
  return t;
}

Formula Formula::bot() {
  static const Formula f{std::make_shared<const Node>(Node{Kind::Bot, {}, 0, {}, {}})};
  return f;
}

Formula Formula::letter(LetterIndex k) {
  return Formula{std::make_shared<const Node>(Node{Kind::Letter, {}, k, {}, {}})};
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula{std::make_shared<const Node>(Node{Kind::And, {}, 0, std::move(a), std::move(b)})};
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula{std::make_shared<const Node>(Node{Kind::Or, {}, 0, std::move(a), std::move(b)})};
}

Formula Formula::unary(UnaryOp op, Formula a) {
  return Formula{std::make_shared<const Node>(Node{Kind::Unary, op, 0, std::move(a), {}})};
}

Formula::Kind Formula::kind() const { return node_->kind; }
LetterIndex Formula::letter_index() const { return node_->letter; }
UnaryOp Formula::op() const { return node_->op; }
const Formula& Formula::left() const { return *node_->lhs; }
const Formula& Formula::right() const { return *node_->rhs; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Letter:
      return a.letter_index() == b.letter_index();
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return a.left() == b.left() && a.right() == b.right();
    case Formula::Kind::Unary:
      return a.op() == b.op() && a.operand() == b.operand();
  }
  return false;
}

Formula big_and(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(acc, fs[i]);
  return acc;
}

Formula big_or(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::bot();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disj(acc, fs[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Parser
//
//   phi   := disj
//   disj  := conj ("|" conj)*
//   conj  := unary ("&" unary)*
//   unary := OP unary | atom
//   atom  := "T" | "F" | LETTER | "(" phi ")"

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = disj();
    skip_ws();
    if (pos_ != text_.size()) fail({"'&'", "'|'", "end of input"});
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "syntax error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    throw ParseError(pos_, std::move(expected), msg);
  }

  Formula disj() {
    Formula acc = conj();
    while (accept('|')) acc = Formula::disj(acc, conj());
    return acc;
  }

  Formula conj() {
    Formula acc = unary();
    while (accept('&')) acc = Formula::conj(acc, unary());
    return acc;
  }

  std::string_view identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Formula unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail({"operator", "'T'", "'F'", "letter", "'('"});
    if (text_[pos_] == '(') {
      ++pos_;
      Formula f = disj();
      if (!accept(')')) fail({"')'"});
      return f;
    }
    if (!std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail({"operator", "'T'", "'F'", "letter", "'('"});
    const std::size_t start = pos_;
    auto word = identifier();
    if (word == "T") return Formula::top();
    if (word == "F") return Formula::bot();
    if (word.size() >= 2 && word[0] == 'p' &&
        std::all_of(word.begin() + 1, word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      LetterIndex k = 0;
      auto [ptr, ec] = std::from_chars(word.data() + 1, word.data() + word.size(), k);
      if (ec != std::errc{} || ptr != word.data() + word.size()) {
        pos_ = start;
        fail({"letter index below 2^32"});
      }
      return Formula::letter(k);
    }
    if (auto op = op_from_name(word)) return Formula::unary(*op, unary());
    pos_ = start;
    throw ParseError(start, {kOpNames.begin(), kOpNames.end()},
                     "unknown operator '" + std::string(word) + "' at offset " + std::to_string(start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Printing precedence: Or = 1, And = 2, Unary/atoms = 3.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Or:
      return 1;
    case Formula::Kind::And:
      return 2;
    default:
      return 3;
  }
}

void print_into(const Formula& f, std::string& out);

void print_child(const Formula& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print_into(child, out);
  if (parens) out += ')';
}

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      out += 'T';
      return;
    case Formula::Kind::Bot:
      out += 'F';
      return;
    case Formula::Kind::Letter:
      out += 'p';
      out += std::to_string(f.letter_index());
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const int p = precedence(f);
      // Left-associative: the left child may share the operator, the right may not.
      print_child(f.left(), precedence(f.left()) < p, out);
      out += f.kind() == Formula::Kind::And ? " & " : " | ";
      print_child(f.right(), precedence(f.right()) <= p, out);
      return;
    }
    case Formula::Kind::Unary:
      out += op_name(f.op());
      out += ' ';
      print_child(f.operand(), precedence(f.operand()) < 3, out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

bool in_language(const Formula& f, const SimilarityType& lambda) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
    case Formula::Kind::Letter:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return in_language(f.left(), lambda) && in_language(f.right(), lambda);
    case Formula::Kind::Unary:
      return lambda.contains(f.op()) && in_language(f.operand(), lambda);
  }
  return false;
}

std::size_t modal_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return std::max(modal_depth(f.left()), modal_depth(f.right()));
    case Formula::Kind::Unary:
      return 1 + modal_depth(f.operand());
    default:
      return 0;
  }
}

namespace {
void collect_letters(const Formula& f, std::set<LetterIndex>& out) {
  switch (f.kind()) {
    case Formula::Kind::Letter:
      out.insert(f.letter_index());
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_letters(f.left(), out);
      collect_letters(f.right(), out);
      return;
    case Formula::Kind::Unary:
      collect_letters(f.operand(), out);
      return;
    default:
      return;
  }
}
}  // namespace

std::set<LetterIndex> letters(const Formula& f) {
  std::set<LetterIndex> out;
  collect_letters(f, out);
  return out;
}

std::size_t formula_size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 1 + formula_size(f.left()) + formula_size(f.right());
    case Formula::Kind::Unary:
      return 1 + formula_size(f.operand());
    default:
      return 1;
  }
}

// Leaves: T, F with weight 1 each, each letter weight 4/n (letters share 4/6).
// Inner nodes at depth budget d > 0: draw below(10): 0-2 leaf, 3-4 and, 5-6 or,
// 7-9 unary (binary when `ops` is empty). A node budget of 48 forces leaves.
namespace {

Formula random_leaf(SplitMix64& rng, std::size_t n_letters) {
  if (n_letters == 0) return rng.below(2) == 0 ? Formula::top() : Formula::bot();
  const auto r = rng.below(6);
  if (r == 0) return Formula::top();
  if (r == 1) return Formula::bot();
  return Formula::letter(static_cast<LetterIndex>(rng.below(n_letters)));
}

Formula random_rec(SplitMix64& rng, std::size_t depth, const std::vector<UnaryOp>& ops, std::size_t n_letters,
                   int& budget) {
  if (depth == 0 || budget <= 0) {
    --budget;
    return random_leaf(rng, n_letters);
  }
  --budget;
  auto r = rng.below(10);
  if (r <= 2) return random_leaf(rng, n_letters);
  if (r >= 7 && ops.empty()) r -= 4;
  if (r <= 4) {
    auto a = random_rec(rng, depth, ops, n_letters, budget);
    return Formula::conj(a, random_rec(rng, depth, ops, n_letters, budget));
  }
  if (r <= 6) {
    auto a = random_rec(rng, depth, ops, n_letters, budget);
    return Formula::disj(a, random_rec(rng, depth, ops, n_letters, budget));
  }
  const auto op = ops[rng.below(ops.size())];
  return Formula::unary(op, random_rec(rng, depth - 1, ops, n_letters, budget));
}

}  // namespace

Formula random_formula(SplitMix64& rng, std::size_t depth, const std::vector<UnaryOp>& ops,
                       std::size_t n_letters) {
  int budget = 48;
  return random_rec(rng, depth, ops, n_letters, budget);
}

}  // namespace rmk
