#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rmk {

class SplitMix64;

using LetterIndex = std::uint32_t;

/// Unary connectives. The last six form the restorative vocabulary:
/// smile (paraconsistent negation), frown (paracomplete negation),
/// con / det (consistency / determinedness), inc / und (their duals).
enum class UnaryOp : std::uint8_t { Not, Box, Dia, Smile, Frown, Con, Det, Inc, Und };

inline constexpr std::array<UnaryOp, 9> kAllOps = {UnaryOp::Not,   UnaryOp::Box, UnaryOp::Dia,
                                                   UnaryOp::Smile, UnaryOp::Frown, UnaryOp::Con,
                                                   UnaryOp::Det,   UnaryOp::Inc, UnaryOp::Und};
inline constexpr std::array<UnaryOp, 6> kRestorativeOps = {UnaryOp::Smile, UnaryOp::Frown, UnaryOp::Con,
                                                           UnaryOp::Det,   UnaryOp::Inc,   UnaryOp::Und};

std::string_view op_name(UnaryOp op);
std::optional<UnaryOp> op_from_name(std::string_view name);
bool is_restorative(UnaryOp op);

/// A set of unary connectives fixing a modal language.
class SimilarityType {
 public:
  SimilarityType() = default;
  SimilarityType(std::initializer_list<UnaryOp> ops) {
    for (auto op : ops) insert(op);
  }

  bool contains(UnaryOp op) const { return (bits_ >> static_cast<unsigned>(op)) & 1U; }
  void insert(UnaryOp op) { bits_ |= static_cast<std::uint16_t>(1U << static_cast<unsigned>(op)); }
  void erase(UnaryOp op) { bits_ &= static_cast<std::uint16_t>(~(1U << static_cast<unsigned>(op))); }
  bool empty() const { return bits_ == 0; }
  std::uint16_t bits() const { return bits_; }

  /// ops ⊆ {smile, frown, con, det, inc, und}
  bool is_restorative() const;
  /// ops = {not} ∪ R with R restorative
  bool is_classical_restorative() const;
  bool subset_of(const SimilarityType& o) const { return (bits_ & ~o.bits_) == 0; }

  SimilarityType with(UnaryOp op) const {
    auto r = *this;
    r.insert(op);
    return r;
  }
  SimilarityType without(UnaryOp op) const {
    auto r = *this;
    r.erase(op);
    return r;
  }

  std::vector<UnaryOp> ops() const;
  /// Comma list in canonical operator order, e.g. "smile,con".
  std::string to_string() const;

  friend bool operator==(const SimilarityType&, const SimilarityType&) = default;

 private:
  std::uint16_t bits_ = 0;
};

/// Parses "smile,con" style lists; empty string is the empty type.
SimilarityType parse_similarity_type(std::string_view text);

/// Immutable formula tree with shared subterms.
class Formula {
 public:
  enum class Kind : std::uint8_t { Top, Bot, Letter, And, Or, Unary };

  static Formula top();
  static Formula bot();
  static Formula letter(LetterIndex k);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula unary(UnaryOp op, Formula a);

  Kind kind() const;
  LetterIndex letter_index() const;
  UnaryOp op() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& operand() const { return left(); }

  /// Stable node identity, usable as a memo key.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// ⋀ of the list, ⊤ when empty.
Formula big_and(const std::vector<Formula>& fs);
/// ⋁ of the list, ⊥ when empty.
Formula big_or(const std::vector<Formula>& fs);

Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f);

bool in_language(const Formula& f, const SimilarityType& lambda);
std::size_t modal_depth(const Formula& f);
std::set<LetterIndex> letters(const Formula& f);
/// Number of nodes in the tree (shared subterms counted per occurrence).
std::size_t formula_size(const Formula& f);

/// Random formula of modal depth at most `depth` over `ops` and letters p0..p{n_letters-1}.
/// With n_letters = 0 only T and F appear at the leaves.
Formula random_formula(SplitMix64& rng, std::size_t depth, const std::vector<UnaryOp>& ops,
                       std::size_t n_letters);

}  // namespace rmk
