#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "rmk/kripke.hpp"
#include "rmk/syntax.hpp"

namespace rmk {

class SplitMix64;

/// FOL variable. 0 prints as "x", k >= 1 as "y{k-1}".
using Var = std::uint32_t;
inline constexpr Var kVarX = 0;

/// First-order formula over one binary relation R and unary predicates P_k.
class FolFormula {
 public:
  enum class Kind : std::uint8_t { Pred, Rel, Eq, Not, And, Or, Implies, Forall, Exists };

  static FolFormula pred(LetterIndex k, Var v);
  static FolFormula rel(Var a, Var b);
  static FolFormula eq(Var a, Var b);
  static FolFormula negation(FolFormula f);
  static FolFormula conj(FolFormula a, FolFormula b);
  static FolFormula disj(FolFormula a, FolFormula b);
  static FolFormula implies(FolFormula a, FolFormula b);
  static FolFormula forall(Var v, FolFormula body);
  static FolFormula exists(Var v, FolFormula body);

  Kind kind() const;
  LetterIndex letter_index() const;  // Pred
  Var var() const;                   // Pred, quantifiers; first argument of Rel/Eq
  Var var2() const;                  // second argument of Rel/Eq
  const FolFormula& left() const;    // Not operand, binary left, quantifier body
  const FolFormula& right() const;
  const FolFormula& body() const { return left(); }

  friend bool operator==(const FolFormula& a, const FolFormula& b);

 private:
  struct Node;
  explicit FolFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using Assignment = std::map<Var, WorldId>;

std::string var_name(Var v);

/// st(x, φ). Fresh bound variables come from a counter starting just above x,
/// allocated in translation order (left operand first, quantifier variable
/// before its body). `box` and `dia` get the usual ∀ / ∃ clauses.
FolFormula standard_translation(Var x, const Formula& f);

/// Tarskian evaluation, quantifiers over all worlds. Throws UnassignedVariable.
bool fol_eval(const KripkeModel& m, const FolFormula& f, const Assignment& a);

/// satisfies(m, w, φ) == fol_eval(m, st(x, φ), {x ↦ w})
bool st_check(const KripkeModel& m, WorldId w, const Formula& f);

std::set<Var> free_vars(const FolFormula& f);

/// Grammar:
///   impl  := disj ("->" impl)?
///   disj  := conj ("|" conj)*
///   conj  := unary ("&" unary)*
///   unary := "!" unary | ("forall" | "exists") var "." unary | atom
///   atom  := "P"k "(" var ")" | "R(" var "," var ")" | var "=" var | "(" impl ")"
std::string print_fol(const FolFormula& f);
FolFormula parse_fol(std::string_view text);

/// Random FOL formula over variables x, y0..y{n_vars-2} for round-trip tests.
FolFormula random_fol(SplitMix64& rng, std::size_t depth, std::size_t n_vars, std::size_t n_letters);

}  // namespace rmk
