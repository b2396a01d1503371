#pragma once

// Condition checker shared by the single-model engine and the typed
// four-block (concrete) check. A View supplies:
//   using World;
//   for_each_succ(World, f)      f(World) over R[x]
//   related(World a, World b)    (a, b) ∈ S
//   letter_failures(w, v, f)     f(k) for each k with w ∈ P_k, v ∉ P_k
//   id(World) -> uint32_t        id used in reports
// The sink gets (condition, witness id) and returns true to stop early.

#include "rmk/simulation.hpp"

namespace rmk::detail {

template <class View, class World, class Pred>
bool any_succ(const View& view, World x, Pred&& pred) {
  bool found = false;
  view.for_each_succ(x, [&](World y) {
    if (!found && pred(y)) found = true;
  });
  return found;
}

template <class View, class Sink>
void check_conditions(const View& V, const SimilarityType& lambda, const SimMode& mode, typename View::World w,
                      typename View::World v, Sink&& sink) {
  using World = typename View::World;
  bool stop = false;
  auto report = [&](SimCondition c, std::uint32_t wit) {
    if (!stop) stop = sink(c, wit);
  };

  V.letter_failures(w, v, [&](std::uint32_t k) { report(SimCondition::Letter, k); });
  if (stop) return;

  if (lambda.contains(UnaryOp::Smile)) {
    V.for_each_succ(w, [&](World s) {
      if (stop) return;
      if (!any_succ(V, v, [&](World t) { return V.related(t, s); })) report(SimCondition::Smile, V.id(s));
    });
  }
  if (stop) return;

  if (lambda.contains(UnaryOp::Frown)) {
    V.for_each_succ(v, [&](World t) {
      if (stop) return;
      if (!any_succ(V, w, [&](World s) { return V.related(t, s); })) report(SimCondition::Frown, V.id(t));
    });
  }
  if (stop) return;

  if (lambda.contains(UnaryOp::Con)) {
    const bool dashed = !mode.drops(SimCondition::Con);
    const bool back = V.related(v, w);
    V.for_each_succ(v, [&](World t) {
      if (stop) return;
      if (dashed && V.related(v, t)) return;
      if (back && any_succ(V, w, [&](World s) { return V.related(s, t); })) return;
      report(SimCondition::Con, V.id(t));
    });
  }
  if (stop) return;

  if (lambda.contains(UnaryOp::Det)) {
    const bool dashed = !mode.drops(SimCondition::Det);
    V.for_each_succ(v, [&](World t) {
      if (stop) return;
      if (dashed && V.related(t, v)) return;
      if (any_succ(V, w, [&](World s) { return V.related(t, s); })) return;
      report(SimCondition::Det, V.id(t));
    });
  }
  if (stop) return;

  if (lambda.contains(UnaryOp::Inc)) {
    const bool dashed = !mode.drops(SimCondition::Inc);
    V.for_each_succ(w, [&](World s) {
      if (stop) return;
      if (dashed && V.related(w, s)) return;
      if (any_succ(V, v, [&](World t) { return V.related(t, s); })) return;
      report(SimCondition::Inc, V.id(s));
    });
  }
  if (stop) return;

  if (lambda.contains(UnaryOp::Und)) {
    const bool dashed = !mode.drops(SimCondition::Und);
    const bool back = V.related(v, w);
    V.for_each_succ(w, [&](World s) {
      if (stop) return;
      if (dashed && V.related(s, w)) return;
      if (back && any_succ(V, v, [&](World t) { return V.related(s, t); })) return;
      report(SimCondition::Und, V.id(s));
    });
  }
}

}  // namespace rmk::detail
