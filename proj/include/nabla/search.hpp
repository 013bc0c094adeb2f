#pragma once

#include <optional>

#include "nabla/proof.hpp"

namespace nabla {

enum class SearchStatus {
  Proved,
  NotProvable,    // the bounded space was exhausted without hitting the bound
  BoundExceeded,  // some branch was cut off by the depth bound
};

struct SearchResult {
  SearchStatus status = SearchStatus::BoundExceeded;
  std::optional<ProofTree> proof;
  long expanded = 0;
};

/// Cut formulas admitted by the bounded search: subformulas of the goal plus
/// a bounded modal closure (na-prefixes to depth two and the T -> x and
/// na (T -> x) wrappers the standard derivations cut on).
std::vector<Formula> analytic_cut_pool(const Sequent& goal);

/// Backward proof search. Structural bookkeeping is set-based (contraction is
/// applied eagerly) and at most `cut_budget` cuts are stacked on any branch;
/// returned trees are full multiset derivations and always pass check_proof
/// for the same rule set.
SearchResult prove_bounded(const Sequent& goal, const RuleSet& rs, int depth,
                           int cut_budget = 2);

}  // namespace nabla
