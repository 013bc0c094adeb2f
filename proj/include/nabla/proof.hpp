#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nabla/formula.hpp"

namespace nabla {

/// Rules of the base calculus STL, the six optional extension rules, the
/// intuitionistic implication rules, and Hyp for leaves discharged by an
/// assumption list.
enum class Rule {
  Ax, LBot, LTop, Lw, Rw, Lc, Cut,
  LAnd1, LAnd2, RAnd, LOr, ROr1, ROr2,
  Nabla, LTo, RTo,
  R, L, D, N, Fa, Fu,
  LSup, RSup,
  Hyp,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);

/// Which extension rules are switched on; h additionally enables the
/// intuitionistic implication rules and the extended language.
struct RuleSet {
  bool d = false, n = false, r = false, l = false, fa = false, fu = false;
  bool h = false;

  bool allows(Rule rule) const;
  std::string to_string() const;  // e.g. "N,Fa" or "D,H"
  static Result<RuleSet, std::string> from_string(const std::string& text);
  LanguageMode language() const {
    return h ? LanguageMode::Intuitionistic : LanguageMode::Base;
  }
};

struct ProofTree {
  Rule rule = Rule::Ax;
  Sequent conclusion;
  std::vector<ProofTree> premises;

  int depth() const;
  int nodes() const;
};

struct ProofVerdict {
  bool ok = false;
  std::string path;    // premise indices from the root, e.g. "0.1"
  std::string reason;  // UnknownRule / RuleNotInSet / SchemaMismatch detail
};

/// Accepts iff every node instantiates its rule schema exactly (multiset
/// contexts, |Delta| <= 1) and the rule is available in the rule set. Hyp
/// leaves must match one of the given assumption sequents.
ProofVerdict check_proof(const ProofTree& t, const RuleSet& rs,
                         const std::vector<Sequent>& assumptions = {});

// -- multiset helpers shared by the checker and the search --

/// Sorted-vector multiset difference; nullopt when b is not contained in a.
std::optional<std::vector<Formula>> multiset_minus(
    const std::vector<Formula>& a, const std::vector<Formula>& b);

std::vector<Formula> multiset_plus(const std::vector<Formula>& a,
                                   const Formula& extra);

}  // namespace nabla
