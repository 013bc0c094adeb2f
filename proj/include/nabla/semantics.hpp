#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nabla/kripke.hpp"
#include "nabla/search.hpp"

namespace nabla {

struct EvalError {
  enum Kind { MissingAtom, LanguageMode } kind = MissingAtom;
  std::string detail;
};

/// Atom assignment into algebra elements.
struct Valuation {
  std::map<std::string, int> atoms;
};

/// Holds per-algebra tables (box, Heyting implication when needed) so that
/// sweeps do not recompute them per sequent.
class AlgebraicEvaluator {
 public:
  explicit AlgebraicEvaluator(const NablaAlgebra& alg);

  /// Value of a formula, or the evaluation error.
  Result<int, EvalError> value(const Formula& f, const Valuation& v) const;

  /// meet(Gamma) <= join(Delta); empty Gamma reads as top, empty Delta as bot.
  Result<bool, EvalError> holds(const Sequent& s, const Valuation& v) const;

 private:
  const NablaAlgebra& alg_;
  std::optional<std::vector<std::vector<int>>> heyting_;
};

Result<bool, EvalError> eval_algebraic(const NablaAlgebra& alg,
                                       const Valuation& v, const Sequent& s);

/// Pointwise forcing over a Kripke frame; valuation maps atoms to upsets
/// (masks over worlds). The result is cross-checked against the algebraic
/// evaluation on the upset algebra; disagreement throws
/// InternalInconsistency.
struct KripkeEvalResult {
  bool holds = false;
  std::vector<std::pair<Formula, Mask>> forcing;  // per-subformula world sets
};

Result<KripkeEvalResult, EvalError> eval_kripke(
    const KripkeFrame& f, const std::map<std::string, Mask>& valuation,
    const Sequent& s);

/// Evaluation in the dynamic-system algebra of a monotone endo-map pi on a
/// poset: nabla is the preimage under pi and the arrow uses the brute-forced
/// right adjoint of the preimage. Cross-checked against eval_kripke on the
/// induced normal frame.
Result<bool, EvalError> eval_topological(const FinitePoset& p,
                                         const std::vector<int>& pi,
                                         const std::map<std::string, Mask>& valuation,
                                         const Sequent& s);

/// A catalog entry for countermodel sweeps: a verified algebra with its
/// classification precomputed.
struct ModelEntry {
  NablaAlgebra algebra;
  VarietySet tags;
};

struct Countermodel {
  std::size_t catalog_index = 0;
  NablaAlgebra algebra;
  Valuation valuation;
};

/// Variety tags an STL(rs) countermodel must satisfy.
VarietySet required_tags(const RuleSet& rs);

/// First catalog model (catalog order, then lexicographic valuations)
/// falsifying the sequent, restricted to entries whose tags cover the rule
/// set. No result within the catalog is not evidence of derivability.
std::optional<Countermodel> countermodel_search(
    const Sequent& s, const RuleSet& rs, const std::vector<ModelEntry>& catalog);

/// Rule-axiom equivalence: for each enabled tag, the axioms are derived by
/// bounded search in STL extended with the rule, and the rule is replayed
/// from the axioms through fixture derivations over plain STL.
struct EquivalenceDirection {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct EquivalenceReport {
  std::vector<EquivalenceDirection> directions;
  bool all_ok = true;
};

EquivalenceReport axiom_rule_equivalence_suite(const RuleSet& rs, int depth = 10);

}  // namespace nabla
