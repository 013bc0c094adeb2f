#pragma once

#include <string>
#include <vector>

#include "nabla/proof.hpp"

namespace nabla {

/// A named derivation: a proof tree over the given rule set, possibly with
/// Hyp leaves discharged by the assumption list.
struct ProofFixture {
  std::string name;
  RuleSet rules;
  std::vector<Sequent> assumptions;
  ProofTree tree;
};

/// The standard derivations: nabla commuting with finite disjunctions, the
/// one-formula reduction over STL(N), the axiom forms of Fa and Fu, and the
/// derivations of each extension rule from its axiom form over plain STL.
std::vector<ProofFixture> standard_fixtures();

const ProofFixture& fixture_by_name(const std::string& name);

}  // namespace nabla
