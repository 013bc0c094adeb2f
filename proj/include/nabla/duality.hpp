#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nabla/kripke.hpp"
#include "nabla/space.hpp"

namespace nabla {

/// A finite nabla-space. Finite Priestley spaces are discrete, so no topology
/// is stored: the space is its poset together with the relation, and every
/// "clopen" quantifier ranges over all subsets. The four defining clauses are
/// still computed literally by nabla_space_check, which also records that
/// they collapse to order-compatibility at finite scale.
struct NablaSpace {
  KripkeFrame frame;

  const FinitePoset& poset() const { return frame.poset; }
};

struct NablaSpaceReport {
  bool rx_closed = false;       // R[x] closed for every x
  bool diamond_clopen = false;  // diamond_R(U) clopen for every clopen U
  bool nabla_clopen_upset = false;  // nabla_R(V) a clopen upset for upsets V
  bool reduction_confirmed = false;  // all clauses hold iff R is compatible
};

Result<std::pair<NablaSpace, NablaSpaceReport>, CompatibilityViolation>
nabla_space_check(const FinitePoset& p, const std::vector<std::vector<int>>& r);

/// Clopen-upset algebra of a nabla-space with
///   nabla(U)    = {x | exists y in U, (y, x) in R}
///   arrow(U, V) = {x | R[x] /\ U contained in V}.
/// Computed independently of kripke::upset_algebra; the two agree on shared
/// inputs (checked in the test suites).
UpsetAlgebra a_functor(const NablaSpace& s);

/// Prime-filter nabla-space of a distributive algebra; at finite scale the
/// Priestley topology is discrete and only (poset, R) is kept.
struct FilterSpace {
  NablaSpace space;
  std::vector<Mask> filter_of;
};

Result<FilterSpace, NotDistributive> s_functor(const NablaAlgebra& a);

struct IsoReport {
  bool ok = false;
  std::string failure;
  std::vector<int> map;  // witness table of the isomorphism
};

/// alpha(a) = {P | a in P} must be a bijective nabla-morphism onto the
/// clopen-upset algebra of the dual space (and preserve the Heyting
/// implication when the algebra is explicitly Heyting).
Result<IsoReport, NotDistributive> alpha_check(const NablaAlgebra& a);

/// beta(x) = {U clopen upset | x in U} must be an order isomorphism onto the
/// prime filters of the clopen-upset algebra, carrying R to the dual relation
/// exactly (both directions).
IsoReport beta_check(const NablaSpace& s);

/// A generalized Esakia space: a (finite, discrete) Priestley space with a
/// monotone dynamics pi. rm/e record whether pi is an order-embedding /
/// surjective.
struct GEsakiaSpace {
  FinitePoset poset;
  std::vector<int> pi;
  bool rm = false;
  bool e = false;
};

struct NotNormal {
  int witness = -1;  // y whose R-preimage is not a principal downset
};

/// Extracts (X, <=, pi) from a normal nabla-space. The rm tag must coincide
/// with the frame condition Fa and the e tag with Fu; when both hold, pi is
/// checked to be an order isomorphism.
Result<GEsakiaSpace, NotNormal> gesakia_extract(const NablaSpace& s);

struct NablaSpectralReport {
  bool ok = false;
  bool rx_compact_saturated = false;
  bool rpred_cosaturated = false;
  bool diamond_doubly_spectral = false;
  bool nabla_compact_open = false;
  bool matches_order_side = false;  // agrees with nabla_space_check
  std::string failure;
};

/// The four clauses of a nabla-spectral space, checked literally on a finite
/// spectral space, then compared with nabla_space_check on the specialization
/// poset.
NablaSpectralReport nabla_spectral_check(const FiniteSpace& sp,
                                         const std::vector<std::vector<int>>& r);

}  // namespace nabla
