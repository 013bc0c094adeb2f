#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nabla/poset.hpp"

namespace nabla {

/// A finite bounded lattice: a poset together with total meet/join tables and
/// the two bounds. Built from the order via lattice_from_poset.
struct FiniteLattice {
  FinitePoset poset;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  int bot = 0;
  int top = 0;

  int size() const { return poset.n; }
  bool leq(int a, int b) const { return poset.leq(a, b); }
};

struct LatticeFailure {
  enum Kind { NoMeet, NoJoin, NoBot, NoTop } kind;
  int a = -1, b = -1;  // witness pair for NoMeet/NoJoin
  std::string describe() const;
};

Result<FiniteLattice, LatticeFailure> lattice_from_poset(const FinitePoset& p);

struct DistributivityReport {
  bool distributive = true;
  std::array<int, 3> witness{};  // a, b, c with a&(b|c) != (a&b)|(a&c)
};

DistributivityReport is_distributive(const FiniteLattice& l);

/// Witness that {c | c /\ a <= b} (or its nabla analogue) is not a principal
/// downset, so the residual at (a, b) does not exist.
struct ResidualFailure {
  int a = -1, b = -1;
  std::string describe() const;
};

/// Heyting implication a => b as the greatest c with c /\ a <= b, all pairs.
Result<std::vector<std::vector<int>>, ResidualFailure> try_heyting_implication(
    const FiniteLattice& l);

/// The lattice of all upsets of a poset, ordered by inclusion. Element i of
/// the lattice decodes to the subset upset_of[i] of the base poset; elements
/// are listed in ascending characteristic-mask order.
struct UpsetLattice {
  FiniteLattice lattice;
  std::vector<Mask> upset_of;

  int index_of(Mask m) const;  // -1 when m is not an upset
};

UpsetLattice upset_lattice(const FinitePoset& p);

/// All prime filters as element masks, ascending. A prime filter is a proper
/// nonempty upset closed under meet such that a \/ b in P forces a or b in P.
std::vector<Mask> prime_filters(const FiniteLattice& l);

/// Elements j != bot that are not the join of two strictly smaller elements.
std::vector<int> join_irreducibles(const FiniteLattice& l);

struct LatticeMorphism {
  std::vector<int> map;
};

struct MorphismReport {
  bool ok = true;
  std::string witness;
};

MorphismReport check_lattice_morphism(const FiniteLattice& src,
                                      const FiniteLattice& dst,
                                      const LatticeMorphism& m);

}  // namespace nabla
