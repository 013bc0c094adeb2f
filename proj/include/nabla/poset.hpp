#pragma once

#include <array>
#include <string>
#include <vector>

#include "nabla/mask.hpp"
#include "nabla/result.hpp"

namespace nabla {

/// A finite poset on elements 0..n-1. The order relation is kept row-wise in
/// both directions as bit masks, so bound computations are single mask ops.
struct FinitePoset {
  int n = 0;
  std::vector<Mask> up;    // up[a]   = {b | a <= b}
  std::vector<Mask> down;  // down[a] = {b | b <= a}

  bool leq(int a, int b) const { return mask_has(up[a], b); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
};

struct PosetViolation {
  enum Kind { NotReflexive, NotAntisymmetric, NotTransitive } kind;
  std::array<int, 3> witness{};  // pair for the first two, triple otherwise
  std::string describe() const;
};

/// Checks reflexivity, antisymmetry and transitivity of a square 0/1 relation.
Result<FinitePoset, PosetViolation> validate_poset(
    const std::vector<std::vector<int>>& leq);

/// Builds a poset directly from up-rows that are already known to be a valid
/// order (internal constructions); asserts the axioms in debug builds.
FinitePoset poset_from_up_rows(std::vector<Mask> up);

/// Cover pairs (a, b) with a < b and nothing strictly between, in ascending
/// (a, b) order.
std::vector<std::pair<int, int>> cover_relation(const FinitePoset& p);

/// Hasse diagram of the poset in DOT syntax; covers only, deterministic.
std::string export_hasse(const FinitePoset& p,
                         const std::vector<std::string>& labels = {});

}  // namespace nabla
