#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nabla/poset.hpp"

namespace nabla {

/// A finite topological space given by the full family of its open sets.
/// The family is kept sorted; it must contain the empty and full sets and be
/// closed under binary union and intersection.
struct FiniteSpace {
  int n = 0;
  std::vector<Mask> opens;

  bool is_open(Mask m) const;
  bool is_closed(Mask m) const { return is_open(~m & full_mask(n)); }
};

/// Validates the open-family axioms; throws ValidationError otherwise.
FiniteSpace make_space(int n, std::vector<Mask> opens);

/// Smallest closed superset of y.
Mask closure(const FiniteSpace& s, Mask y);

/// Intersection of all opens containing y (the saturation of y).
Mask saturation(const FiniteSpace& s, Mask y);

/// Specialization order: x <= y iff x lies in the closure of {y}.
/// Equivalently every open containing x contains y.
bool specializes(const FiniteSpace& s, int x, int y);

/// Explicit finite-subcover computation: a minimal subfamily of `cover`
/// (given as indices into s.opens) still covering k, or nullopt when `cover`
/// does not cover k at all.
std::optional<std::vector<int>> finite_subcover(const FiniteSpace& s, Mask k,
                                                const std::vector<int>& cover);

/// Compactness of a subset, decided by materializing a finite subcover of the
/// family of all opens meeting it. Every subset of a finite space passes;
/// the routine exists so the property is computed rather than assumed.
bool subset_compact(const FiniteSpace& s, Mask k);

/// Y with the subspace topology is spectral and the inclusion is a spectral
/// map (preimages of compact opens are compact).
bool spectral_subset(const FiniteSpace& s, Mask y);

bool doubly_spectral(const FiniteSpace& s, Mask y);

struct SpectralReport {
  bool ok = false;
  bool t0 = false, sober = false, compact = false, compact_open_basis = false;
  std::optional<std::pair<int, int>> t0_witness;  // indistinguishable pair
  std::string describe() const;
};

/// T0 plus the facts that hold for every finite T0 space: sobriety,
/// compactness, and a basis of compact opens. Each clause is checked by its
/// definition on the stored family.
SpectralReport spectral_check(const FiniteSpace& s);

/// Alexandrov space of a poset: the opens are exactly the upsets.
FiniteSpace to_spectral(const FinitePoset& p);

struct NotT0 {
  int x = -1, y = -1;
};

/// Specialization order of a space; fails with a witness when the space is
/// not T0 (specialization not antisymmetric).
Result<FinitePoset, NotT0> from_spectral(const FiniteSpace& s);

}  // namespace nabla
