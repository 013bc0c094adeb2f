#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nabla/algebra.hpp"

namespace nabla {

/// A Kripke frame: a poset with a relation R compatible with the order,
///   k' <= k, (k, l) in R, l <= l'  imply  (k', l') in R.
struct KripkeFrame {
  FinitePoset poset;
  std::vector<Mask> r_succ;  // r_succ[x] = {y | (x, y) in R}
  std::vector<Mask> r_pred;  // r_pred[y] = {x | (x, y) in R}

  bool related(int k, int l) const { return mask_has(r_succ[k], l); }
  int points() const { return poset.n; }
};

struct CompatibilityViolation {
  int kp = -1, k = -1, l = -1, lp = -1;
  std::string describe() const;
};

Result<KripkeFrame, CompatibilityViolation> validate_frame(
    const FinitePoset& p, const std::vector<std::vector<int>>& relation);

/// Same check over relation rows given as masks.
Result<KripkeFrame, CompatibilityViolation> validate_frame_masks(
    const FinitePoset& p, const std::vector<Mask>& r_succ);

/// Frame conditions N, R, L, Fa, Fu; the D/H slots of VarietySet stay unset.
struct FrameConditions {
  VarietySet tags;
  std::map<Variety, std::string> failures;
  std::optional<std::vector<int>> witness;  // pi, present iff N holds
};

FrameConditions frame_conditions(const KripkeFrame& f);

/// The unique pi with (x, y) in R iff x <= pi(y), if every R^-1[y] is a
/// principal downset; otherwise the first y violating that.
Result<std::vector<int>, int> normality_witness(const KripkeFrame& f);

/// The algebra of all upsets with
///   nabla(U)     = {x | exists y in U, (y, x) in R}
///   arrow(U, V)  = {x | for all y, (x, y) in R and y in U imply y in V}.
struct UpsetAlgebra {
  NablaAlgebra algebra;
  std::vector<Mask> upset_of;

  int index_of(Mask m) const;
};

UpsetAlgebra upset_algebra(const KripkeFrame& f);

struct NotDistributive {
  std::array<int, 3> witness{};
};

/// The frame of prime filters ordered by inclusion with
///   (P, Q) in R  iff  nabla[P] is contained in Q.
struct PrimeFrame {
  KripkeFrame frame;
  std::vector<Mask> filter_of;  // decoding of frame points
};

Result<PrimeFrame, NotDistributive> prime_frame(const NablaAlgebra& a);

/// The canonical map a |-> {P | a in P} into the upset algebra of the prime
/// frame; carries the explicit-Heyting flag of the source.
struct CanonicalEmbedding {
  PrimeFrame frame;
  UpsetAlgebra target;
  NablaMorphism embedding;
};

Result<CanonicalEmbedding, NotDistributive> canonical_embedding(
    const NablaAlgebra& a);

/// Kripke morphism check: order preservation, forward R-preservation, and the
/// two existential back conditions; a fourth clause when `heyting` is set.
/// When both frames are normal the answer is cross-checked against the
/// witness-level characterization (f . pi = pi' . f and the fiber condition);
/// disagreement throws InternalInconsistency.
MorphismReport check_kripke_morphism(const std::vector<int>& map,
                                     const KripkeFrame& f,
                                     const KripkeFrame& g, bool heyting);

}  // namespace nabla
