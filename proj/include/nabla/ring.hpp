#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nabla/algebra.hpp"
#include "nabla/space.hpp"

namespace nabla {

/// Subsets of ring elements; rings may exceed 64 elements, so two words.
struct RingSet {
  std::array<std::uint64_t, 2> w{0, 0};

  bool has(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool subset_of(const RingSet& o) const {
    return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
  }
  RingSet operator&(const RingSet& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  RingSet operator|(const RingSet& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  bool operator==(const RingSet&) const = default;
  auto operator<=>(const RingSet& o) const {
    if (auto c = w[1] <=> o.w[1]; c != 0) return c;
    return w[0] <=> o.w[0];
  }
  int count() const;
  std::vector<int> elements() const;

  static RingSet of(const std::vector<int>& xs);
  static RingSet all(int n);
};

/// A finite commutative unital ring given by its addition and multiplication
/// tables; the axioms are verified exhaustively on construction.
struct FiniteRing {
  int n = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  std::vector<int> neg;
  int zero = 0;
  int one = 0;
  std::vector<std::string> labels;

  int sub(int a, int b) const { return add[a][neg[b]]; }
};

FiniteRing make_ring(std::vector<std::vector<int>> add,
                     std::vector<std::vector<int>> mul,
                     std::vector<std::string> labels = {});

FiniteRing zmod(int n);
FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b);

/// Least ideal containing the given elements: closure under subtraction and
/// multiplication by arbitrary ring elements.
RingSet ideal_generated(const FiniteRing& r, const RingSet& gens);

bool is_ideal(const FiniteRing& r, const RingSet& s);

/// All ideals, ascending; computed as the closure of the principal ideals
/// under ideal sum.
std::vector<RingSet> all_ideals(const FiniteRing& r);

/// Proper ideals with xy in I implying x in I or y in I, ascending.
std::vector<RingSet> prime_ideals(const FiniteRing& r);

/// Rad(I) = {x | some power of x lies in I}; cross-checked against the
/// intersection of the prime ideals containing I.
RingSet radical(const FiniteRing& r, const RingSet& ideal);

/// [J : I] = {x | for all y in I, xy in J}.
RingSet quotient_ideal(const FiniteRing& r, const RingSet& j, const RingSet& i);

/// Spec(R): points are the prime ideals, opens generated by
/// U_r = {P | r not in P}.
struct SpecSpace {
  FiniteSpace space;
  std::vector<RingSet> prime_of;  // point decoding
};

SpecSpace spec_space(const FiniteRing& r);

/// The lattice of radical ideals under inclusion (meet = intersection,
/// join = radical of sum). Distributive with Heyting implication [J : I];
/// both facts are verified on construction.
struct RadicalIdealLattice {
  FiniteLattice lattice;
  std::vector<RingSet> ideal_of;
  std::vector<std::vector<int>> heyting;  // equals quotient_ideal pointwise

  int index_of(const RingSet& s) const;
};

RadicalIdealLattice radical_ideal_lattice(const FiniteRing& r);

/// Mutually inverse lattice isomorphisms between the opens of Spec(R) and the
/// radical ideals:  I(U) = {r | r in P for all P outside U},
/// U(I) = {P | some x in I lies outside P}.
struct IUMaps {
  std::vector<int> i_of_open;    // open index -> radical ideal index
  std::vector<int> u_of_radical; // radical ideal index -> open index
};

IUMaps iu_maps(const FiniteRing& r, const SpecSpace& sp,
               const RadicalIdealLattice& ri);

struct RingHom {
  std::vector<int> map;
};

/// Checks additive/multiplicative/unit preservation.
MorphismReport check_ring_hom(const FiniteRing& src, const FiniteRing& dst,
                              const RingHom& h);

/// All unital ring homomorphisms src -> dst, in lexicographic map order.
std::vector<RingHom> enumerate_ring_homs(const FiniteRing& src,
                                         const FiniteRing& dst);

/// f_*(I) = Rad(<f[I]>) on radical ideals, and the preimage map; the
/// adjunction f_* -| f^-1 and the Spec-side factorization of f_* are
/// verified, throwing InternalInconsistency on mismatch.
struct IdealAdjunction {
  std::vector<int> pushforward;  // index map RI(src) -> RI(dst)
  std::vector<int> pullback;     // index map RI(dst) -> RI(src)
};

IdealAdjunction pushforward_pullback(const FiniteRing& src,
                                     const FiniteRing& dst, const RingHom& h);

/// Algebraic criteria for the spectrum map:
///  - spec_surjective: f(r) in <f[A]> forces r^n in A for some n >= 0
///    (A ranging over ideals, the closure of the subset quantifier);
///  - spec_embedding: every s in S has m >= 0 and r_1..r_k with s | f(r_i)
///    and s^m a linear combination of the f(r_i).
/// Each answer is cross-checked against the direct topological test on
/// Spec; disagreement throws InternalInconsistency.
struct HomCriteria {
  bool spec_surjective = false;
  bool spec_embedding = false;
  std::string surjective_witness;  // counterexample description when false
  std::string embedding_witness;
};

HomCriteria hom_criteria(const FiniteRing& src, const FiniteRing& dst,
                         const RingHom& h);

/// A semi-dynamic ring: rings R, S, a homomorphism pi : R -> S and an
/// explicit homeomorphism f : Spec(R) -> Spec(S) (validated, never searched).
struct SemiDynamicRing {
  FiniteRing r, s;
  RingHom pi;
  std::vector<int> f;  // prime index of R -> prime index of S
};

/// Validates the tuple; throws ValidationError when f is not a
/// homeomorphism or pi not a homomorphism.
SemiDynamicRing make_semi_dynamic_ring(FiniteRing r, FiniteRing s, RingHom pi,
                                       std::vector<int> f);

/// The nabla-algebra on RI(R) with nabla(I) = fhat(pi_*(I)) and
/// I -> J = pi^-1(ghat([J : I])), where fhat/ghat are the I-U transports of
/// the homeomorphism and its inverse. The result is verified; its tags must
/// contain D and N, and Fa/Fu must match the algebraic criteria for pi.
struct SemiDynamicAlgebra {
  NablaAlgebra algebra;
  RadicalIdealLattice carrier;
};

SemiDynamicAlgebra semi_dynamic_algebra(const SemiDynamicRing& sdr);

}  // namespace nabla
