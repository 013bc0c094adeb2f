#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nabla/lattice.hpp"

namespace nabla {

/// A nabla-algebra: a bounded lattice with a unary table `nabla` and a binary
/// table `arrow` tied together by the adjunction
///   nabla(c) /\ a <= b   iff   c <= arrow(a, b).
struct NablaAlgebra {
  FiniteLattice lattice;
  std::vector<int> nabla;
  std::vector<std::vector<int>> arrow;
  bool explicit_heyting = false;

  int size() const { return lattice.size(); }
};

/// arrow(a, b) as the greatest c with nabla(c) /\ a <= b. The candidate set
/// must be the full principal downset of that c, otherwise the adjunction
/// fails at (a, b) and the residual is reported missing.
Result<std::vector<std::vector<int>>, ResidualFailure> try_residual_from_nabla(
    const FiniteLattice& l, const std::vector<int>& nabla);

struct AdjunctionReport {
  bool ok = true;
  int a = -1, b = -1, c = -1;  // first violating triple
  // true: nabla(c) /\ a <= b held but c <= arrow(a, b) failed
  bool forward_failed = false;
  std::string describe() const;
};

AdjunctionReport verify_nabla_algebra(const NablaAlgebra& alg);

/// box(x) = arrow(top, x), the right adjoint of nabla.
std::vector<int> box_op(const NablaAlgebra& alg);

enum class Variety { D, H, N, R, L, Fa, Fu };

const char* variety_name(Variety v);

/// A subset of the seven algebra conditions.
class VarietySet {
 public:
  VarietySet() = default;
  static VarietySet of(std::initializer_list<Variety> vs);
  void insert(Variety v) { bits_ |= bit(v); }
  bool has(Variety v) const { return bits_ & bit(v); }
  bool subset_of(const VarietySet& o) const { return (bits_ & ~o.bits_) == 0; }
  VarietySet intersect(const VarietySet& o) const;
  VarietySet unite(const VarietySet& o) const;
  bool operator==(const VarietySet&) const = default;
  std::string to_string() const;  // e.g. "D,H,N"

 private:
  static unsigned bit(Variety v) { return 1u << static_cast<int>(v); }
  unsigned bits_ = 0;
};

struct Classification {
  VarietySet tags;
  std::map<Variety, std::string> failures;  // witness per absent tag
};

/// Decides each of the seven conditions. The alternative characterizations of
/// Fa (nabla surjective / box injective / nabla . box = id) and of Fu must
/// agree; disagreement throws InternalInconsistency, which only an unverified
/// algebra can trigger.
Classification classify(const NablaAlgebra& alg);

struct NablaMorphism {
  std::vector<int> map;
  bool heyting = false;  // also require preservation of the Heyting implication
};

MorphismReport check_nabla_morphism(const NablaAlgebra& src,
                                    const NablaAlgebra& dst,
                                    const NablaMorphism& m);

/// All nabla tables over the lattice admitting a total residual, paired with
/// their arrows, in lexicographic table order. Every returned algebra passes
/// verify_nabla_algebra by construction.
std::vector<NablaAlgebra> enumerate_nabla_algebras(const FiniteLattice& l);

/// Completion by normal ideals (downsets closed under join that equal the
/// lower bounds of their upper bounds) with
///   nabla(N) = \/ { down(nabla n) | n in N }
///   M -> N   = { x | for all m in M, nabla(x) /\ m in N }
/// and the embedding j(a) = down(a).
struct Completion {
  NablaAlgebra completed;
  NablaMorphism embedding;
  std::vector<Mask> ideal_of_index;  // decoding of completion elements
};

Completion dm_completion(const NablaAlgebra& alg);

}  // namespace nabla
