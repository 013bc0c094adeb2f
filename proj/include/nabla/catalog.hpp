#pragma once

#include <vector>

#include "nabla/kripke.hpp"
#include "nabla/ring.hpp"
#include "nabla/semantics.hpp"

namespace nabla {

/// Enumeration bounds. The environment variable NABLA_MAX_SIZE overrides the
/// lattice/poset cap when set.
struct CatalogCaps {
  int max_poset = 6;             // hard cap for poset/lattice enumeration
  int max_frame_exhaustive = 4;  // all compatible relations up to this size
  int max_frame_structured = 6;  // structured families beyond that

  static CatalogCaps from_env();
};

/// All labeled posets on n elements, ascending in (flattened) order-matrix
/// encoding. Built incrementally by extending each poset on n-1 elements
/// with a downset/upset pair for the new greatest index.
std::vector<FinitePoset> enumerate_posets(int n);

/// The posets among enumerate_posets(n) that carry a lattice.
std::vector<FiniteLattice> enumerate_lattices(int n);

/// Least relabeling of the order matrix over all permutations; equal keys
/// mean isomorphic posets. Used to write one catalog file per isomorphism
/// class.
std::vector<Mask> canonical_poset_key(const FinitePoset& p);

/// Every compatible relation on the poset, ascending in relation-mask order.
/// Compatible relations are exactly the upsets of (P^op x P); enumerated by
/// filtering all subsets, so only usable for small posets.
std::vector<KripkeFrame> enumerate_frames(const FinitePoset& p);

/// Structured frame families on a poset: the empty relation, the order, the
/// full relation, and every normal frame (one per monotone self-map).
/// Deterministic and duplicate-free.
std::vector<KripkeFrame> structured_frames(const FinitePoset& p);

/// Verified nabla-algebras over every lattice of size <= n, classification
/// attached, in (lattice, nabla-table) order.
std::vector<ModelEntry> algebra_catalog(int max_size);

/// Z/n for n <= 16 and binary products of prime powers p^k <= 9.
std::vector<FiniteRing> ring_catalog();

/// Ring pairs suitable for exhaustive hom enumeration (both sides <= 12
/// elements keeps the sweep cheap).
std::vector<std::pair<const FiniteRing*, const FiniteRing*>> hom_catalog_pairs(
    const std::vector<FiniteRing>& rings, int max_size = 12);

}  // namespace nabla
