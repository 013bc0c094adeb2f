#include "nabla/catalog.hpp"

#include <algorithm>
#include <cstdlib>

namespace nabla {

CatalogCaps CatalogCaps::from_env() {
  CatalogCaps caps;
  if (const char* env = std::getenv("NABLA_MAX_SIZE")) {
    int v = std::atoi(env);
    if (v >= 0) caps.max_poset = v;
  }
  return caps;
}

namespace {

// encoding used for deterministic ordering of posets of equal size
std::vector<Mask> up_rows_key(const FinitePoset& p) { return p.up; }

}  // namespace

std::vector<FinitePoset> enumerate_posets(int n) {
  if (n > 7)
    throw ValidationError("CapExceeded", "poset enumeration is capped at 7");
  std::vector<FinitePoset> cur;
  cur.push_back(poset_from_up_rows({}));  // the empty poset
  for (int k = 0; k < n; ++k) {
    std::vector<FinitePoset> next;
    for (const auto& p : cur) {
      // all downset/upset pairs for the new element k
      std::vector<Mask> downsets, upsets;
      const Mask all = full_mask(k);
      for (Mask s = 0;; ++s) {
        bool dc = true, uc = true;
        for (int a = 0; a < k; ++a) {
          if (mask_has(s, a) && !mask_subset(p.down[a], s)) dc = false;
          if (mask_has(s, a) && !mask_subset(p.up[a], s)) uc = false;
        }
        if (dc) downsets.push_back(s);
        if (uc) upsets.push_back(s);
        if (s == all) break;
      }
      for (Mask dset : downsets)
        for (Mask uset : upsets) {
          if (dset & uset) continue;
          // transitivity through the new point: d < new < u needs d < u
          bool ok = true;
          for (int a = 0; a < k && ok; ++a) {
            if (!mask_has(dset, a)) continue;
            if (!mask_subset(uset, p.up[a] & ~(Mask{1} << a))) ok = false;
          }
          if (!ok) continue;
          std::vector<Mask> up(k + 1);
          for (int a = 0; a < k; ++a) {
            up[a] = p.up[a];
            if (mask_has(dset, a)) up[a] |= Mask{1} << k;
          }
          up[k] = uset | (Mask{1} << k);
          next.push_back(poset_from_up_rows(std::move(up)));
        }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(),
            [](const FinitePoset& a, const FinitePoset& b) {
              return up_rows_key(a) < up_rows_key(b);
            });
  return cur;
}

std::vector<FiniteLattice> enumerate_lattices(int n) {
  std::vector<FiniteLattice> out;
  for (const auto& p : enumerate_posets(n)) {
    auto l = lattice_from_poset(p);
    if (l.ok()) out.push_back(l.value());
  }
  return out;
}

std::vector<Mask> canonical_poset_key(const FinitePoset& p) {
  std::vector<int> perm(p.n);
  for (int i = 0; i < p.n; ++i) perm[i] = i;
  std::vector<Mask> best;
  do {
    std::vector<Mask> relabeled(p.n, 0);
    for (int a = 0; a < p.n; ++a)
      for (int b = 0; b < p.n; ++b)
        if (p.leq(a, b)) relabeled[perm[a]] |= Mask{1} << perm[b];
    if (best.empty() || relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<KripkeFrame> enumerate_frames(const FinitePoset& p) {
  if (p.n > 4)
    throw ValidationError("CapExceeded",
                          "exhaustive frame enumeration is capped at 4 points");
  std::vector<KripkeFrame> out;
  const int cells = p.n * p.n;
  const Mask all = cells >= 64 ? ~Mask{0} : (Mask{1} << cells) - 1;
  for (Mask rel = 0;; ++rel) {
    std::vector<Mask> rows(p.n, 0);
    for (int a = 0; a < p.n; ++a)
      for (int b = 0; b < p.n; ++b)
        if (mask_has(rel, a * p.n + b)) rows[a] |= Mask{1} << b;
    auto f = validate_frame_masks(p, rows);
    if (f.ok()) out.push_back(f.value());
    if (rel == all) break;
  }
  return out;
}

std::vector<KripkeFrame> structured_frames(const FinitePoset& p) {
  std::vector<std::vector<Mask>> seen;
  std::vector<KripkeFrame> out;
  auto push = [&](const std::vector<Mask>& rows) {
    auto f = validate_frame_masks(p, rows);
    if (!f.ok()) return;
    if (std::find(seen.begin(), seen.end(), rows) != seen.end()) return;
    seen.push_back(rows);
    out.push_back(f.value());
  };

  push(std::vector<Mask>(p.n, 0));                 // empty relation
  push(p.up);                                      // the order itself
  push(std::vector<Mask>(p.n, full_mask(p.n)));    // the full relation

  // all normal frames: R = {(x, y) | x <= pi(y)} for monotone pi
  std::vector<int> pi(p.n, 0);
  while (true) {
    bool monotone = true;
    for (int x = 0; x < p.n && monotone; ++x)
      for (int y = 0; y < p.n && monotone; ++y)
        if (p.leq(x, y) && !p.leq(pi[x], pi[y])) monotone = false;
    if (monotone) {
      std::vector<Mask> rows(p.n, 0);
      for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y)
          if (p.leq(x, pi[y])) rows[x] |= Mask{1} << y;
      push(rows);
    }
    int i = p.n - 1;
    while (i >= 0 && pi[i] == p.n - 1) pi[i--] = 0;
    if (i < 0) break;
    ++pi[i];
  }
  return out;
}

std::vector<ModelEntry> algebra_catalog(int max_size) {
  std::vector<ModelEntry> out;
  for (int n = 1; n <= max_size; ++n)
    for (const auto& l : enumerate_lattices(n))
      for (auto& alg : enumerate_nabla_algebras(l)) {
        auto tags = classify(alg);
        out.push_back(ModelEntry{std::move(alg), tags.tags});
      }
  return out;
}

std::vector<FiniteRing> ring_catalog() {
  std::vector<FiniteRing> out;
  for (int n = 1; n <= 16; ++n) out.push_back(zmod(n));
  const int prime_powers[] = {2, 3, 4, 5, 7, 8, 9};
  for (int a : prime_powers)
    for (int b : prime_powers)
      if (a <= b) out.push_back(product_ring(zmod(a), zmod(b)));
  return out;
}

std::vector<std::pair<const FiniteRing*, const FiniteRing*>> hom_catalog_pairs(
    const std::vector<FiniteRing>& rings, int max_size) {
  std::vector<std::pair<const FiniteRing*, const FiniteRing*>> out;
  for (const auto& a : rings)
    for (const auto& b : rings)
      if (a.n <= max_size && b.n <= max_size) out.emplace_back(&a, &b);
  return out;
}

}  // namespace nabla
