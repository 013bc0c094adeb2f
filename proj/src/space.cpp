#include "nabla/space.hpp"

#include <algorithm>
#include <sstream>

namespace nabla {

bool FiniteSpace::is_open(Mask m) const {
  return std::binary_search(opens.begin(), opens.end(), m);
}

FiniteSpace make_space(int n, std::vector<Mask> opens) {
  if (n > 30) throw ValidationError("TooLarge", "spaces are capped at 30 points");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  FiniteSpace s{n, std::move(opens)};
  const Mask all = full_mask(n);
  for (Mask m : s.opens)
    if (!mask_subset(m, all))
      throw ValidationError("OutOfRange", "open set exceeds the point count");
  if (!s.is_open(0) || !s.is_open(all))
    throw ValidationError("NotATopology", "empty or full set is missing");
  for (Mask a : s.opens)
    for (Mask b : s.opens) {
      if (!s.is_open(a | b))
        throw ValidationError("NotATopology", "family not closed under union");
      if (!s.is_open(a & b))
        throw ValidationError("NotATopology", "family not closed under intersection");
    }
  return s;
}

Mask closure(const FiniteSpace& s, Mask y) {
  // complement of the largest open disjoint from y
  Mask best = 0;
  for (Mask u : s.opens)
    if ((u & y) == 0) best |= u;
  return ~best & full_mask(s.n);
}

Mask saturation(const FiniteSpace& s, Mask y) {
  Mask out = full_mask(s.n);
  for (Mask u : s.opens)
    if (mask_subset(y, u)) out &= u;
  return out;
}

bool specializes(const FiniteSpace& s, int x, int y) {
  for (Mask u : s.opens)
    if (mask_has(u, x) && !mask_has(u, y)) return false;
  return true;
}

std::optional<std::vector<int>> finite_subcover(const FiniteSpace& s, Mask k,
                                                const std::vector<int>& cover) {
  Mask covered = 0;
  for (int i : cover) covered |= s.opens[i];
  if (!mask_subset(k, covered)) return std::nullopt;
  // Greedy removal keeps the result minimal and deterministic.
  std::vector<int> keep = cover;
  for (std::size_t i = 0; i < keep.size();) {
    Mask rest = 0;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (j != i) rest |= s.opens[keep[j]];
    if (mask_subset(k, rest)) keep.erase(keep.begin() + static_cast<long>(i));
    else ++i;
  }
  return keep;
}

bool subset_compact(const FiniteSpace& s, Mask k) {
  std::vector<int> everything;
  for (int i = 0; i < static_cast<int>(s.opens.size()); ++i) everything.push_back(i);
  return finite_subcover(s, k, everything).has_value();
}

bool spectral_subset(const FiniteSpace& s, Mask y) {
  // subspace topology
  std::vector<Mask> sub;
  for (Mask u : s.opens) sub.push_back(u & y);
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());

  // renumber the points of y so the subspace is a FiniteSpace
  auto pts = mask_elements(y);
  const int m = static_cast<int>(pts.size());
  auto compress = [&](Mask u) {
    Mask out = 0;
    for (int i = 0; i < m; ++i)
      if (mask_has(u, pts[i])) out |= Mask{1} << i;
    return out;
  };
  std::vector<Mask> copens;
  for (Mask u : sub) copens.push_back(compress(u));
  FiniteSpace sp = make_space(m, std::move(copens));
  if (!spectral_check(sp).ok) return false;
  // inclusion is spectral: preimages (u & y) of compact opens stay compact
  for (Mask u : s.opens)
    if (subset_compact(sp, compress(u & y)) == false) return false;
  return true;
}

bool doubly_spectral(const FiniteSpace& s, Mask y) {
  return spectral_subset(s, y) && spectral_subset(s, ~y & full_mask(s.n));
}

std::string SpectralReport::describe() const {
  if (ok) return "spectral";
  std::ostringstream os;
  if (!t0 && t0_witness)
    os << "NotT0: points " << t0_witness->first << " and " << t0_witness->second
       << " are topologically indistinguishable";
  else
    os << "not spectral (sober=" << sober << ", compact=" << compact
       << ", basis=" << compact_open_basis << ")";
  return os.str();
}

SpectralReport spectral_check(const FiniteSpace& s) {
  SpectralReport rep;
  rep.t0 = true;
  for (int x = 0; x < s.n && rep.t0; ++x)
    for (int y = x + 1; y < s.n && rep.t0; ++y)
      if (specializes(s, x, y) && specializes(s, y, x)) {
        rep.t0 = false;
        rep.t0_witness = {x, y};
      }
  if (!rep.t0) return rep;

  // Sober: every irreducible closed set is the closure of exactly one point.
  std::vector<Mask> closeds;
  for (Mask u : s.opens) closeds.push_back(~u & full_mask(s.n));
  std::sort(closeds.begin(), closeds.end());
  rep.sober = true;
  for (Mask c : closeds) {
    if (c == 0) continue;
    bool irreducible = true;
    for (Mask a : closeds) {
      if (!irreducible) break;
      if (a == c || !mask_subset(a, c)) continue;
      for (Mask b : closeds)
        if (b != c && mask_subset(b, c) && (a | b) == c) {
          irreducible = false;
          break;
        }
    }
    if (!irreducible) continue;
    int generic = -1;
    for (int x : mask_elements(c))
      if (closure(s, Mask{1} << x) == c) {
        if (generic >= 0) { rep.sober = false; break; }
        generic = x;
      }
    if (generic < 0) rep.sober = false;
    if (!rep.sober) break;
  }

  rep.compact = subset_compact(s, full_mask(s.n));

  rep.compact_open_basis = true;
  for (Mask u : s.opens) {
    Mask unionized = 0;
    for (Mask v : s.opens)
      if (mask_subset(v, u) && subset_compact(s, v)) unionized |= v;
    if (unionized != u) { rep.compact_open_basis = false; break; }
  }

  rep.ok = rep.t0 && rep.sober && rep.compact && rep.compact_open_basis;
  return rep;
}

FiniteSpace to_spectral(const FinitePoset& p) {
  if (p.n > 20)
    throw ValidationError("TooLarge", "alexandrov spaces are capped at 20 points");
  std::vector<Mask> opens;
  const Mask all = full_mask(p.n);
  for (Mask s = 0;; ++s) {
    bool upset = true;
    for (int a = 0; a < p.n && upset; ++a)
      if (mask_has(s, a) && !mask_subset(p.up[a], s)) upset = false;
    if (upset) opens.push_back(s);
    if (s == all) break;
  }
  return make_space(p.n, std::move(opens));
}

Result<FinitePoset, NotT0> from_spectral(const FiniteSpace& s) {
  std::vector<Mask> up(s.n, 0);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (specializes(s, x, y)) up[x] |= Mask{1} << y;
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y)
      if (mask_has(up[x], y) && mask_has(up[y], x)) return NotT0{x, y};
  return poset_from_up_rows(std::move(up));
}

}  // namespace nabla
