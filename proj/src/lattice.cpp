#include "nabla/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace nabla {

std::string LatticeFailure::describe() const {
  std::ostringstream os;
  switch (kind) {
    case NoMeet: os << "NoMeet(" << a << ", " << b << ")"; break;
    case NoJoin: os << "NoJoin(" << a << ", " << b << ")"; break;
    case NoBot: os << "NoBot"; break;
    case NoTop: os << "NoTop"; break;
  }
  return os.str();
}

std::string ResidualFailure::describe() const {
  std::ostringstream os;
  os << "NoResidual(" << a << ", " << b << ")";
  return os.str();
}

namespace {

// Greatest element of the subset S, i.e. the m in S with S <= down[m];
// unique by antisymmetry. Returns -1 when S has none or is not principal
// when require_principal is set.
int greatest_of(const FinitePoset& p, Mask s, bool require_principal) {
  for (int m = 0; m < p.n; ++m) {
    if (!mask_has(s, m)) continue;
    if (require_principal) {
      if (p.down[m] == s) return m;
    } else {
      if (mask_subset(s, p.down[m])) return m;
    }
  }
  return -1;
}

int least_of(const FinitePoset& p, Mask s) {
  for (int m = 0; m < p.n; ++m)
    if (mask_has(s, m) && mask_subset(s, p.up[m])) return m;
  return -1;
}

}  // namespace

Result<FiniteLattice, LatticeFailure> lattice_from_poset(const FinitePoset& p) {
  FiniteLattice l;
  l.poset = p;
  const int n = p.n;
  if (n == 0) return LatticeFailure{LatticeFailure::NoBot};

  Mask all = full_mask(n);
  int bot = least_of(p, all);
  if (bot < 0) return LatticeFailure{LatticeFailure::NoBot};
  int top = greatest_of(p, all, false);
  if (top < 0) return LatticeFailure{LatticeFailure::NoTop};
  l.bot = bot;
  l.top = top;

  l.meet.assign(n, std::vector<int>(n, -1));
  l.join.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = greatest_of(p, p.down[a] & p.down[b], false);
      if (m < 0) return LatticeFailure{LatticeFailure::NoMeet, a, b};
      l.meet[a][b] = m;
      int j = least_of(p, p.up[a] & p.up[b]);
      if (j < 0) return LatticeFailure{LatticeFailure::NoJoin, a, b};
      l.join[a][b] = j;
    }
  return l;
}

DistributivityReport is_distributive(const FiniteLattice& l) {
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = l.meet[a][l.join[b][c]];
        int rhs = l.join[l.meet[a][b]][l.meet[a][c]];
        if (lhs != rhs) return {false, {a, b, c}};
      }
  return {true, {}};
}

Result<std::vector<std::vector<int>>, ResidualFailure> try_heyting_implication(
    const FiniteLattice& l) {
  const int n = l.size();
  std::vector<std::vector<int>> imp(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mask s = 0;
      for (int c = 0; c < n; ++c)
        if (l.leq(l.meet[c][a], b)) s |= Mask{1} << c;
      // {c | c /\ a <= b} is down-closed since meet is monotone, so only a
      // greatest element can be missing.
      int m = greatest_of(l.poset, s, true);
      if (m < 0) return ResidualFailure{a, b};
      imp[a][b] = m;
    }
  return imp;
}

int UpsetLattice::index_of(Mask m) const {
  auto it = std::lower_bound(upset_of.begin(), upset_of.end(), m);
  if (it == upset_of.end() || *it != m) return -1;
  return static_cast<int>(it - upset_of.begin());
}

UpsetLattice upset_lattice(const FinitePoset& p) {
  if (p.n > 20)
    throw ValidationError("TooLarge", "upset lattice is capped at 20 base points");
  std::vector<Mask> ups;
  const Mask all = full_mask(p.n);
  for (Mask s = 0;; ++s) {
    bool closed = true;
    for (int a = 0; a < p.n && closed; ++a)
      if (mask_has(s, a) && !mask_subset(p.up[a], s)) closed = false;
    if (closed) ups.push_back(s);
    if (s == all) break;
  }

  const int m = static_cast<int>(ups.size());
  std::vector<std::vector<int>> leq(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[i][j] = mask_subset(ups[i], ups[j]);

  auto poset = validate_poset(leq);
  auto lattice = lattice_from_poset(poset.value());

  UpsetLattice out{lattice.value(), std::move(ups)};
  // Meet and join of upsets must be intersection and union.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (out.upset_of[out.lattice.meet[i][j]] != (out.upset_of[i] & out.upset_of[j]) ||
          out.upset_of[out.lattice.join[i][j]] != (out.upset_of[i] | out.upset_of[j]))
        throw ValidationError("InternalInconsistency",
                              "upset lattice operations disagree with set operations");
    }
  return out;
}

std::vector<int> join_irreducibles(const FiniteLattice& l) {
  std::vector<int> out;
  const int n = l.size();
  for (int j = 0; j < n; ++j) {
    if (j == l.bot) continue;
    bool irreducible = true;
    for (int a = 0; a < n && irreducible; ++a)
      for (int b = 0; b < n && irreducible; ++b)
        if (l.poset.lt(a, j) && l.poset.lt(b, j) && l.join[a][b] == j)
          irreducible = false;
    if (irreducible) out.push_back(j);
  }
  return out;
}

std::vector<Mask> prime_filters(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<Mask> out;
  // In a finite distributive lattice the prime filters are exactly the
  // principal upsets of join-irreducibles; the subset enumeration below would
  // give the same list but is exponential. The two routes are cross-checked
  // against each other in the test suite.
  if (is_distributive(l).distributive) {
    for (int j : join_irreducibles(l)) out.push_back(l.poset.up[j]);
    std::sort(out.begin(), out.end());
    return out;
  }
  if (n > 16)
    throw ValidationError("TooLarge",
                          "prime filter enumeration for non-distributive "
                          "lattices is capped at 16 elements");
  const Mask all = full_mask(n);
  for (Mask s = 1; s < all; ++s) {
    bool good = true;
    for (int a = 0; a < n && good; ++a) {
      if (!mask_has(s, a)) continue;
      if (!mask_subset(l.poset.up[a], s)) good = false;  // upward closed
      for (int b = 0; b < n && good; ++b)
        if (mask_has(s, b) && !mask_has(s, l.meet[a][b])) good = false;
    }
    for (int a = 0; a < n && good; ++a)
      for (int b = 0; b < n && good; ++b)
        if (mask_has(s, l.join[a][b]) && !mask_has(s, a) && !mask_has(s, b))
          good = false;
    if (good) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MorphismReport check_lattice_morphism(const FiniteLattice& src,
                                      const FiniteLattice& dst,
                                      const LatticeMorphism& m) {
  const int n = src.size();
  std::ostringstream os;
  if (static_cast<int>(m.map.size()) != n) return {false, "map has wrong arity"};
  for (int x : m.map)
    if (x < 0 || x >= dst.size()) return {false, "map image out of range"};
  if (m.map[src.bot] != dst.bot) return {false, "bot not preserved"};
  if (m.map[src.top] != dst.top) return {false, "top not preserved"};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (m.map[src.meet[a][b]] != dst.meet[m.map[a]][m.map[b]]) {
        os << "meet not preserved at (" << a << ", " << b << ")";
        return {false, os.str()};
      }
      if (m.map[src.join[a][b]] != dst.join[m.map[a]][m.map[b]]) {
        os << "join not preserved at (" << a << ", " << b << ")";
        return {false, os.str()};
      }
    }
  return {true, ""};
}

}  // namespace nabla
