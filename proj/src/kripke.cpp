#include "nabla/kripke.hpp"

#include <algorithm>
#include <sstream>

namespace nabla {

std::string CompatibilityViolation::describe() const {
  std::ostringstream os;
  os << "NotCompatible: " << kp << " <= " << k << ", (" << k << ", " << l
     << ") in R, " << l << " <= " << lp << " but (" << kp << ", " << lp
     << ") not in R";
  return os.str();
}

Result<KripkeFrame, CompatibilityViolation> validate_frame(
    const FinitePoset& p, const std::vector<std::vector<int>>& relation) {
  if (static_cast<int>(relation.size()) != p.n)
    throw ValidationError("NotSquare", "relation must be n x n");
  std::vector<Mask> rows(p.n, 0);
  for (int a = 0; a < p.n; ++a) {
    if (static_cast<int>(relation[a].size()) != p.n)
      throw ValidationError("NotSquare", "relation must be n x n");
    for (int b = 0; b < p.n; ++b)
      if (relation[a][b]) rows[a] |= Mask{1} << b;
  }
  return validate_frame_masks(p, rows);
}

Result<KripkeFrame, CompatibilityViolation> validate_frame_masks(
    const FinitePoset& p, const std::vector<Mask>& r_succ) {
  for (int k = 0; k < p.n; ++k)
    for (int l = 0; l < p.n; ++l) {
      if (!mask_has(r_succ[k], l)) continue;
      for (int kp = 0; kp < p.n; ++kp) {
        if (!p.leq(kp, k)) continue;
        // need up[l] subset of r_succ[kp]
        if (!mask_subset(p.up[l], r_succ[kp])) {
          Mask bad = p.up[l] & ~r_succ[kp];
          return CompatibilityViolation{kp, k, l, mask_elements(bad)[0]};
        }
      }
    }
  KripkeFrame f;
  f.poset = p;
  f.r_succ = r_succ;
  f.r_pred.assign(p.n, 0);
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (mask_has(r_succ[a], b)) f.r_pred[b] |= Mask{1} << a;
  return f;
}

Result<std::vector<int>, int> normality_witness(const KripkeFrame& f) {
  const auto& p = f.poset;
  std::vector<int> pi(p.n, -1);
  for (int y = 0; y < p.n; ++y) {
    int m = -1;
    for (int x = 0; x < p.n; ++x)
      if (p.down[x] == f.r_pred[y]) { m = x; break; }
    if (m < 0) return y;  // R^-1[y] is not a principal downset
    pi[y] = m;
  }
#ifndef NDEBUG
  for (int y = 0; y < p.n; ++y)
    for (int yp = 0; yp < p.n; ++yp)
      if (p.leq(y, yp) && !p.leq(pi[y], pi[yp]))
        throw ValidationError("InternalInconsistency",
                              "normality witness is not order-preserving");
#endif
  return pi;
}

FrameConditions frame_conditions(const KripkeFrame& f) {
  FrameConditions out;
  const auto& p = f.poset;
  const int n = p.n;
  std::ostringstream os;

  auto pi = normality_witness(f);
  if (pi.ok()) {
    out.tags.insert(Variety::N);
    out.witness = pi.value();
  } else {
    os.str("");
    os << "R^-1[" << pi.error() << "] is not a principal downset";
    out.failures[Variety::N] = os.str();
  }

  int right_bad = -1;
  for (int k = 0; k < n && right_bad < 0; ++k)
    if (!mask_subset(p.up[k], f.r_succ[k])) right_bad = k;
  if (right_bad < 0) out.tags.insert(Variety::R);
  else {
    os.str("");
    os << "up(" << right_bad << ") not contained in R[" << right_bad << "]";
    out.failures[Variety::R] = os.str();
  }

  int left_bad = -1;
  for (int k = 0; k < n && left_bad < 0; ++k)
    if (!mask_subset(f.r_succ[k], p.up[k])) left_bad = k;
  if (left_bad < 0) out.tags.insert(Variety::L);
  else {
    os.str("");
    os << "R[" << left_bad << "] not contained in up(" << left_bad << ")";
    out.failures[Variety::L] = os.str();
  }

  // Fa: every x has y with (y, x) in R and R[y] inside up(x).
  int fa_bad = -1;
  for (int x = 0; x < n && fa_bad < 0; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y)
      if (f.related(y, x) && mask_subset(f.r_succ[y], p.up[x])) found = true;
    if (!found) fa_bad = x;
  }
  if (fa_bad < 0) out.tags.insert(Variety::Fa);
  else {
    os.str("");
    os << "no witness for faithfulness at " << fa_bad;
    out.failures[Variety::Fa] = os.str();
  }

  // Fu: every x has y with (x, y) in R and R^-1[y] inside down(x).
  int fu_bad = -1;
  for (int x = 0; x < n && fu_bad < 0; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y)
      if (f.related(x, y) && mask_subset(f.r_pred[y], p.down[x])) found = true;
    if (!found) fu_bad = x;
  }
  if (fu_bad < 0) out.tags.insert(Variety::Fu);
  else {
    os.str("");
    os << "no witness for fullness at " << fu_bad;
    out.failures[Variety::Fu] = os.str();
  }

  return out;
}

int UpsetAlgebra::index_of(Mask m) const {
  auto it = std::lower_bound(upset_of.begin(), upset_of.end(), m);
  if (it == upset_of.end() || *it != m) return -1;
  return static_cast<int>(it - upset_of.begin());
}

UpsetAlgebra upset_algebra(const KripkeFrame& f) {
  UpsetLattice ul = upset_lattice(f.poset);
  const int m = ul.lattice.size();
  const int n = f.points();

  NablaAlgebra alg;
  alg.lattice = ul.lattice;
  alg.nabla.resize(m);
  for (int i = 0; i < m; ++i) {
    Mask nab = 0;
    for (int y : mask_elements(ul.upset_of[i])) nab |= f.r_succ[y];
    int idx = ul.index_of(nab);
    if (idx < 0)
      throw ValidationError("InternalInconsistency", "nabla left the upsets");
    alg.nabla[i] = idx;
  }
  alg.arrow.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Mask arr = 0;
      for (int x = 0; x < n; ++x) {
        bool in = true;
        for (int y : mask_elements(f.r_succ[x] & ul.upset_of[i]))
          if (!mask_has(ul.upset_of[j], y)) { in = false; break; }
        if (in) arr |= Mask{1} << x;
      }
      int idx = ul.index_of(arr);
      if (idx < 0)
        throw ValidationError("InternalInconsistency", "arrow left the upsets");
      alg.arrow[i][j] = idx;
    }
  return {std::move(alg), std::move(ul.upset_of)};
}

Result<PrimeFrame, NotDistributive> prime_frame(const NablaAlgebra& a) {
  auto dist = is_distributive(a.lattice);
  if (!dist.distributive) return NotDistributive{dist.witness};

  auto filters = prime_filters(a.lattice);
  const int m = static_cast<int>(filters.size());
  std::vector<Mask> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (mask_subset(filters[i], filters[j])) up[i] |= Mask{1} << j;
  FinitePoset p = poset_from_up_rows(std::move(up));

  std::vector<Mask> r(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool rel = true;
      for (int x : mask_elements(filters[i]))
        if (!mask_has(filters[j], a.nabla[x])) { rel = false; break; }
      if (rel) r[i] |= Mask{1} << j;
    }
  auto frame = validate_frame_masks(p, r);
  if (!frame.ok())
    throw ValidationError("InternalInconsistency",
                          "prime frame relation is not compatible");
  return PrimeFrame{frame.value(), std::move(filters)};
}

Result<CanonicalEmbedding, NotDistributive> canonical_embedding(
    const NablaAlgebra& a) {
  auto pf = prime_frame(a);
  if (!pf.ok()) return pf.error();
  UpsetAlgebra target = upset_algebra(pf.value().frame);

  const int n = a.size();
  const auto& filters = pf.value().filter_of;
  NablaMorphism emb;
  emb.heyting = a.explicit_heyting;
  emb.map.resize(n);
  for (int x = 0; x < n; ++x) {
    Mask s = 0;
    for (int i = 0; i < static_cast<int>(filters.size()); ++i)
      if (mask_has(filters[i], x)) s |= Mask{1} << i;
    int idx = target.index_of(s);
    if (idx < 0)
      throw ValidationError("InternalInconsistency",
                            "canonical image is not an upset of prime filters");
    emb.map[x] = idx;
  }
  return CanonicalEmbedding{std::move(pf.value()), std::move(target), std::move(emb)};
}

MorphismReport check_kripke_morphism(const std::vector<int>& map,
                                     const KripkeFrame& f, const KripkeFrame& g,
                                     bool heyting) {
  const int n = f.points();
  const int m = g.points();
  std::ostringstream os;
  if (static_cast<int>(map.size()) != n) return {false, "map has wrong arity"};
  for (int x : map)
    if (x < 0 || x >= m) return {false, "map image out of range"};

  MorphismReport result{true, ""};
  for (int k = 0; k < n && result.ok; ++k)
    for (int l = 0; l < n && result.ok; ++l)
      if (f.poset.leq(k, l) && !g.poset.leq(map[k], map[l])) {
        os.str("");
        os << "order not preserved at (" << k << ", " << l << ")";
        result = {false, os.str()};
      }
  for (int k = 0; k < n && result.ok; ++k)
    for (int l = 0; l < n && result.ok; ++l)
      if (f.related(k, l) && !g.related(map[k], map[l])) {
        os.str("");
        os << "R not preserved at (" << k << ", " << l << ")";
        result = {false, os.str()};
      }
  // Back condition: R'-successors of f(k) are covered by images of
  // R-successors of k.
  for (int k = 0; k < n && result.ok; ++k)
    for (int lp = 0; lp < m && result.ok; ++lp) {
      if (!g.related(map[k], lp)) continue;
      bool found = false;
      for (int l = 0; l < n && !found; ++l)
        if (f.related(k, l) && map[l] == lp) found = true;
      if (!found) {
        os.str("");
        os << "successor back condition fails at (" << k << ", " << lp << ")";
        result = {false, os.str()};
      }
    }
  // Back condition: R'-predecessors of f(k) are bounded by images of
  // R-predecessors of k.
  for (int k = 0; k < n && result.ok; ++k)
    for (int lp = 0; lp < m && result.ok; ++lp) {
      if (!g.related(lp, map[k])) continue;
      bool found = false;
      for (int l = 0; l < n && !found; ++l)
        if (f.related(l, k) && g.poset.leq(lp, map[l])) found = true;
      if (!found) {
        os.str("");
        os << "predecessor back condition fails at (" << k << ", " << lp << ")";
        result = {false, os.str()};
      }
    }

  // Cross-check on normal frames: the morphism clauses other than order
  // preservation are equivalent to f.pi = pi'.f together with
  // pi'^-1(up f(k)) = f[pi^-1(up k)].
  auto pf = normality_witness(f);
  auto pg = normality_witness(g);
  bool order_ok = true;
  for (int k = 0; k < n && order_ok; ++k)
    for (int l = 0; l < n && order_ok; ++l)
      if (f.poset.leq(k, l) && !g.poset.leq(map[k], map[l])) order_ok = false;
  if (pf.ok() && pg.ok() && order_ok) {
    const auto& pi = pf.value();
    const auto& pip = pg.value();
    bool eq = true;
    for (int k = 0; k < n && eq; ++k)
      if (map[pi[k]] != pip[map[k]]) eq = false;
    for (int k = 0; k < n && eq; ++k) {
      Mask lhs = 0;  // pi'^-1(up f(k))
      for (int y = 0; y < m; ++y)
        if (g.poset.leq(map[k], pip[y])) lhs |= Mask{1} << y;
      Mask rhs = 0;  // f[pi^-1(up k)]
      for (int y = 0; y < n; ++y)
        if (f.poset.leq(k, pi[y])) rhs |= Mask{1} << map[y];
      if (lhs != rhs) eq = false;
    }
    if (eq != result.ok)
      throw ValidationError("InternalInconsistency",
                            "relational and witness-level morphism "
                            "characterizations disagree on normal frames");
  }

  if (!result.ok) return result;

  if (heyting) {
    for (int k = 0; k < n; ++k)
      for (int lp = 0; lp < m; ++lp) {
        if (!g.poset.leq(map[k], lp)) continue;
        bool found = false;
        for (int l = 0; l < n && !found; ++l)
          if (f.poset.leq(k, l) && map[l] == lp) found = true;
        if (!found) {
          os.str("");
          os << "heyting back condition fails at (" << k << ", " << lp << ")";
          return {false, os.str()};
        }
      }
  }
  return {true, ""};
}

}  // namespace nabla
