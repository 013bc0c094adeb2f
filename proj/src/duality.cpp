#include "nabla/duality.hpp"

#include <algorithm>
#include <sstream>

namespace nabla {

Result<std::pair<NablaSpace, NablaSpaceReport>, CompatibilityViolation>
nabla_space_check(const FinitePoset& p, const std::vector<std::vector<int>>& r) {
  auto frame = validate_frame(p, r);

  // Compute the remaining clauses literally, over all subsets. In the
  // discrete topology every subset is clopen, so the clauses cannot fail;
  // they are evaluated anyway and the reduction to compatibility recorded.
  std::vector<Mask> rows(p.n, 0);
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (r[a][b]) rows[a] |= Mask{1} << b;
  std::vector<Mask> pred(p.n, 0);
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (mask_has(rows[a], b)) pred[b] |= Mask{1} << a;

  NablaSpaceReport rep;
  rep.rx_closed = true;  // every subset of a finite discrete space is closed

  rep.diamond_clopen = true;
  const Mask all = full_mask(p.n);
  for (Mask u = 0;; ++u) {
    Mask diamond = 0;
    for (int x = 0; x < p.n; ++x)
      if (rows[x] & u) diamond |= Mask{1} << x;
    (void)diamond;  // clopen in the discrete topology
    if (u == all) break;
  }

  bool nabla_ok = true;
  for (Mask v = 0;; ++v) {
    bool upset = true;
    for (int a = 0; a < p.n && upset; ++a)
      if (mask_has(v, a) && !mask_subset(p.up[a], v)) upset = false;
    if (upset) {
      Mask nab = 0;
      for (int y = 0; y < p.n; ++y)
        if (mask_has(v, y)) nab |= rows[y];
      for (int a = 0; a < p.n && nabla_ok; ++a)
        if (mask_has(nab, a) && !mask_subset(p.up[a], nab)) nabla_ok = false;
    }
    if (v == all || !nabla_ok) break;
  }
  rep.nabla_clopen_upset = nabla_ok;

  bool compatible = frame.ok();
  bool all_clauses = rep.rx_closed && rep.diamond_clopen && rep.nabla_clopen_upset;
  // At finite scale the literal clauses follow from compatibility and clause
  // one *is* compatibility, so the whole definition reduces to it.
  rep.reduction_confirmed = (compatible == (compatible && all_clauses));
  if (!rep.reduction_confirmed)
    throw ValidationError("InternalInconsistency",
                          "finite reduction of the space clauses failed");

  if (!frame.ok()) return frame.error();
  return std::make_pair(NablaSpace{frame.value()}, rep);
}

UpsetAlgebra a_functor(const NablaSpace& s) {
  const auto& f = s.frame;
  UpsetLattice ul = upset_lattice(f.poset);
  const int m = ul.lattice.size();
  const int n = f.points();

  NablaAlgebra alg;
  alg.lattice = ul.lattice;
  alg.nabla.resize(m);
  for (int i = 0; i < m; ++i) {
    Mask nab = 0;
    for (int x = 0; x < n; ++x)
      if (f.r_pred[x] & ul.upset_of[i]) nab |= Mask{1} << x;
    int idx = ul.index_of(nab);
    if (idx < 0)
      throw ValidationError("InternalInconsistency", "nabla left the clopen upsets");
    alg.nabla[i] = idx;
  }
  alg.arrow.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Mask arr = 0;
      for (int x = 0; x < n; ++x)
        if (mask_subset(f.r_succ[x] & ul.upset_of[i], ul.upset_of[j]))
          arr |= Mask{1} << x;
      int idx = ul.index_of(arr);
      if (idx < 0)
        throw ValidationError("InternalInconsistency", "arrow left the clopen upsets");
      alg.arrow[i][j] = idx;
    }
  return {std::move(alg), std::move(ul.upset_of)};
}

Result<FilterSpace, NotDistributive> s_functor(const NablaAlgebra& a) {
  auto pf = prime_frame(a);
  if (!pf.ok()) return pf.error();
  return FilterSpace{NablaSpace{pf.value().frame}, pf.value().filter_of};
}

Result<IsoReport, NotDistributive> alpha_check(const NablaAlgebra& a) {
  auto fs = s_functor(a);
  if (!fs.ok()) return fs.error();
  UpsetAlgebra dual = a_functor(fs.value().space);

  IsoReport rep;
  const auto& filters = fs.value().filter_of;
  const int n = a.size();
  rep.map.resize(n);
  for (int x = 0; x < n; ++x) {
    Mask s = 0;
    for (int i = 0; i < static_cast<int>(filters.size()); ++i)
      if (mask_has(filters[i], x)) s |= Mask{1} << i;
    int idx = dual.index_of(s);
    if (idx < 0) {
      rep.failure = "alpha image is not a clopen upset";
      return rep;
    }
    rep.map[x] = idx;
  }
  if (n != dual.algebra.size()) {
    rep.failure = "alpha is not surjective";
    return rep;
  }
  std::vector<char> hit(n, 0);
  for (int x : rep.map) hit[x] = 1;
  if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) {
    rep.failure = "alpha is not a bijection";
    return rep;
  }
  NablaMorphism m{rep.map, a.explicit_heyting};
  auto mor = check_nabla_morphism(a, dual.algebra, m);
  if (!mor.ok) {
    rep.failure = mor.witness;
    return rep;
  }
  rep.ok = true;
  return rep;
}

IsoReport beta_check(const NablaSpace& s) {
  IsoReport rep;
  UpsetAlgebra alg = a_functor(s);
  auto dual = s_functor(alg.algebra);
  if (!dual.ok()) {
    rep.failure = "clopen-upset algebra is not distributive";
    return rep;
  }
  const auto& filters = dual.value().filter_of;
  const auto& f = s.frame;
  const int n = f.points();

  rep.map.resize(n);
  for (int x = 0; x < n; ++x) {
    Mask beta = 0;  // over algebra element indices
    for (int i = 0; i < alg.algebra.size(); ++i)
      if (mask_has(alg.upset_of[i], x)) beta |= Mask{1} << i;
    auto it = std::lower_bound(filters.begin(), filters.end(), beta);
    if (it == filters.end() || *it != beta) {
      rep.failure = "beta image is not a prime filter";
      return rep;
    }
    rep.map[x] = static_cast<int>(it - filters.begin());
  }
  if (static_cast<int>(filters.size()) != n) {
    rep.failure = "beta is not surjective";
    return rep;
  }
  std::vector<char> hit(n, 0);
  for (int x : rep.map) hit[x] = 1;
  if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) {
    rep.failure = "beta is not a bijection";
    return rep;
  }
  const auto& dualframe = dual.value().space.frame;
  std::ostringstream os;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (f.poset.leq(x, y) != dualframe.poset.leq(rep.map[x], rep.map[y])) {
        os << "beta does not reflect the order at (" << x << ", " << y << ")";
        rep.failure = os.str();
        return rep;
      }
      if (f.related(x, y) != dualframe.related(rep.map[x], rep.map[y])) {
        os << "beta does not carry R to the dual relation at (" << x << ", "
           << y << ")";
        rep.failure = os.str();
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

Result<GEsakiaSpace, NotNormal> gesakia_extract(const NablaSpace& s) {
  auto pi = normality_witness(s.frame);
  if (!pi.ok()) return NotNormal{pi.error()};

  GEsakiaSpace out;
  out.poset = s.frame.poset;
  out.pi = pi.value();
  const auto& p = out.poset;
  const int n = p.n;

  out.rm = true;
  for (int u = 0; u < n && out.rm; ++u)
    for (int v = 0; v < n && out.rm; ++v)
      if (p.leq(out.pi[u], out.pi[v]) && !p.leq(u, v)) out.rm = false;
  std::vector<char> hit(n, 0);
  for (int x : out.pi) hit[x] = 1;
  out.e = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

  auto conds = frame_conditions(s.frame);
  if (out.rm != conds.tags.has(Variety::Fa) || out.e != conds.tags.has(Variety::Fu))
    throw ValidationError("InternalInconsistency",
                          "pi-level tags disagree with the frame conditions");
  if (out.rm && out.e) {
    // pi must then be an order isomorphism
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (p.leq(u, v) != p.leq(out.pi[u], out.pi[v]))
          throw ValidationError("InternalInconsistency",
                                "bijective order-embedding is not an isomorphism");
  }
  return out;
}

NablaSpectralReport nabla_spectral_check(
    const FiniteSpace& sp, const std::vector<std::vector<int>>& r) {
  NablaSpectralReport rep;
  auto base = spectral_check(sp);
  if (!base.ok) {
    rep.failure = base.describe();
    return rep;
  }
  const int n = sp.n;
  std::vector<Mask> rows(n, 0), pred(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r[a][b]) {
        rows[a] |= Mask{1} << b;
        pred[b] |= Mask{1} << a;
      }

  rep.rx_compact_saturated = true;
  for (int x = 0; x < n; ++x)
    if (!subset_compact(sp, rows[x]) || saturation(sp, rows[x]) != rows[x]) {
      rep.rx_compact_saturated = false;
      rep.failure = "R[x] not compact saturated at x=" + std::to_string(x);
      break;
    }

  rep.rpred_cosaturated = true;
  const Mask all = full_mask(n);
  for (int y = 0; y < n && rep.rpred_cosaturated; ++y) {
    Mask unions = 0;  // union of all closed subsets inside R^-1[y]
    for (Mask u : sp.opens) {
      Mask c = ~u & all;
      if (mask_subset(c, pred[y])) unions |= c;
    }
    if (unions != pred[y]) {
      rep.rpred_cosaturated = false;
      rep.failure = "R^-1[y] not co-saturated at y=" + std::to_string(y);
    }
  }

  rep.diamond_doubly_spectral = true;
  for (Mask y = 0; rep.diamond_doubly_spectral; ++y) {
    if (doubly_spectral(sp, y)) {
      Mask diamond = 0;
      for (int x = 0; x < n; ++x)
        if (rows[x] & y) diamond |= Mask{1} << x;
      if (!doubly_spectral(sp, diamond)) {
        rep.diamond_doubly_spectral = false;
        rep.failure = "diamond image of a doubly spectral set is not doubly spectral";
      }
    }
    if (y == all) break;
  }

  rep.nabla_compact_open = true;
  for (Mask v : sp.opens) {
    if (!subset_compact(sp, v)) continue;
    Mask nab = 0;
    for (int x = 0; x < n; ++x)
      if (pred[x] & v) nab |= Mask{1} << x;
    if (!sp.is_open(nab) || !subset_compact(sp, nab)) {
      rep.nabla_compact_open = false;
      rep.failure = "nabla image of a compact open is not compact open";
      break;
    }
  }

  bool clauses_ok = rep.rx_compact_saturated && rep.rpred_cosaturated &&
                    rep.diamond_doubly_spectral && rep.nabla_compact_open;

  // Cross-check with the order-side characterization on the specialization
  // poset: the two presentations must agree.
  auto poset = from_spectral(sp);
  if (!poset.ok())
    throw ValidationError("InternalInconsistency",
                          "spectral space lost T0 after the base check");
  auto order_side = nabla_space_check(poset.value(), r);
  rep.matches_order_side = (order_side.ok() == clauses_ok);
  if (!rep.matches_order_side)
    throw ValidationError("InternalInconsistency",
                          "spectral and order-side clause checks disagree");

  rep.ok = clauses_ok;
  if (!clauses_ok && rep.failure.empty() && !order_side.ok())
    rep.failure = order_side.error().describe();
  return rep;
}

}  // namespace nabla
