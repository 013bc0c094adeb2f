#include "nabla/ring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace nabla {

int RingSet::count() const {
  return std::popcount(w[0]) + std::popcount(w[1]);
}

std::vector<int> RingSet::elements() const {
  std::vector<int> out;
  for (int half = 0; half < 2; ++half) {
    std::uint64_t m = w[half];
    while (m) {
      out.push_back(std::countr_zero(m) + 64 * half);
      m &= m - 1;
    }
  }
  return out;
}

RingSet RingSet::of(const std::vector<int>& xs) {
  RingSet s;
  for (int x : xs) s.set(x);
  return s;
}

RingSet RingSet::all(int n) {
  RingSet s;
  for (int i = 0; i < n; ++i) s.set(i);
  return s;
}

FiniteRing make_ring(std::vector<std::vector<int>> add,
                     std::vector<std::vector<int>> mul,
                     std::vector<std::string> labels) {
  const int n = static_cast<int>(add.size());
  if (n == 0 || n > 128)
    throw ValidationError("TooLarge", "rings must have 1..128 elements");
  if (static_cast<int>(mul.size()) != n)
    throw ValidationError("NotSquare", "tables must agree in size");
  for (const auto& t : {std::cref(add), std::cref(mul)})
    for (const auto& row : t.get()) {
      if (static_cast<int>(row.size()) != n)
        throw ValidationError("NotSquare", "tables must be n x n");
      for (int x : row)
        if (x < 0 || x >= n)
          throw ValidationError("OutOfRange", "table entry out of range");
    }

  FiniteRing r;
  r.n = n;
  r.add = std::move(add);
  r.mul = std::move(mul);
  r.labels = std::move(labels);

  // locate zero and one
  int zero = -1, one = -1;
  for (int e = 0; e < n; ++e) {
    bool is_zero = true, is_one = true;
    for (int x = 0; x < n; ++x) {
      if (r.add[e][x] != x) is_zero = false;
      if (r.mul[e][x] != x) is_one = false;
    }
    if (is_zero) zero = e;
    if (is_one) one = e;
  }
  if (zero < 0) throw ValidationError("NotARing", "no additive identity");
  if (one < 0) throw ValidationError("NotARing", "no multiplicative identity");
  r.zero = zero;
  r.one = one;

  r.neg.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r.add[x][y] == zero) r.neg[x] = y;
  for (int x = 0; x < n; ++x)
    if (r.neg[x] < 0)
      throw ValidationError("NotARing", "missing additive inverse");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (r.add[a][b] != r.add[b][a])
        throw ValidationError("NotARing", "addition not commutative");
      if (r.mul[a][b] != r.mul[b][a])
        throw ValidationError("NotARing", "multiplication not commutative");
      for (int c = 0; c < n; ++c) {
        if (r.add[r.add[a][b]][c] != r.add[a][r.add[b][c]])
          throw ValidationError("NotARing", "addition not associative");
        if (r.mul[r.mul[a][b]][c] != r.mul[a][r.mul[b][c]])
          throw ValidationError("NotARing", "multiplication not associative");
        if (r.mul[a][r.add[b][c]] != r.add[r.mul[a][b]][r.mul[a][c]])
          throw ValidationError("NotARing", "distributivity fails");
      }
    }
  return r;
}

FiniteRing zmod(int n) {
  if (n < 1) throw ValidationError("OutOfRange", "zmod needs n >= 1");
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) {
      add[a][b] = (a + b) % n;
      mul[a][b] = (a * b) % n;
    }
  }
  return make_ring(std::move(add), std::move(mul), std::move(labels));
}

FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b) {
  const int n = a.n * b.n;
  auto code = [&](int x, int y) { return x * b.n + y; };
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1) {
      std::string lx = x1 < static_cast<int>(a.labels.size()) ? a.labels[x1]
                                                              : std::to_string(x1);
      std::string ly = y1 < static_cast<int>(b.labels.size()) ? b.labels[y1]
                                                              : std::to_string(y1);
      labels[code(x1, y1)] = "(" + lx + "," + ly + ")";
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2) {
          add[code(x1, y1)][code(x2, y2)] = code(a.add[x1][x2], b.add[y1][y2]);
          mul[code(x1, y1)][code(x2, y2)] = code(a.mul[x1][x2], b.mul[y1][y2]);
        }
    }
  return make_ring(std::move(add), std::move(mul), std::move(labels));
}

RingSet ideal_generated(const FiniteRing& r, const RingSet& gens) {
  RingSet cur = gens;
  cur.set(r.zero);
  bool changed = true;
  while (changed) {
    changed = false;
    auto xs = cur.elements();
    for (int x : xs)
      for (int y : xs) {
        int d = r.sub(x, y);
        if (!cur.has(d)) {
          cur.set(d);
          changed = true;
        }
      }
    for (int x : xs)
      for (int s = 0; s < r.n; ++s) {
        int p = r.mul[s][x];
        if (!cur.has(p)) {
          cur.set(p);
          changed = true;
        }
      }
  }
  return cur;
}

bool is_ideal(const FiniteRing& r, const RingSet& s) {
  if (!s.has(r.zero)) return false;
  auto xs = s.elements();
  for (int x : xs) {
    for (int y : xs)
      if (!s.has(r.sub(x, y))) return false;
    for (int t = 0; t < r.n; ++t)
      if (!s.has(r.mul[t][x])) return false;
  }
  return true;
}

std::vector<RingSet> all_ideals(const FiniteRing& r) {
  std::vector<RingSet> ideals;
  auto push = [&](const RingSet& s) {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), s);
    if (it == ideals.end() || !(*it == s)) {
      ideals.insert(it, s);
      return true;
    }
    return false;
  };
  RingSet zero;
  zero.set(r.zero);
  push(zero);
  for (int a = 0; a < r.n; ++a) {
    RingSet g;
    g.set(a);
    push(ideal_generated(r, g));
  }
  // closure under ideal sum
  bool changed = true;
  while (changed) {
    changed = false;
    auto snapshot = ideals;
    for (const auto& i : snapshot)
      for (const auto& j : snapshot)
        if (push(ideal_generated(r, i | j))) changed = true;
  }
  return ideals;
}

std::vector<RingSet> prime_ideals(const FiniteRing& r) {
  std::vector<RingSet> out;
  const RingSet whole = RingSet::all(r.n);
  for (const auto& i : all_ideals(r)) {
    if (i == whole) continue;
    bool prime = true;
    for (int x = 0; x < r.n && prime; ++x)
      for (int y = 0; y < r.n && prime; ++y)
        if (i.has(r.mul[x][y]) && !i.has(x) && !i.has(y)) prime = false;
    if (prime) out.push_back(i);
  }
  return out;  // all_ideals is ascending already
}

RingSet radical(const FiniteRing& r, const RingSet& ideal) {
  RingSet out;
  for (int x = 0; x < r.n; ++x) {
    int p = x;
    RingSet seen;
    while (true) {
      if (ideal.has(p)) {
        out.set(x);
        break;
      }
      if (seen.has(p)) break;  // power cycle without entering the ideal
      seen.set(p);
      p = r.mul[p][x];
    }
  }
  // cross-check: the intersection of the prime ideals containing the ideal
  RingSet meet = RingSet::all(r.n);
  for (const auto& p : prime_ideals(r))
    if (ideal.subset_of(p)) meet = meet & p;
  if (!(meet == out))
    throw ValidationError("InternalInconsistency",
                          "radical by powers disagrees with the prime intersection");
  return out;
}

RingSet quotient_ideal(const FiniteRing& r, const RingSet& j, const RingSet& i) {
  RingSet out;
  for (int x = 0; x < r.n; ++x) {
    bool in = true;
    for (int y : i.elements())
      if (!j.has(r.mul[x][y])) {
        in = false;
        break;
      }
    if (in) out.set(x);
  }
  return out;
}

SpecSpace spec_space(const FiniteRing& r) {
  auto primes = prime_ideals(r);
  const int m = static_cast<int>(primes.size());
  if (m > 30) throw ValidationError("TooLarge", "spectrum exceeds 30 points");

  std::vector<Mask> opens;
  for (int x = 0; x < r.n; ++x) {
    Mask u = 0;
    for (int p = 0; p < m; ++p)
      if (!primes[p].has(x)) u |= Mask{1} << p;
    opens.push_back(u);
  }
  opens.push_back(0);
  opens.push_back(full_mask(m));
  // close the subbasis under union and intersection
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    auto snapshot = opens;
    for (Mask a : snapshot)
      for (Mask b : snapshot) {
        for (Mask c : {a | b, a & b})
          if (!std::binary_search(snapshot.begin(), snapshot.end(), c)) {
            opens.push_back(c);
            changed = true;
          }
      }
  }
  return {make_space(m, std::move(opens)), std::move(primes)};
}

int RadicalIdealLattice::index_of(const RingSet& s) const {
  auto it = std::lower_bound(ideal_of.begin(), ideal_of.end(), s);
  if (it == ideal_of.end() || !(*it == s)) return -1;
  return static_cast<int>(it - ideal_of.begin());
}

RadicalIdealLattice radical_ideal_lattice(const FiniteRing& r) {
  RadicalIdealLattice out;
  for (const auto& i : all_ideals(r))
    if (radical(r, i) == i) out.ideal_of.push_back(i);
  const int m = static_cast<int>(out.ideal_of.size());
  if (m > 64) throw ValidationError("TooLarge", "too many radical ideals");

  std::vector<std::vector<int>> leq(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[i][j] = out.ideal_of[i].subset_of(out.ideal_of[j]);
  auto poset = validate_poset(leq);
  auto lattice = lattice_from_poset(poset.value());
  out.lattice = lattice.value();

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      RingSet meet = out.ideal_of[i] & out.ideal_of[j];
      if (!(out.ideal_of[out.lattice.meet[i][j]] == meet))
        throw ValidationError("InternalInconsistency",
                              "radical-ideal meet is not the intersection");
      RingSet join = radical(r, ideal_generated(r, out.ideal_of[i] | out.ideal_of[j]));
      if (!(out.ideal_of[out.lattice.join[i][j]] == join))
        throw ValidationError("InternalInconsistency",
                              "radical-ideal join is not the radical of the sum");
    }

  auto hey = try_heyting_implication(out.lattice);
  if (!hey.ok())
    throw ValidationError("InternalInconsistency",
                          "radical ideals do not form a Heyting algebra");
  out.heyting = hey.value();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      RingSet q = quotient_ideal(r, out.ideal_of[j], out.ideal_of[i]);
      if (!(out.ideal_of[out.heyting[i][j]] == q))
        throw ValidationError("InternalInconsistency",
                              "Heyting implication differs from the ideal quotient");
    }
  if (!is_distributive(out.lattice).distributive)
    throw ValidationError("InternalInconsistency",
                          "radical-ideal lattice is not distributive");
  return out;
}

IUMaps iu_maps(const FiniteRing& r, const SpecSpace& sp,
               const RadicalIdealLattice& ri) {
  IUMaps out;
  const int no = static_cast<int>(sp.space.opens.size());
  const int ni = static_cast<int>(ri.ideal_of.size());
  const int np = static_cast<int>(sp.prime_of.size());

  out.i_of_open.resize(no);
  for (int u = 0; u < no; ++u) {
    RingSet acc = RingSet::all(r.n);
    for (int p = 0; p < np; ++p)
      if (!mask_has(sp.space.opens[u], p)) acc = acc & sp.prime_of[p];
    int idx = ri.index_of(acc);
    if (idx < 0)
      throw ValidationError("InternalInconsistency",
                            "I(U) is not a radical ideal");
    out.i_of_open[u] = idx;
  }

  out.u_of_radical.resize(ni);
  for (int i = 0; i < ni; ++i) {
    Mask u = 0;
    for (int p = 0; p < np; ++p)
      if (!ri.ideal_of[i].subset_of(sp.prime_of[p])) u |= Mask{1} << p;
    auto it = std::lower_bound(sp.space.opens.begin(), sp.space.opens.end(), u);
    if (it == sp.space.opens.end() || *it != u)
      throw ValidationError("InternalInconsistency", "U(I) is not open");
    out.u_of_radical[i] = static_cast<int>(it - sp.space.opens.begin());
  }

  for (int u = 0; u < no; ++u)
    if (out.u_of_radical[out.i_of_open[u]] != u)
      throw ValidationError("InternalInconsistency", "U(I(U)) != U");
  for (int i = 0; i < ni; ++i)
    if (out.i_of_open[out.u_of_radical[i]] != i)
      throw ValidationError("InternalInconsistency", "I(U(I)) != I");
  for (int u = 0; u < no; ++u)
    for (int v = 0; v < no; ++v) {
      bool o = mask_subset(sp.space.opens[u], sp.space.opens[v]);
      bool d = ri.ideal_of[out.i_of_open[u]].subset_of(ri.ideal_of[out.i_of_open[v]]);
      if (o != d)
        throw ValidationError("InternalInconsistency",
                              "I and U are not order isomorphisms");
    }
  return out;
}

MorphismReport check_ring_hom(const FiniteRing& src, const FiniteRing& dst,
                              const RingHom& h) {
  if (static_cast<int>(h.map.size()) != src.n)
    return {false, "map has wrong arity"};
  for (int x : h.map)
    if (x < 0 || x >= dst.n) return {false, "map image out of range"};
  if (h.map[src.one] != dst.one) return {false, "unit not preserved"};
  std::ostringstream os;
  for (int a = 0; a < src.n; ++a)
    for (int b = 0; b < src.n; ++b) {
      if (h.map[src.add[a][b]] != dst.add[h.map[a]][h.map[b]]) {
        os << "addition not preserved at (" << a << ", " << b << ")";
        return {false, os.str()};
      }
      if (h.map[src.mul[a][b]] != dst.mul[h.map[a]][h.map[b]]) {
        os << "multiplication not preserved at (" << a << ", " << b << ")";
        return {false, os.str()};
      }
    }
  return {true, ""};
}

namespace {

// Minimal additive generating set: 1 first, then least elements outside the
// generated subgroup.
std::vector<int> additive_generators(const FiniteRing& r) {
  std::vector<int> gens{r.one};
  auto subgroup = [&](const std::vector<int>& gs) {
    RingSet s;
    s.set(r.zero);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x : s.elements())
        for (int g : gs) {
          int y = r.add[x][g];
          if (!s.has(y)) {
            s.set(y);
            changed = true;
          }
        }
    }
    return s;
  };
  RingSet span = subgroup(gens);
  for (int x = 0; x < r.n; ++x)
    if (!span.has(x)) {
      gens.push_back(x);
      span = subgroup(gens);
    }
  return gens;
}

}  // namespace

std::vector<RingHom> enumerate_ring_homs(const FiniteRing& src,
                                         const FiniteRing& dst) {
  auto gens = additive_generators(src);
  const int k = static_cast<int>(gens.size());
  std::vector<RingHom> out;

  std::vector<int> choice(k, 0);
  choice[0] = dst.one;  // image of 1 is forced
  while (true) {
    // extend additively from the generator images
    std::vector<int> map(src.n, -1);
    map[src.zero] = dst.zero;
    bool consistent = true;
    bool grown = true;
    while (grown && consistent) {
      grown = false;
      for (int x = 0; x < src.n && consistent; ++x) {
        if (map[x] < 0) continue;
        for (int g = 0; g < k; ++g) {
          int y = src.add[x][gens[g]];
          int fy = dst.add[map[x]][choice[g]];
          if (map[y] < 0) {
            map[y] = fy;
            grown = true;
          } else if (map[y] != fy) {
            consistent = false;
            break;
          }
        }
      }
    }
    if (consistent &&
        std::none_of(map.begin(), map.end(), [](int v) { return v < 0; })) {
      RingHom h{std::move(map)};
      if (check_ring_hom(src, dst, h).ok) out.push_back(std::move(h));
    }
    // advance the odometer over images of gens[1..]
    int i = k - 1;
    while (i >= 1 && choice[i] == dst.n - 1) choice[i--] = 0;
    if (i < 1) break;
    ++choice[i];
  }
  if (k == 1) {
    // no free generator images: the loop above ran exactly once
  }
  return out;
}

IdealAdjunction pushforward_pullback(const FiniteRing& src,
                                     const FiniteRing& dst, const RingHom& h) {
  auto ri_src = radical_ideal_lattice(src);
  auto ri_dst = radical_ideal_lattice(dst);
  const int ns = static_cast<int>(ri_src.ideal_of.size());
  const int nd = static_cast<int>(ri_dst.ideal_of.size());

  IdealAdjunction out;
  out.pushforward.resize(ns);
  for (int i = 0; i < ns; ++i) {
    RingSet img;
    for (int x : ri_src.ideal_of[i].elements()) img.set(h.map[x]);
    int idx = ri_dst.index_of(radical(dst, ideal_generated(dst, img)));
    if (idx < 0)
      throw ValidationError("InternalInconsistency", "pushforward left RI");
    out.pushforward[i] = idx;
  }
  out.pullback.resize(nd);
  for (int j = 0; j < nd; ++j) {
    RingSet pre;
    for (int x = 0; x < src.n; ++x)
      if (ri_dst.ideal_of[j].has(h.map[x])) pre.set(x);
    int idx = ri_src.index_of(pre);
    if (idx < 0)
      throw ValidationError("InternalInconsistency",
                            "preimage of a radical ideal is not radical");
    out.pullback[j] = idx;
  }

  // adjunction: f_*(I) <= J iff I <= f^-1(J)
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nd; ++j) {
      bool lhs = ri_dst.ideal_of[out.pushforward[i]].subset_of(ri_dst.ideal_of[j]);
      bool rhs = ri_src.ideal_of[i].subset_of(ri_src.ideal_of[out.pullback[j]]);
      if (lhs != rhs)
        throw ValidationError("InternalInconsistency",
                              "pushforward is not left adjoint to the preimage");
    }

  // factorization through the spectra: f_* = I . Spec(f)^-1 . U
  auto sp_src = spec_space(src);
  auto sp_dst = spec_space(dst);
  auto iu_src = iu_maps(src, sp_src, ri_src);
  auto iu_dst = iu_maps(dst, sp_dst, ri_dst);
  const int np_dst = static_cast<int>(sp_dst.prime_of.size());
  std::vector<int> spec_h(np_dst);  // Spec(h): Spec(dst) -> Spec(src)
  for (int p = 0; p < np_dst; ++p) {
    RingSet pre;
    for (int x = 0; x < src.n; ++x)
      if (sp_dst.prime_of[p].has(h.map[x])) pre.set(x);
    auto it = std::lower_bound(sp_src.prime_of.begin(), sp_src.prime_of.end(), pre);
    if (it == sp_src.prime_of.end() || !(*it == pre))
      throw ValidationError("InternalInconsistency",
                            "preimage of a prime is not prime");
    spec_h[p] = static_cast<int>(it - sp_src.prime_of.begin());
  }
  for (int i = 0; i < ns; ++i) {
    Mask u = sp_src.space.opens[iu_src.u_of_radical[i]];
    Mask v = 0;  // Spec(h)^-1(u)
    for (int p = 0; p < np_dst; ++p)
      if (mask_has(u, spec_h[p])) v |= Mask{1} << p;
    auto it = std::lower_bound(sp_dst.space.opens.begin(), sp_dst.space.opens.end(), v);
    if (it == sp_dst.space.opens.end() || *it != v)
      throw ValidationError("InternalInconsistency",
                            "Spec preimage of an open is not open");
    int open_idx = static_cast<int>(it - sp_dst.space.opens.begin());
    if (iu_dst.i_of_open[open_idx] != out.pushforward[i])
      throw ValidationError("InternalInconsistency",
                            "pushforward does not factor through the spectra");
  }
  return out;
}

HomCriteria hom_criteria(const FiniteRing& src, const FiniteRing& dst,
                         const RingHom& h) {
  HomCriteria out;
  std::ostringstream os;

  // criterion for surjectivity of Spec(h): subsets are quantified through
  // the ideals they generate
  out.spec_surjective = true;
  for (const auto& a : all_ideals(src)) {
    RingSet img;
    for (int x : a.elements()) img.set(h.map[x]);
    RingSet gen = ideal_generated(dst, img);
    for (int r = 0; r < src.n && out.spec_surjective; ++r) {
      if (!gen.has(h.map[r])) continue;
      bool found = false;
      int p = src.one;  // r^0
      RingSet seen;
      while (true) {
        if (a.has(p)) {
          found = true;
          break;
        }
        if (seen.has(p)) break;
        seen.set(p);
        p = src.mul[p][r];
      }
      if (!found) {
        out.spec_surjective = false;
        os.str("");
        os << "f(" << r << ") lies in <f[A]> but no power of " << r
           << " lies in A";
        out.surjective_witness = os.str();
      }
    }
    if (!out.spec_surjective) break;
  }

  // criterion for Spec(h) being a topological embedding
  out.spec_embedding = true;
  for (int s = 0; s < dst.n && out.spec_embedding; ++s) {
    RingSet divisible;  // {f(r) | s divides f(r)}
    RingSet multiples;
    for (int u = 0; u < dst.n; ++u) multiples.set(dst.mul[s][u]);
    for (int r = 0; r < src.n; ++r)
      if (multiples.has(h.map[r])) divisible.set(h.map[r]);
    RingSet gen = ideal_generated(dst, divisible);
    bool found = false;
    int p = dst.one;  // s^0
    RingSet seen;
    while (true) {
      if (gen.has(p)) {
        found = true;
        break;
      }
      if (seen.has(p)) break;
      seen.set(p);
      p = dst.mul[p][s];
    }
    if (!found) {
      out.spec_embedding = false;
      os.str("");
      os << "no power of " << s << " is a combination of divisible images";
      out.embedding_witness = os.str();
    }
  }

  // topological cross-checks on the spectra
  auto sp_src = spec_space(src);
  auto sp_dst = spec_space(dst);
  const int np_src = static_cast<int>(sp_src.prime_of.size());
  const int np_dst = static_cast<int>(sp_dst.prime_of.size());
  std::vector<int> spec_h(np_dst);
  for (int p = 0; p < np_dst; ++p) {
    RingSet pre;
    for (int x = 0; x < src.n; ++x)
      if (sp_dst.prime_of[p].has(h.map[x])) pre.set(x);
    auto it = std::lower_bound(sp_src.prime_of.begin(), sp_src.prime_of.end(), pre);
    if (it == sp_src.prime_of.end() || !(*it == pre))
      throw ValidationError("InternalInconsistency",
                            "preimage of a prime is not prime");
    spec_h[p] = static_cast<int>(it - sp_src.prime_of.begin());
  }
  std::vector<char> hit(np_src, 0);
  for (int x : spec_h) hit[x] = 1;
  bool topo_surj = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

  bool topo_embed = true;  // Spec(h)^-1 surjective onto the opens of Spec(dst)
  for (Mask v : sp_dst.space.opens) {
    bool reached = false;
    for (Mask u : sp_src.space.opens) {
      Mask pre = 0;
      for (int p = 0; p < np_dst; ++p)
        if (mask_has(u, spec_h[p])) pre |= Mask{1} << p;
      if (pre == v) {
        reached = true;
        break;
      }
    }
    if (!reached) {
      topo_embed = false;
      break;
    }
  }

  if (topo_surj != out.spec_surjective || topo_embed != out.spec_embedding)
    throw ValidationError("InternalInconsistency",
                          "algebraic and topological spectrum criteria disagree");
  return out;
}

SemiDynamicRing make_semi_dynamic_ring(FiniteRing r, FiniteRing s, RingHom pi,
                                       std::vector<int> f) {
  auto hom = check_ring_hom(r, s, pi);
  if (!hom.ok) throw ValidationError("NotAHomomorphism", hom.witness);

  auto sp_r = spec_space(r);
  auto sp_s = spec_space(s);
  const int np_r = static_cast<int>(sp_r.prime_of.size());
  const int np_s = static_cast<int>(sp_s.prime_of.size());
  if (static_cast<int>(f.size()) != np_r || np_r != np_s)
    throw ValidationError("NotAHomeomorphism",
                          "f must be a bijection between the spectra");
  std::vector<char> hit(np_s, 0);
  for (int x : f) {
    if (x < 0 || x >= np_s)
      throw ValidationError("NotAHomeomorphism", "f image out of range");
    if (hit[x]) throw ValidationError("NotAHomeomorphism", "f is not injective");
    hit[x] = 1;
  }
  // continuity of f and of its inverse
  for (Mask v : sp_s.space.opens) {
    Mask pre = 0;
    for (int p = 0; p < np_r; ++p)
      if (mask_has(v, f[p])) pre |= Mask{1} << p;
    if (!sp_r.space.is_open(pre))
      throw ValidationError("NotAHomeomorphism", "f is not continuous");
  }
  for (Mask u : sp_r.space.opens) {
    Mask img = 0;
    for (int p = 0; p < np_r; ++p)
      if (mask_has(u, p)) img |= Mask{1} << f[p];
    if (!sp_s.space.is_open(img))
      throw ValidationError("NotAHomeomorphism", "f^-1 is not continuous");
  }
  return {std::move(r), std::move(s), std::move(pi), std::move(f)};
}

SemiDynamicAlgebra semi_dynamic_algebra(const SemiDynamicRing& sdr) {
  const auto& r = sdr.r;
  const auto& s = sdr.s;
  auto ri_r = radical_ideal_lattice(r);
  auto ri_s = radical_ideal_lattice(s);
  auto sp_r = spec_space(r);
  auto sp_s = spec_space(s);
  auto iu_r = iu_maps(r, sp_r, ri_r);
  auto iu_s = iu_maps(s, sp_s, ri_s);
  const int np = static_cast<int>(sp_r.prime_of.size());

  auto open_index = [](const FiniteSpace& sp, Mask m) {
    auto it = std::lower_bound(sp.opens.begin(), sp.opens.end(), m);
    if (it == sp.opens.end() || *it != m)
      throw ValidationError("InternalInconsistency", "expected an open set");
    return static_cast<int>(it - sp.opens.begin());
  };

  // fhat : RI(S) -> RI(R) is I_R . f^-1 . U_S; ghat goes the other way.
  auto fhat = [&](int ideal_s) {
    Mask v = sp_s.space.opens[iu_s.u_of_radical[ideal_s]];
    Mask pre = 0;
    for (int p = 0; p < np; ++p)
      if (mask_has(v, sdr.f[p])) pre |= Mask{1} << p;
    return iu_r.i_of_open[open_index(sp_r.space, pre)];
  };
  std::vector<int> g(np);  // inverse of f
  for (int p = 0; p < np; ++p) g[sdr.f[p]] = p;
  auto ghat = [&](int ideal_r) {
    Mask u = sp_r.space.opens[iu_r.u_of_radical[ideal_r]];
    Mask pre = 0;
    for (int p = 0; p < np; ++p)
      if (mask_has(u, g[p])) pre |= Mask{1} << p;
    return iu_s.i_of_open[open_index(sp_s.space, pre)];
  };
  auto pi_push = [&](int ideal_r) {
    RingSet img;
    for (int x : ri_r.ideal_of[ideal_r].elements()) img.set(sdr.pi.map[x]);
    int idx = ri_s.index_of(radical(s, ideal_generated(s, img)));
    if (idx < 0)
      throw ValidationError("InternalInconsistency", "pushforward left RI");
    return idx;
  };
  auto pi_pull = [&](int ideal_s) {
    RingSet pre;
    for (int x = 0; x < r.n; ++x)
      if (ri_s.ideal_of[ideal_s].has(sdr.pi.map[x])) pre.set(x);
    int idx = ri_r.index_of(pre);
    if (idx < 0)
      throw ValidationError("InternalInconsistency",
                            "preimage of a radical ideal is not radical");
    return idx;
  };

  const int m = static_cast<int>(ri_r.ideal_of.size());
  NablaAlgebra alg;
  alg.lattice = ri_r.lattice;
  alg.explicit_heyting = true;
  alg.nabla.resize(m);
  for (int i = 0; i < m; ++i) alg.nabla[i] = fhat(pi_push(i));
  alg.arrow.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      RingSet q = quotient_ideal(r, ri_r.ideal_of[j], ri_r.ideal_of[i]);
      int qi = ri_r.index_of(q);
      if (qi < 0)
        throw ValidationError("InternalInconsistency",
                              "[J:I] is not a radical ideal");
      alg.arrow[i][j] = pi_pull(ghat(qi));
    }

  auto adj = verify_nabla_algebra(alg);
  if (!adj.ok)
    throw ValidationError("InternalInconsistency",
                          "semi-dynamic algebra fails the adjunction: " +
                              adj.describe());
  auto tags = classify(alg);
  if (!tags.tags.has(Variety::D) || !tags.tags.has(Variety::N))
    throw ValidationError("InternalInconsistency",
                          "semi-dynamic algebra must be distributive and normal");
  auto crit = hom_criteria(r, s, sdr.pi);
  if (tags.tags.has(Variety::Fa) != crit.spec_embedding ||
      tags.tags.has(Variety::Fu) != crit.spec_surjective)
    throw ValidationError("InternalInconsistency",
                          "Fa/Fu tags disagree with the spectrum criteria");
  return {std::move(alg), std::move(ri_r)};
}

}  // namespace nabla
