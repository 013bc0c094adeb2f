#include "nabla/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace nabla {

std::string AdjunctionReport::describe() const {
  if (ok) return "adjunction holds";
  std::ostringstream os;
  os << "adjunction fails at (a=" << a << ", b=" << b << ", c=" << c << "): "
     << (forward_failed ? "nabla(c) /\\ a <= b but c <= arrow(a,b) fails"
                        : "c <= arrow(a,b) but nabla(c) /\\ a <= b fails");
  return os.str();
}

Result<std::vector<std::vector<int>>, ResidualFailure> try_residual_from_nabla(
    const FiniteLattice& l, const std::vector<int>& nabla) {
  const int n = l.size();
  if (static_cast<int>(nabla.size()) != n)
    throw ValidationError("NotTotal", "nabla table has wrong arity");
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mask s = 0;
      for (int c = 0; c < n; ++c)
        if (l.leq(l.meet[nabla[c]][a], b)) s |= Mask{1} << c;
      // The adjunction needs the candidate set to be exactly a principal
      // downset; a mere maximum of a non-downset does not residuate.
      int m = -1;
      for (int c = 0; c < n; ++c)
        if (l.poset.down[c] == s) { m = c; break; }
      if (m < 0) return ResidualFailure{a, b};
      arrow[a][b] = m;
    }
  return arrow;
}

AdjunctionReport verify_nabla_algebra(const NablaAlgebra& alg) {
  const int n = alg.size();
  const auto& l = alg.lattice;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool lhs = l.leq(l.meet[alg.nabla[c]][a], b);
        bool rhs = l.leq(c, alg.arrow[a][b]);
        if (lhs != rhs) return {false, a, b, c, lhs};
      }
  return {};
}

std::vector<int> box_op(const NablaAlgebra& alg) {
  std::vector<int> box(alg.size());
  for (int x = 0; x < alg.size(); ++x) box[x] = alg.arrow[alg.lattice.top][x];
  return box;
}

const char* variety_name(Variety v) {
  switch (v) {
    case Variety::D: return "D";
    case Variety::H: return "H";
    case Variety::N: return "N";
    case Variety::R: return "R";
    case Variety::L: return "L";
    case Variety::Fa: return "Fa";
    case Variety::Fu: return "Fu";
  }
  return "?";
}

VarietySet VarietySet::of(std::initializer_list<Variety> vs) {
  VarietySet s;
  for (Variety v : vs) s.insert(v);
  return s;
}

VarietySet VarietySet::intersect(const VarietySet& o) const {
  VarietySet s;
  s.bits_ = bits_ & o.bits_;
  return s;
}

VarietySet VarietySet::unite(const VarietySet& o) const {
  VarietySet s;
  s.bits_ = bits_ | o.bits_;
  return s;
}

std::string VarietySet::to_string() const {
  std::string out;
  for (Variety v : {Variety::D, Variety::H, Variety::N, Variety::R, Variety::L,
                    Variety::Fa, Variety::Fu}) {
    if (!has(v)) continue;
    if (!out.empty()) out += ',';
    out += variety_name(v);
  }
  return out;
}

namespace {

bool is_surjective(const std::vector<int>& f, int n) {
  std::vector<char> hit(n, 0);
  for (int x : f) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_injective(const std::vector<int>& f, int n) {
  std::vector<char> hit(n, 0);
  for (int x : f) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

}  // namespace

Classification classify(const NablaAlgebra& alg) {
  Classification out;
  const auto& l = alg.lattice;
  const int n = alg.size();
  std::ostringstream os;

  auto dist = is_distributive(l);
  if (dist.distributive) {
    out.tags.insert(Variety::D);
  } else {
    os.str("");
    os << "distributivity fails at (" << dist.witness[0] << ", "
       << dist.witness[1] << ", " << dist.witness[2] << ")";
    out.failures[Variety::D] = os.str();
  }

  auto hey = try_heyting_implication(l);
  if (hey.ok()) {
    out.tags.insert(Variety::H);
  } else {
    out.failures[Variety::H] = hey.error().describe();
  }

  bool normal = alg.nabla[l.top] == l.top;
  std::string normal_witness =
      normal ? "" : "nabla(top) != top";
  for (int a = 0; a < n && normal; ++a)
    for (int b = 0; b < n; ++b)
      if (alg.nabla[l.meet[a][b]] != l.meet[alg.nabla[a]][alg.nabla[b]]) {
        normal = false;
        os.str("");
        os << "nabla(a /\\ b) != nabla(a) /\\ nabla(b) at (" << a << ", " << b << ")";
        normal_witness = os.str();
        break;
      }
  if (normal) out.tags.insert(Variety::N);
  else out.failures[Variety::N] = normal_witness;

  int right_bad = -1, left_bad = -1;
  for (int a = 0; a < n; ++a) {
    if (right_bad < 0 && !l.leq(a, alg.nabla[a])) right_bad = a;
    if (left_bad < 0 && !l.leq(alg.nabla[a], a)) left_bad = a;
  }
  if (right_bad < 0) out.tags.insert(Variety::R);
  else {
    os.str("");
    os << "a <= nabla(a) fails at " << right_bad;
    out.failures[Variety::R] = os.str();
  }
  if (left_bad < 0) out.tags.insert(Variety::L);
  else {
    os.str("");
    os << "nabla(a) <= a fails at " << left_bad;
    out.failures[Variety::L] = os.str();
  }

  auto box = box_op(alg);
  std::vector<int> nabla_box(n), box_nabla(n);
  for (int x = 0; x < n; ++x) {
    nabla_box[x] = alg.nabla[box[x]];
    box_nabla[x] = box[alg.nabla[x]];
  }
  bool fa1 = is_surjective(alg.nabla, n);
  bool fa2 = is_injective(box, n);
  bool fa3 = true;
  for (int x = 0; x < n; ++x)
    if (nabla_box[x] != x) { fa3 = false; break; }
  if (fa1 != fa2 || fa2 != fa3)
    throw ValidationError("InternalInconsistency",
                          "faithfulness characterizations disagree");
  if (fa1) out.tags.insert(Variety::Fa);
  else out.failures[Variety::Fa] = "nabla is not surjective";

  bool fu1 = is_surjective(box, n);
  bool fu2 = is_injective(alg.nabla, n);
  bool fu3 = true;
  for (int x = 0; x < n; ++x)
    if (box_nabla[x] != x) { fu3 = false; break; }
  if (fu1 != fu2 || fu2 != fu3)
    throw ValidationError("InternalInconsistency",
                          "fullness characterizations disagree");
  if (fu1) out.tags.insert(Variety::Fu);
  else out.failures[Variety::Fu] = "box is not surjective";

  return out;
}

MorphismReport check_nabla_morphism(const NablaAlgebra& src,
                                    const NablaAlgebra& dst,
                                    const NablaMorphism& m) {
  auto base = check_lattice_morphism(src.lattice, dst.lattice, {m.map});
  if (!base.ok) return base;
  const int n = src.size();
  std::ostringstream os;
  for (int a = 0; a < n; ++a)
    if (m.map[src.nabla[a]] != dst.nabla[m.map[a]]) {
      os << "nabla not preserved at " << a;
      return {false, os.str()};
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.map[src.arrow[a][b]] != dst.arrow[m.map[a]][m.map[b]]) {
        os << "arrow not preserved at (" << a << ", " << b << ")";
        return {false, os.str()};
      }
  if (m.heyting) {
    auto hs = try_heyting_implication(src.lattice);
    auto hd = try_heyting_implication(dst.lattice);
    if (!hs.ok() || !hd.ok())
      return {false, "heyting flag set but an implication table is missing"};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (m.map[hs.value()[a][b]] != hd.value()[m.map[a]][m.map[b]]) {
          os << "heyting implication not preserved at (" << a << ", " << b << ")";
          return {false, os.str()};
        }
  }
  return {true, ""};
}

std::vector<NablaAlgebra> enumerate_nabla_algebras(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<NablaAlgebra> out;
  std::vector<int> nabla(n, 0);
  // Odometer over all n^n unary tables, index 0 most significant.
  while (true) {
    auto arrow = try_residual_from_nabla(l, nabla);
    if (arrow.ok()) out.push_back({l, nabla, arrow.value(), false});
    int i = n - 1;
    while (i >= 0 && nabla[i] == n - 1) nabla[i--] = 0;
    if (i < 0) break;
    ++nabla[i];
  }
  return out;
}

namespace {

Mask lower_bounds(const FinitePoset& p, Mask s) {
  Mask out = full_mask(p.n);
  for (int u : mask_elements(s)) out &= p.down[u];
  return out;
}

Mask upper_bounds(const FinitePoset& p, Mask s) {
  Mask out = full_mask(p.n);
  for (int u : mask_elements(s)) out &= p.up[u];
  return out;
}

}  // namespace

Completion dm_completion(const NablaAlgebra& alg) {
  const auto& l = alg.lattice;
  const int n = l.size();
  if (n > 16)
    throw ValidationError("TooLarge", "ideal completion is capped at 16 elements");

  // All lattice ideals: nonempty downsets closed under join.
  std::vector<Mask> normal_ideals;
  const Mask all = full_mask(n);
  for (Mask s = 1;; ++s) {
    bool ideal = true;
    for (int a = 0; a < n && ideal; ++a) {
      if (!mask_has(s, a)) continue;
      if (!mask_subset(l.poset.down[a], s)) ideal = false;
      for (int b = 0; b < n && ideal; ++b)
        if (mask_has(s, b) && !mask_has(s, l.join[a][b])) ideal = false;
    }
    if (ideal && lower_bounds(l.poset, upper_bounds(l.poset, s)) == s)
      normal_ideals.push_back(s);
    if (s == all) break;
  }
  std::sort(normal_ideals.begin(), normal_ideals.end());

  const int m = static_cast<int>(normal_ideals.size());
  auto index_of = [&](Mask s) {
    auto it = std::lower_bound(normal_ideals.begin(), normal_ideals.end(), s);
    if (it == normal_ideals.end() || *it != s)
      throw ValidationError("InternalInconsistency",
                            "completion operation left the normal ideals");
    return static_cast<int>(it - normal_ideals.begin());
  };

  std::vector<std::vector<int>> leq(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[i][j] = mask_subset(normal_ideals[i], normal_ideals[j]);
  auto lattice = lattice_from_poset(validate_poset(leq).value()).value();

  NablaAlgebra comp;
  comp.lattice = lattice;
  comp.explicit_heyting = alg.explicit_heyting;
  comp.nabla.resize(m);
  for (int i = 0; i < m; ++i) {
    Mask u = 0;
    for (int x : mask_elements(normal_ideals[i])) u |= l.poset.down[alg.nabla[x]];
    comp.nabla[i] = index_of(lower_bounds(l.poset, upper_bounds(l.poset, u)));
  }
  comp.arrow.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Mask s = 0;
      for (int x = 0; x < n; ++x) {
        bool in = true;
        for (int y : mask_elements(normal_ideals[i]))
          if (!mask_has(normal_ideals[j], l.meet[alg.nabla[x]][y])) {
            in = false;
            break;
          }
        if (in) s |= Mask{1} << x;
      }
      comp.arrow[i][j] = index_of(s);
    }

  NablaMorphism j;
  j.heyting = alg.explicit_heyting;
  j.map.resize(n);
  for (int a = 0; a < n; ++a) j.map[a] = index_of(l.poset.down[a]);

  return {std::move(comp), std::move(j), std::move(normal_ideals)};
}

}  // namespace nabla
