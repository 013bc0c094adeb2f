#include "nabla/poset.hpp"

#include <cassert>
#include <sstream>

namespace nabla {

std::string PosetViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case NotReflexive:
      os << "NotReflexive: missing " << witness[0] << " <= " << witness[0];
      break;
    case NotAntisymmetric:
      os << "NotAntisymmetric: " << witness[0] << " <= " << witness[1]
         << " <= " << witness[0] << " with distinct elements";
      break;
    case NotTransitive:
      os << "NotTransitive: " << witness[0] << " <= " << witness[1]
         << " <= " << witness[2] << " but not " << witness[0]
         << " <= " << witness[2];
      break;
  }
  return os.str();
}

Result<FinitePoset, PosetViolation> validate_poset(
    const std::vector<std::vector<int>>& leq) {
  const int n = static_cast<int>(leq.size());
  if (n > 64) throw ValidationError("TooLarge", "posets are capped at 64 elements");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("NotSquare", "relation matrix must be n x n");

  std::vector<Mask> up(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq[a][b]) up[a] |= Mask{1} << b;

  for (int a = 0; a < n; ++a)
    if (!mask_has(up[a], a))
      return PosetViolation{PosetViolation::NotReflexive, {a, a, -1}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && mask_has(up[a], b) && mask_has(up[b], a))
        return PosetViolation{PosetViolation::NotAntisymmetric, {a, b, -1}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!mask_has(up[a], b)) continue;
      if (!mask_subset(up[b], up[a])) {
        Mask bad = up[b] & ~up[a];
        int c = mask_elements(bad)[0];
        return PosetViolation{PosetViolation::NotTransitive, {a, b, c}};
      }
    }
  return poset_from_up_rows(std::move(up));
}

FinitePoset poset_from_up_rows(std::vector<Mask> up) {
  FinitePoset p;
  p.n = static_cast<int>(up.size());
  p.up = std::move(up);
  p.down.assign(p.n, 0);
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (mask_has(p.up[a], b)) p.down[b] |= Mask{1} << a;
#ifndef NDEBUG
  for (int a = 0; a < p.n; ++a) {
    assert(p.leq(a, a));
    for (int b = 0; b < p.n; ++b)
      if (p.leq(a, b)) assert(mask_subset(p.up[b], p.up[a]));
  }
#endif
  return p;
}

std::vector<std::pair<int, int>> cover_relation(const FinitePoset& p) {
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b) {
      if (!p.lt(a, b)) continue;
      // strictly between: c with a < c < b
      Mask between = p.up[a] & p.down[b] & ~(Mask{1} << a) & ~(Mask{1} << b);
      if (between == 0) covers.emplace_back(a, b);
    }
  return covers;
}

std::string export_hasse(const FinitePoset& p,
                         const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < p.n; ++i) {
    os << "  n" << i;
    if (i < static_cast<int>(labels.size()))
      os << " [label=\"" << labels[i] << "\"]";
    os << ";\n";
  }
  for (auto [a, b] : cover_relation(p)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace nabla
