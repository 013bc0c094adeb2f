#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace nabla {

/// Subsets of up to 64 indexed elements, element i stored as bit i.
using Mask = std::uint64_t;

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr bool mask_has(Mask m, int i) { return (m >> i) & 1; }

constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline int mask_size(Mask m) { return std::popcount(m); }

inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

}  // namespace nabla
