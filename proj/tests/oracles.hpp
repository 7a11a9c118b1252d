// Brute-force reference implementations used only by tests. These stay
// independent of the production search paths they are checked against.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "clutterlab/clutter.hpp"
#include "clutterlab/params.hpp"
#include "clutterlab/structure.hpp"

namespace clutterlab::oracle {

inline bool mask_is_cover(const Clutter& c, std::uint64_t b) {
  for (ElemSet m : c.members())
    if ((m.bits() & b) == 0) return false;
  return true;
}

/// All minimal covers by full 2^n subset enumeration; a cover is minimal iff
/// dropping any single element breaks it.
inline std::vector<ElemSet> minimal_covers(const Clutter& c) {
  const int n = c.ground_size();
  std::vector<ElemSet> out;
  const std::uint64_t top = n == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t b = 0;; ++b) {
    if (mask_is_cover(c, b)) {
      bool minimal = true;
      std::uint64_t rest = b;
      while (rest && minimal) {
        const std::uint64_t bit = rest & -rest;
        if (mask_is_cover(c, b & ~bit)) minimal = false;
        rest &= rest - 1;
      }
      if (minimal) out.push_back(ElemSet::from_bits(b));
    }
    if (b == top) break;
  }
  return out;
}

inline Clutter blocker(const Clutter& c) {
  return Clutter::from_antichain(c.ground_size(), minimal_covers(c));
}

inline ExtNat covering_number(const Clutter& c) {
  int best = -1;
  for (ElemSet b : minimal_covers(c))
    if (best < 0 || b.size() < best) best = b.size();
  return best < 0 ? ExtNat::infinity()
                  : ExtNat(static_cast<std::uint64_t>(best));
}

inline std::vector<ElemSet> minimum_covers(const Clutter& c) {
  const std::vector<ElemSet> covers = minimal_covers(c);
  int tau = 65;
  for (ElemSet b : covers) tau = std::min(tau, b.size());
  std::vector<ElemSet> out;
  for (ElemSet b : covers)
    if (b.size() == tau) out.push_back(b);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

/// Connectivity by unpruned enumeration of all 3^d (I, J) assignments.
inline ExtNat connectivity(const SetSystem& s) {
  const int d = s.dimension;
  int best = -1;
  const std::uint64_t top = std::uint64_t{1} << d;
  for (std::uint64_t i = 0; i < top; ++i)
    for (std::uint64_t j = 0; j < top; ++j) {
      if (i & j) continue;
      bool valid = true;
      for (ElemSet p : s.points)
        if ((p.bits() & i) == 0 && (p.bits() & j) == j) {
          valid = false;
          break;
        }
      if (!valid) continue;
      const int vars = std::popcount(i) + std::popcount(j);
      if (best < 0 || vars < best) best = vars;
    }
  return best < 0 ? ExtNat::infinity()
                  : ExtNat(static_cast<std::uint64_t>(best));
}

}  // namespace clutterlab::oracle
