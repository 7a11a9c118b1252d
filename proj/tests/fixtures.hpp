#pragma once

#include "clutterlab/harness.hpp"

namespace clutterlab::fixtures {

inline Clutter delta3() { return make_delta(3); }

// the 4-cycle clutter {{1,2},{2,3},{3,4},{1,4}}
inline Clutter c4() {
  return Clutter::validate(4, {ElemSet::of({1, 2}), ElemSet::of({2, 3}),
                               ElemSet::of({3, 4}), ElemSet::of({1, 4})});
}

// weight-1-or-2 points of {0,1}^3
inline SetSystem f6_points() {
  std::vector<ElemSet> pts;
  for (std::uint64_t b = 1; b < 8; ++b)
    if (std::popcount(b) <= 2) pts.push_back(ElemSet::from_bits(b));
  return make_set_system(3, std::move(pts));
}

// the 6-element cuboid fixture {{2,4,5},{2,3,6},{1,4,6},{2,3,5},{1,4,5},{1,3,6}}
inline Clutter f6() { return make_cuboid(f6_points()); }

inline Clutter two_singletons() {
  return Clutter::validate(2, {ElemSet::of({1}), ElemSet::of({2})});
}

}  // namespace clutterlab::fixtures
