#pragma once

#include <optional>

#include "clutterlab/clutter.hpp"

namespace clutterlab {

enum class ObstructionKind { Delta, BlockerOfExtendedOddHole };

const char* obstruction_kind_name(ObstructionKind kind);

/// Certificate for a failed cleanness test: applying `spec` to the tested
/// clutter yields a minor recognized as `kind` of dimension `dimension`.
struct ObstructionWitness {
  ObstructionKind kind;
  MinorSpec spec;
  int dimension;
};

/// Returns n >= 3 iff c is isomorphic to Delta_n: n members over n elements,
/// with a hub u such that n-1 members are the pairs {u,v} and the remaining
/// member is V - {u}.
std::optional<int> recognize_delta(const Clutter& c);

/// Returns odd n >= 5 iff blocker(c) is an extended odd hole of dimension n:
/// its minimum-cardinality members all have size 2 and form a single spanning
/// odd cycle on the whole ground set.
std::optional<int> recognize_blocker_of_extended_odd_hole(const Clutter& c);

struct CleanResult {
  bool clean;
  std::optional<ObstructionWitness> witness;
};

/// Exhaustive minor enumeration over all disjoint (I, J) pairs, in increasing
/// |I|+|J| so the reported witness is a minimal-change minor. Throws
/// BudgetExceeded when the ground set is larger than max_n.
CleanResult is_clean(const Clutter& c, int max_n = 12);

}  // namespace clutterlab
