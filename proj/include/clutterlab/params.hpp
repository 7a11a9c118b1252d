#pragma once

#include <optional>
#include <vector>

#include "clutterlab/structure.hpp"

namespace clutterlab {

/// A generalized set covering inequality
///   sum_{i in positive} x_i + sum_{j in negated} (1 - x_j) >= 1
/// over coordinate indices of a set-system. positive and negated are disjoint.
struct GscInequality {
  ElemSet positive;  // I
  ElemSet negated;   // J

  int variable_count() const { return positive.size() + negated.size(); }

  friend bool operator==(const GscInequality&, const GscInequality&) = default;
};

/// Per-component side selection: skip the component or take one full side.
enum class SideChoice : std::uint8_t { Skip, U, V };

using SidePattern = std::vector<SideChoice>;

/// Union of the chosen sides.
ElemSet pattern_union(const MinCoverGraph& g, const SidePattern& p);

int pattern_chosen_count(const SidePattern& p);

std::string pattern_to_string(const SidePattern& p);

/// True iff b covers c and meets every component of g at most once.
bool is_rainbow_cover(const Clutter& c, const MinCoverGraph& g, ElemSet b);

struct CoverSearchResult {
  ExtNat value;
  std::optional<ElemSet> witness;  // lexicographically least at the optimum
};

/// mu(c): minimum size of a rainbow cover; infinity when none exists. The
/// search ranges over selections of at most one vertex per component.
CoverSearchResult rainbow_covering_number(const Clutter& c,
                                          const MinCoverGraph& g);

/// mu1(c): minimum size of a monochromatic cover of core(c), searched over
/// one-vertex-per-component selections (an inclusion-minimal monochromatic
/// cover of the core meets each component at most once). Throws EmptyCore.
CoverSearchResult mu1(const Clutter& c, const MinCoverGraph& g);

struct PatternSearchResult {
  ExtNat value;
  std::optional<SidePattern> witness;  // lexicographically least (Skip<U<V)
};

/// mu2(c): minimum number of components intersected by a monochromatic cover,
/// searched over full-side patterns; infinity when no pattern covers.
PatternSearchResult mu2(const Clutter& c, const MinCoverGraph& g);

/// True iff flipping any single chosen component to the opposite side
/// destroys the cover property. Throws NotACover when the pattern's side
/// union is not a cover of c.
bool is_irreducible(const Clutter& c, const MinCoverGraph& g,
                    const SidePattern& p);

/// mu3(c): like mu2, restricted to irreducible covering patterns.
PatternSearchResult mu3(const Clutter& c, const MinCoverGraph& g);

/// True iff no point of s has coordinate 0 on all of q.positive and
/// coordinate 1 on all of q.negated. The empty inequality is valid iff s is
/// empty. Throws IndexOutOfRange for indices beyond the dimension.
bool gsc_valid(const SetSystem& s, const GscInequality& q);

struct ConnectivityResult {
  ExtNat value;
  std::optional<GscInequality> witness;
};

/// lambda(s): minimum variable count of a valid GSC inequality, enumerated by
/// increasing |I|+|J|; infinity iff s is the full cube. The empty set-system
/// gets 0 with the empty inequality as witness.
ConnectivityResult connectivity(const SetSystem& s);

/// All five parameters, each computed by its own independent search. No
/// parameter is derived from another via the min-min theorem.
struct ParamReport {
  ExtNat mu;
  ExtNat mu1;
  ExtNat mu2;
  ExtNat mu3;
  ExtNat lambda;
  std::optional<ElemSet> rainbow_witness;
  std::optional<ElemSet> core_cover_witness;
  std::optional<SidePattern> mu2_witness;
  std::optional<SidePattern> mu3_witness;
  std::optional<GscInequality> lambda_witness;
};

/// Throws NotTangled / NotBipartiteError; propagates EmptyCore when the core
/// is empty (cannot happen for clean tangled inputs).
ParamReport param_report(const Clutter& c);

}  // namespace clutterlab
