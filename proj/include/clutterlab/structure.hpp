#pragma once

#include <utility>
#include <vector>

#include "clutterlab/clutter.hpp"

namespace clutterlab {

/// One connected component of the minimum-cover graph, with its bipartition.
/// Canonical orientation: side_u is the side containing the component's
/// smallest vertex.
struct Component {
  ElemSet side_u;
  ElemSet side_v;

  ElemSet vertices() const { return side_u | side_v; }

  friend bool operator==(const Component&, const Component&) = default;
};

/// The graph G(C) over the ground set whose edges are the minimum covers of a
/// tangled clutter. Components are ordered by their smallest vertex.
struct MinCoverGraph {
  int vertex_count = 0;
  std::vector<ElemSet> edges;  // each of size 2, canonically ordered
  std::vector<Component> components;

  int component_count() const { return static_cast<int>(components.size()); }

  friend bool operator==(const MinCoverGraph&, const MinCoverGraph&) = default;
};

/// True iff tau(c) = 2 and every element lies in some size-2 cover.
bool is_tangled(const Clutter& c);

/// Builds G(c) with canonical component bipartitions. Throws NotTangled when
/// the precondition fails and NotBipartiteError (with an odd closed walk)
/// when the minimum covers induce an odd cycle, which means c is not clean.
MinCoverGraph min_cover_graph(const Clutter& c);

/// Members of c that intersect every minimum cover exactly once.
std::vector<ElemSet> core(const Clutter& c);

/// Independent route to the core: members whose trace on every component is
/// one full bipartition side. Kept as an oracle against `core`.
std::vector<ElemSet> core_by_component_formula(const Clutter& c,
                                               const MinCoverGraph& g);

/// Distinct 0/1 points in dimension d; coordinate i of a point is bit i-1 of
/// the mask. Points are kept sorted by coordinate-wise lexicographic order.
struct SetSystem {
  int dimension = 0;
  std::vector<ElemSet> points;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

/// Canonical point order: lexicographic on the coordinate vector, first
/// coordinate most significant ((0,0,1) < (0,1,0) < (1,0,0)).
bool point_lex_less(ElemSet a, ElemSet b, int dimension);

/// Sorts and checks distinctness/bounds. Throws BadDimension on a duplicate
/// point or an out-of-range coordinate.
SetSystem make_set_system(int dimension, std::vector<ElemSet> points);

/// {0,1}^d.
SetSystem full_cube(int dimension);

/// One point per core member under the canonical orientation: coordinate i is
/// 0 iff the member's trace on component i is side_u. Throws
/// SetcoreNotInjective if two core members collide (impossible for clean
/// inputs by the component-trace characterization of the core).
SetSystem setcore(const Clutter& c);
SetSystem setcore(const Clutter& c, const MinCoverGraph& g);

/// Verifiable consequences of the interiority theorem for setcores.
struct GeometryReport {
  bool nonempty = false;
  bool no_duplicated_coordinates = false;
  bool full_dimensional = false;
  bool lambda_at_least_3 = false;  // vacuously true when d < 3
  /// Informational only: coordinate pairs that are complements of each other.
  std::vector<std::pair<int, int>> complementary_columns;

  bool all_pass() const {
    return nonempty && no_duplicated_coordinates && full_dimensional &&
           lambda_at_least_3;
  }
};

/// Throws EmptySetSystem on an empty input.
GeometryReport check_setcore_geometry(const SetSystem& s);

/// Exact affine rank of a 0/1 point set (fraction-free elimination, no
/// floating point).
int affine_rank(const SetSystem& s);

enum class Side { U, V };

/// The deletion-contraction reduction: contracts the kept side of the chosen
/// component (0-based index) and deletes the other side. Throws
/// GraphConnected when g has a single component.
MinorResult side_minor(const Clutter& c, const MinCoverGraph& g, int component,
                       Side kept_side);

}  // namespace clutterlab
