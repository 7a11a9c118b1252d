#include "clutterlab/structure.hpp"

#include <algorithm>

#include "clutterlab/params.hpp"

namespace clutterlab {

namespace {

// All covers of size exactly 2 ({u,v}, u < v), in canonical order.
std::vector<ElemSet> pair_covers(const Clutter& c) {
  std::vector<ElemSet> out;
  const int n = c.ground_size();
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      const ElemSet pair = ElemSet::single(u).with(v);
      if (is_cover(c, pair)) out.push_back(pair);
    }
  return out;
}

bool has_singleton_cover(const Clutter& c) {
  for (int u = 1; u <= c.ground_size(); ++u)
    if (is_cover(c, ElemSet::single(u))) return true;
  return false;
}

}  // namespace

bool is_tangled(const Clutter& c) {
  if (c.member_count() == 0) return false;                  // tau = 0
  if (c.members().front().empty()) return false;            // tau = inf
  if (has_singleton_cover(c)) return false;                 // tau <= 1
  const std::vector<ElemSet> pairs = pair_covers(c);
  if (pairs.empty()) return false;                          // tau > 2
  ElemSet used;
  for (ElemSet p : pairs) used = used | p;
  return used == ElemSet::full(c.ground_size());
}

MinCoverGraph min_cover_graph(const Clutter& c) {
  if (!is_tangled(c))
    throw Error(Errc::NotTangled, "min_cover_graph requires a tangled clutter");
  const int n = c.ground_size();
  MinCoverGraph g;
  g.vertex_count = n;
  g.edges = pair_covers(c);

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (ElemSet e : g.edges) {
    auto uv = e.elements();
    adj[static_cast<std::size_t>(uv[0])].push_back(uv[1]);
    adj[static_cast<std::size_t>(uv[1])].push_back(uv[0]);
  }

  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  for (int root = 1; root <= n; ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    ElemSet sides[2];
    std::vector<int> queue = {root};
    color[static_cast<std::size_t>(root)] = 0;
    sides[0] = sides[0].with(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(v)] == -1) {
          color[static_cast<std::size_t>(v)] =
              1 - color[static_cast<std::size_t>(u)];
          parent[static_cast<std::size_t>(v)] = u;
          sides[color[static_cast<std::size_t>(v)]] =
              sides[color[static_cast<std::size_t>(v)]].with(v);
          queue.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] ==
                   color[static_cast<std::size_t>(u)]) {
          // odd closed walk certificate: u up to the common ancestor, down
          // to v, then the edge vu closes the walk
          std::vector<int> up, down;
          for (int x = u; x != 0; x = parent[static_cast<std::size_t>(x)])
            up.push_back(x);
          for (int x = v; x != 0; x = parent[static_cast<std::size_t>(x)])
            down.push_back(x);
          while (up.size() > 1 && down.size() > 1 &&
                 up[up.size() - 2] == down[down.size() - 2]) {
            up.pop_back();
            down.pop_back();
          }
          down.pop_back();  // the shared ancestor stays in `up` only
          std::reverse(down.begin(), down.end());
          up.insert(up.end(), down.begin(), down.end());
          up.push_back(u);
          throw NotBipartiteError(std::move(up));
        }
      }
    }
    // side_u is the root's side; the root is the component's smallest vertex
    g.components.push_back({sides[0], sides[1]});
  }
  return g;
}

std::vector<ElemSet> core(const Clutter& c) {
  if (!is_tangled(c))
    throw Error(Errc::NotTangled, "core requires a tangled clutter");
  const std::vector<ElemSet> covers = pair_covers(c);
  std::vector<ElemSet> out;
  for (ElemSet m : c.members()) {
    bool ok = true;
    for (ElemSet b : covers)
      if ((m & b).size() != 1) {
        ok = false;
        break;
      }
    if (ok) out.push_back(m);
  }
  return out;
}

std::vector<ElemSet> core_by_component_formula(const Clutter& c,
                                               const MinCoverGraph& g) {
  std::vector<ElemSet> out;
  for (ElemSet m : c.members()) {
    bool ok = true;
    for (const Component& comp : g.components) {
      const ElemSet trace = m & comp.vertices();
      if (trace != comp.side_u && trace != comp.side_v) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(m);
  }
  return out;
}

bool point_lex_less(ElemSet a, ElemSet b, int dimension) {
  for (int i = 1; i <= dimension; ++i) {
    const bool ai = a.contains(i), bi = b.contains(i);
    if (ai != bi) return bi;
  }
  return false;
}

SetSystem make_set_system(int dimension, std::vector<ElemSet> points) {
  if (dimension < 0 || dimension > 63)
    throw Error(Errc::BadDimension, "dimension must be in [0, 63]");
  const ElemSet box = ElemSet::full(dimension);
  for (ElemSet p : points)
    if (!p.subset_of(box))
      throw Error(Errc::BadDimension,
                  "point exceeds dimension " + std::to_string(dimension));
  std::sort(points.begin(), points.end(), [dimension](ElemSet a, ElemSet b) {
    return point_lex_less(a, b, dimension);
  });
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i] == points[i + 1])
      throw Error(Errc::BadDimension,
                  "duplicate point " + points[i].to_string());
  return {dimension, std::move(points)};
}

SetSystem full_cube(int dimension) {
  std::vector<ElemSet> pts;
  pts.reserve(std::size_t{1} << dimension);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << dimension); ++b)
    pts.push_back(ElemSet::from_bits(b));
  return make_set_system(dimension, std::move(pts));
}

SetSystem setcore(const Clutter& c, const MinCoverGraph& g) {
  const std::vector<ElemSet> members = core(c);
  const int d = g.component_count();
  std::vector<ElemSet> points;
  points.reserve(members.size());
  for (ElemSet m : members) {
    ElemSet p;
    for (int i = 0; i < d; ++i) {
      const Component& comp = g.components[static_cast<std::size_t>(i)];
      const ElemSet trace = m & comp.vertices();
      if (trace == comp.side_u) continue;  // coordinate stays 0
      if (trace == comp.side_v) {
        p = p.with(i + 1);
      } else {
        throw Error(Errc::SetcoreNotInjective,
                    "core member " + m.to_string() +
                        " does not trace a full bipartition side (input is "
                        "not clean)");
      }
    }
    points.push_back(p);
  }
  std::sort(points.begin(), points.end(),
            [d](ElemSet a, ElemSet b) { return point_lex_less(a, b, d); });
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i] == points[i + 1])
      throw Error(Errc::SetcoreNotInjective,
                  "two core members map to point " + points[i].to_string());
  return {d, std::move(points)};
}

SetSystem setcore(const Clutter& c) { return setcore(c, min_cover_graph(c)); }

int affine_rank(const SetSystem& s) {
  if (s.points.size() <= 1) return 0;
  const int d = s.dimension;
  const std::size_t rows_n = s.points.size() - 1;
  std::vector<std::vector<__int128>> rows(rows_n,
                                          std::vector<__int128>(
                                              static_cast<std::size_t>(d)));
  for (std::size_t r = 0; r < rows_n; ++r)
    for (int i = 1; i <= d; ++i)
      rows[r][static_cast<std::size_t>(i - 1)] =
          static_cast<int>(s.points[r + 1].contains(i)) -
          static_cast<int>(s.points[0].contains(i));

  // Bareiss fraction-free elimination; exact over the integers.
  int rank = 0;
  __int128 prev_pivot = 1;
  for (int col = 0; col < d && rank < static_cast<int>(rows_n); ++col) {
    int pivot_row = -1;
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows_n; ++r)
      if (rows[r][static_cast<std::size_t>(col)] != 0) {
        pivot_row = static_cast<int>(r);
        break;
      }
    if (pivot_row < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)],
              rows[static_cast<std::size_t>(pivot_row)]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    const __int128 pivot = prow[static_cast<std::size_t>(col)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows_n; ++r) {
      auto& row = rows[r];
      const __int128 factor = row[static_cast<std::size_t>(col)];
      for (int j = col; j < d; ++j) {
        const std::size_t jj = static_cast<std::size_t>(j);
        row[jj] = (row[jj] * pivot - prow[jj] * factor) / prev_pivot;
      }
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

GeometryReport check_setcore_geometry(const SetSystem& s) {
  if (s.points.empty())
    throw Error(Errc::EmptySetSystem, "geometry checks need points");
  GeometryReport report;
  report.nonempty = true;

  const int d = s.dimension;
  report.no_duplicated_coordinates = true;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      bool identical = true, complementary = true;
      for (ElemSet p : s.points) {
        if (p.contains(i) != p.contains(j)) identical = false;
        if (p.contains(i) == p.contains(j)) complementary = false;
      }
      if (identical) report.no_duplicated_coordinates = false;
      if (complementary) report.complementary_columns.emplace_back(i, j);
    }

  report.full_dimensional = affine_rank(s) == d;
  report.lambda_at_least_3 =
      d < 3 || connectivity(s).value >= ExtNat(3);
  return report;
}

MinorResult side_minor(const Clutter& c, const MinCoverGraph& g, int component,
                       Side kept_side) {
  if (g.component_count() < 2)
    throw Error(Errc::GraphConnected,
                "deletion-contraction needs a disconnected graph");
  if (component < 0 || component >= g.component_count())
    throw Error(Errc::IndexOutOfRange,
                "component index " + std::to_string(component));
  const Component& comp = g.components[static_cast<std::size_t>(component)];
  const ElemSet kept = kept_side == Side::U ? comp.side_u : comp.side_v;
  const ElemSet dropped = kept_side == Side::U ? comp.side_v : comp.side_u;
  return minor(c, {dropped, kept});
}

}  // namespace clutterlab
