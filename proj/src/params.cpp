#include "clutterlab/params.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace clutterlab {

ElemSet pattern_union(const MinCoverGraph& g, const SidePattern& p) {
  ElemSet u;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Component& comp = g.components[i];
    if (p[i] == SideChoice::U) u = u | comp.side_u;
    if (p[i] == SideChoice::V) u = u | comp.side_v;
  }
  return u;
}

int pattern_chosen_count(const SidePattern& p) {
  int k = 0;
  for (SideChoice ch : p)
    if (ch != SideChoice::Skip) ++k;
  return k;
}

std::string pattern_to_string(const SidePattern& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += p[i] == SideChoice::Skip ? "-" : (p[i] == SideChoice::U ? "U" : "V");
  }
  return out + ")";
}

bool is_rainbow_cover(const Clutter& c, const MinCoverGraph& g, ElemSet b) {
  if (!is_cover(c, b)) return false;
  for (const Component& comp : g.components)
    if ((b & comp.vertices()).size() > 1) return false;
  return true;
}

namespace {

// Minimum-size cover of `targets` by at most one vertex per component, with
// the lexicographically least witness at the optimum. A partial selection is
// abandoned when some target is disjoint from it and from every component
// still open.
class OnePerComponentSearch {
 public:
  OnePerComponentSearch(std::span<const ElemSet> targets,
                        const MinCoverGraph& g)
      : targets_(targets), g_(g) {
    suffix_union_.resize(g.components.size() + 1);
    for (std::size_t i = g.components.size(); i-- > 0;)
      suffix_union_[i] = suffix_union_[i + 1] | g.components[i].vertices();
  }

  CoverSearchResult run() {
    descend(0, ElemSet{});
    if (!best_) return {ExtNat::infinity(), std::nullopt};
    return {ExtNat(static_cast<std::uint64_t>(best_->size())), best_};
  }

 private:
  void descend(std::size_t idx, ElemSet selected) {
    if (best_ && selected.size() > best_->size()) return;
    const ElemSet reachable = selected | suffix_union_[idx];
    for (ElemSet t : targets_)
      if (!t.intersects(reachable)) return;
    if (idx == g_.components.size()) {
      for (ElemSet t : targets_)
        if (!t.intersects(selected)) return;
      if (!best_ || selected.size() < best_->size() ||
          (selected.size() == best_->size() && lex_less(selected, *best_)))
        best_ = selected;
      return;
    }
    descend(idx + 1, selected);  // skip this component
    for (int v : g_.components[idx].vertices().elements())
      descend(idx + 1, selected.with(v));
  }

  std::span<const ElemSet> targets_;
  const MinCoverGraph& g_;
  std::vector<ElemSet> suffix_union_;
  std::optional<ElemSet> best_;
};

}  // namespace

CoverSearchResult rainbow_covering_number(const Clutter& c,
                                          const MinCoverGraph& g) {
  return OnePerComponentSearch(c.members(), g).run();
}

CoverSearchResult mu1(const Clutter& c, const MinCoverGraph& g) {
  const std::vector<ElemSet> core_members = core(c);
  if (core_members.empty())
    throw Error(Errc::EmptyCore, "mu1 needs a nonempty core");
  return OnePerComponentSearch(core_members, g).run();
}

bool is_irreducible(const Clutter& c, const MinCoverGraph& g,
                    const SidePattern& p) {
  const ElemSet base = pattern_union(g, p);
  if (!is_cover(c, base))
    throw Error(Errc::NotACover, "pattern side union does not cover");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == SideChoice::Skip) continue;
    const Component& comp = g.components[i];
    const ElemSet chosen = p[i] == SideChoice::U ? comp.side_u : comp.side_v;
    const ElemSet other = p[i] == SideChoice::U ? comp.side_v : comp.side_u;
    if (is_cover(c, (base - chosen) | other)) return false;
  }
  return true;
}

namespace {

// Full-side pattern enumeration in lexicographic order (Skip < U < V,
// component 1 most significant). The first covering pattern at the best
// chosen-count is the lexicographically least one.
class PatternSearch {
 public:
  PatternSearch(const Clutter& c, const MinCoverGraph& g,
                bool require_irreducible)
      : c_(c), g_(g), require_irreducible_(require_irreducible) {}

  PatternSearchResult run() {
    SidePattern p(static_cast<std::size_t>(g_.component_count()),
                  SideChoice::Skip);
    descend(p, 0, 0);
    if (!best_) return {ExtNat::infinity(), std::nullopt};
    return {ExtNat(static_cast<std::uint64_t>(pattern_chosen_count(*best_))),
            best_};
  }

 private:
  void descend(SidePattern& p, std::size_t idx, int chosen) {
    if (best_count_ >= 0 && chosen >= best_count_) return;
    if (idx == p.size()) {
      const ElemSet u = pattern_union(g_, p);
      if (!is_cover(c_, u)) return;
      if (require_irreducible_ && !is_irreducible(c_, g_, p)) return;
      best_ = p;
      best_count_ = chosen;
      return;
    }
    for (SideChoice ch : {SideChoice::Skip, SideChoice::U, SideChoice::V}) {
      p[idx] = ch;
      descend(p, idx + 1, chosen + (ch != SideChoice::Skip ? 1 : 0));
    }
    p[idx] = SideChoice::Skip;
  }

  const Clutter& c_;
  const MinCoverGraph& g_;
  bool require_irreducible_;
  std::optional<SidePattern> best_;
  int best_count_ = -1;
};

}  // namespace

PatternSearchResult mu2(const Clutter& c, const MinCoverGraph& g) {
  return PatternSearch(c, g, /*require_irreducible=*/false).run();
}

PatternSearchResult mu3(const Clutter& c, const MinCoverGraph& g) {
  return PatternSearch(c, g, /*require_irreducible=*/true).run();
}

bool gsc_valid(const SetSystem& s, const GscInequality& q) {
  const ElemSet box = ElemSet::full(s.dimension);
  if (!q.positive.subset_of(box) || !q.negated.subset_of(box))
    throw Error(Errc::IndexOutOfRange,
                "inequality index exceeds dimension " +
                    std::to_string(s.dimension));
  if (q.positive.intersects(q.negated))
    throw std::invalid_argument("GSC index sets must be disjoint");
  for (ElemSet p : s.points)
    if (!p.intersects(q.positive) && q.negated.subset_of(p)) return false;
  return true;
}

ConnectivityResult connectivity(const SetSystem& s) {
  const int d = s.dimension;
  if (d > 20)
    throw Error(Errc::BoundExceeded,
                "connectivity enumeration bound is dimension 20");
  if (s.points.size() == (std::size_t{1} << d))
    return {ExtNat::infinity(), std::nullopt};

  // by increasing |I|+|J|, then pattern-set mask, then I submask
  const std::uint64_t top = d == 0 ? 0 : ((std::uint64_t{1} << d) - 1);
  for (int t = 0; t <= d; ++t) {
    for (std::uint64_t pat = 0;; ++pat) {
      if (std::popcount(pat) == t) {
        std::uint64_t i = 0;
        while (true) {
          const GscInequality q{ElemSet::from_bits(i),
                                ElemSet::from_bits(pat & ~i)};
          if (gsc_valid(s, q))
            return {ExtNat(static_cast<std::uint64_t>(t)), q};
          if (i == pat) break;
          i = (i - pat) & pat;
        }
      }
      if (pat == top) break;
    }
  }
  // a missing point always yields a valid d-variable inequality
  throw std::logic_error("connectivity: no valid inequality below full cube");
}

ParamReport param_report(const Clutter& c) {
  const MinCoverGraph g = min_cover_graph(c);
  ParamReport report;

  const CoverSearchResult mu_res = rainbow_covering_number(c, g);
  report.mu = mu_res.value;
  report.rainbow_witness = mu_res.witness;

  const CoverSearchResult mu1_res = mu1(c, g);
  report.mu1 = mu1_res.value;
  report.core_cover_witness = mu1_res.witness;

  const PatternSearchResult mu2_res = mu2(c, g);
  report.mu2 = mu2_res.value;
  report.mu2_witness = mu2_res.witness;

  const PatternSearchResult mu3_res = mu3(c, g);
  report.mu3 = mu3_res.value;
  report.mu3_witness = mu3_res.witness;

  const ConnectivityResult lambda_res = connectivity(setcore(c, g));
  report.lambda = lambda_res.value;
  report.lambda_witness = lambda_res.witness;
  return report;
}

}  // namespace clutterlab
