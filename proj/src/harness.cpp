#include "clutterlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "clutterlab/io.hpp"
#include "clutterlab/obstructions.hpp"
#include "clutterlab/params.hpp"

namespace clutterlab {

std::string GeneratorConfig::echo() const {
  std::ostringstream ss;
  switch (kind) {
    case GenKind::Exhaustive:
      ss << "exhaustive n<=" << n;
      break;
    case GenKind::Random:
      ss << "random n=" << n << " count=" << count << " seed=" << seed
         << " sizes=[" << min_member_size << ","
         << (max_member_size == 0 ? n : max_member_size) << "]";
      break;
    case GenKind::Family:
      ss << "family ";
      if (family == FamilyKind::Delta) ss << "delta(" << n << ")";
      if (family == FamilyKind::OddHole) ss << "odd-hole(" << n << ")";
      if (family == FamilyKind::Cuboid)
        ss << "cuboid(d=" << (cuboid_points ? cuboid_points->dimension : 0)
           << ")";
      break;
  }
  return ss.str();
}

namespace {

void enumerate_antichains(int n, std::vector<std::uint64_t>& chosen,
                          std::uint64_t next,
                          const std::function<void(const Clutter&)>& fn) {
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t s = next; s < top; ++s) {
    bool ok = true;
    for (std::uint64_t m : chosen)
      if ((m & s) == m) {  // m proper subset of s (s > m rules out s within m)
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(s);
    std::vector<ElemSet> members;
    members.reserve(chosen.size());
    for (std::uint64_t m : chosen) members.push_back(ElemSet::from_bits(m));
    fn(Clutter::from_antichain(n, std::move(members)));
    enumerate_antichains(n, chosen, s + 1, fn);
    chosen.pop_back();
  }
}

}  // namespace

void for_each_clutter(int n, const std::function<void(const Clutter&)>& fn,
                      int max_n) {
  if (n < 0 || n > max_n)
    throw Error(Errc::BoundExceeded,
                "exhaustive enumeration bound is n <= " + std::to_string(max_n));
  fn(Clutter::validate(n, {}));            // no members
  fn(Clutter::validate(n, {ElemSet{}}));   // {emptyset}
  std::vector<std::uint64_t> chosen;
  enumerate_antichains(n, chosen, 1, fn);
}

std::vector<Clutter> enumerate_clutters(int n, int max_n) {
  std::vector<Clutter> out;
  for_each_clutter(n, [&](const Clutter& c) { out.push_back(c); }, max_n);
  return out;
}

RandomClutterStream::RandomClutterStream(const GeneratorConfig& config)
    : n_(config.n),
      min_size_(config.min_member_size),
      max_size_(config.max_member_size == 0 ? config.n
                                            : config.max_member_size),
      engine_(config.seed) {
  if (min_size_ < 1 || min_size_ > max_size_ || max_size_ > n_)
    throw Error(Errc::SizeRangeInfeasible,
                "member sizes [" + std::to_string(min_size_) + "," +
                    std::to_string(max_size_) + "] infeasible for n=" +
                    std::to_string(n_));
}

Clutter RandomClutterStream::next() {
  std::uniform_int_distribution<int> member_count_dist(1, std::max(2, n_));
  std::uniform_int_distribution<int> size_dist(min_size_, max_size_);
  int want = member_count_dist(engine_);
  std::vector<int> pool(static_cast<std::size_t>(n_));
  std::iota(pool.begin(), pool.end(), 1);
  int failures = 0;
  while (true) {
    std::vector<ElemSet> raw;
    raw.reserve(static_cast<std::size_t>(want));
    for (int i = 0; i < want; ++i) {
      const int k = size_dist(engine_);
      // partial Fisher-Yates: the first k entries become the member
      for (int j = 0; j < k; ++j) {
        std::uniform_int_distribution<int> pick(j, n_ - 1);
        std::swap(pool[static_cast<std::size_t>(j)],
                  pool[static_cast<std::size_t>(pick(engine_))]);
      }
      ElemSet m;
      for (int j = 0; j < k; ++j)
        m = m.with(pool[static_cast<std::size_t>(j)]);
      raw.push_back(m);
    }
    bool antichain = true;
    for (std::size_t i = 0; i < raw.size() && antichain; ++i)
      for (std::size_t j = 0; j < raw.size() && antichain; ++j)
        if (i != j && raw[i].subset_of(raw[j])) antichain = false;
    if (antichain) return Clutter::from_antichain(n_, std::move(raw));
    if (++failures % 200 == 0 && want > 1) --want;  // dense ranges stall
  }
}

Clutter random_clutter(const GeneratorConfig& config) {
  return RandomClutterStream(config).next();
}

Clutter make_delta(int n) {
  if (n < 3) throw Error(Errc::BadDimension, "delta needs n >= 3");
  std::vector<ElemSet> members;
  for (int v = 2; v <= n; ++v) members.push_back(ElemSet::of({1, v}));
  members.push_back(ElemSet::full(n).without(1));
  return Clutter::validate(n, std::move(members));
}

Clutter make_odd_hole(int n) {
  if (n < 5 || n % 2 == 0)
    throw Error(Errc::BadDimension, "extended odd hole needs odd n >= 5");
  std::vector<ElemSet> members;
  for (int v = 1; v < n; ++v) members.push_back(ElemSet::of({v, v + 1}));
  members.push_back(ElemSet::of({n, 1}));
  return Clutter::validate(n, std::move(members));
}

Clutter make_cuboid(const SetSystem& s) {
  if (s.dimension > 32)
    throw Error(Errc::BadDimension, "cuboid needs dimension <= 32");
  std::vector<ElemSet> members;
  members.reserve(s.points.size());
  for (ElemSet p : s.points) {
    ElemSet m;
    for (int i = 1; i <= s.dimension; ++i)
      m = m.with(p.contains(i) ? 2 * i - 1 : 2 * i);
    members.push_back(m);
  }
  return Clutter::validate(2 * s.dimension, std::move(members));
}

Clutter make_family(const GeneratorConfig& config) {
  if (!config.family)
    throw Error(Errc::BadDimension, "family generator needs a family");
  switch (*config.family) {
    case FamilyKind::Delta:
      return make_delta(config.n);
    case FamilyKind::OddHole:
      return make_odd_hole(config.n);
    case FamilyKind::Cuboid:
      if (!config.cuboid_points)
        throw Error(Errc::BadDimension, "cuboid family needs a set-system");
      return make_cuboid(*config.cuboid_points);
  }
  throw Error(Errc::BadDimension, "unknown family");
}

// ---------------------------------------------------------------------------
// Property checks
// ---------------------------------------------------------------------------

namespace {

std::uint64_t clutter_hash(const Clutter& c) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(c.ground_size()));
  for (ElemSet m : c.members()) mix(m.bits());
  return h;
}

// Minor specs for the duality check: all of them for tiny ground sets,
// otherwise 10 specs drawn from a PRNG seeded by the instance content, so a
// replay regenerates the same specs without campaign state.
std::vector<MinorSpec> duality_specs(const Clutter& c) {
  const int n = c.ground_size();
  if (n <= 3) return all_minor_specs(n);
  std::mt19937_64 engine(clutter_hash(c));
  std::uniform_int_distribution<int> role(0, 2);
  std::vector<MinorSpec> specs;
  for (int k = 0; k < 10; ++k) {
    ElemSet del, con;
    for (int e = 1; e <= n; ++e) {
      switch (role(engine)) {
        case 1: del = del.with(e); break;
        case 2: con = con.with(e); break;
        default: break;
      }
    }
    specs.push_back({del, con});
  }
  return specs;
}

std::string describe(ElemSet s) { return s.to_string(); }

std::optional<std::string> check_involution(const Clutter& c) {
  const Clutter bb = blocker(blocker(c));
  if (bb == c) return std::nullopt;
  return "b(b(C)) != C; got " + format_clutter(bb);
}

std::optional<std::string> check_duality(const Clutter& c) {
  const Clutter b = blocker(c);
  for (const MinorSpec& spec : duality_specs(c)) {
    const Clutter lhs = blocker(minor(c, spec).clutter);
    const Clutter rhs = minor(b, {spec.contracted, spec.deleted}).clutter;
    if (lhs != rhs)
      return "b(C\\I/J) != b(C)/I\\J for I=" + describe(spec.deleted) +
             " J=" + describe(spec.contracted);
  }
  return std::nullopt;
}

// Everything below assumes a clean tangled instance.
struct CleanTangledContext {
  const Clutter& c;
  MinCoverGraph g;
  std::vector<ElemSet> core_members;
  SetSystem score;

  explicit CleanTangledContext(const Clutter& clutter)
      : c(clutter),
        g(min_cover_graph(clutter)),
        core_members(core(clutter)),
        score(setcore(clutter, g)) {}
};

std::optional<std::string> check_core_formula(const CleanTangledContext& ctx) {
  const std::vector<ElemSet> formula = core_by_component_formula(ctx.c, ctx.g);
  if (formula == ctx.core_members) return std::nullopt;
  return "core by definition has " + std::to_string(ctx.core_members.size()) +
         " members, by component formula " + std::to_string(formula.size());
}

std::optional<std::string> check_core_shape(const CleanTangledContext& ctx) {
  if (ctx.core_members.empty()) return "core is empty";
  if (ctx.score.points.size() != ctx.core_members.size())
    return "setcore has " + std::to_string(ctx.score.points.size()) +
           " points for " + std::to_string(ctx.core_members.size()) +
           " core members";
  const Clutter core_clutter =
      Clutter::from_antichain(ctx.c.ground_size(),
                              {ctx.core_members.begin(),
                               ctx.core_members.end()});
  const ExtNat tau = covering_number(core_clutter);
  if (tau != ExtNat(2)) return "tau(core) = " + tau.to_string() + ", not 2";
  return std::nullopt;
}

std::optional<std::string> check_corollary_d2(const CleanTangledContext& ctx) {
  const int d = ctx.g.component_count();
  if (d > 2) return std::nullopt;
  if (ctx.score == full_cube(d)) return std::nullopt;
  return "d = " + std::to_string(d) + " but setcore != {0,1}^d";
}

std::optional<std::string> check_geometry(const CleanTangledContext& ctx) {
  const GeometryReport r = check_setcore_geometry(ctx.score);
  if (r.all_pass()) return std::nullopt;
  std::string what;
  if (!r.no_duplicated_coordinates) what += " duplicated-coordinates";
  if (!r.full_dimensional) what += " not-full-dimensional";
  if (!r.lambda_at_least_3) what += " lambda<3";
  return "setcore geometry failed:" + what;
}

std::optional<std::string> check_deletion_contraction(
    const CleanTangledContext& ctx) {
  const int d = ctx.g.component_count();
  if (d < 2) return std::nullopt;
  for (int i = 0; i < d; ++i) {
    for (Side side : {Side::U, Side::V}) {
      const Component& comp = ctx.g.components[static_cast<std::size_t>(i)];
      const ElemSet kept = side == Side::U ? comp.side_u : comp.side_v;
      const ElemSet dropped = side == Side::U ? comp.side_v : comp.side_u;
      const MinorResult reduced = side_minor(ctx.c, ctx.g, i, side);
      const std::string where =
          "component " + std::to_string(i + 1) + " keep " + describe(kept);
      if (!is_tangled(reduced.clutter))
        return "side minor not tangled at " + where;
      if (!is_clean(reduced.clutter).clean)
        return "side minor not clean at " + where;
      // core(C\U/U') must land inside {C - U' : C in core(C), C cap U = 0}
      std::vector<int> relabel(static_cast<std::size_t>(ctx.c.ground_size()) + 1,
                               0);
      for (std::size_t k = 0; k < reduced.old_label.size(); ++k)
        relabel[static_cast<std::size_t>(reduced.old_label[k])] =
            static_cast<int>(k) + 1;
      std::vector<ElemSet> image;
      for (ElemSet m : ctx.core_members) {
        if (m.intersects(dropped)) continue;
        ElemSet mapped;
        for (int e : (m - kept).elements())
          mapped = mapped.with(relabel[static_cast<std::size_t>(e)]);
        image.push_back(mapped);
      }
      for (ElemSet m : core(reduced.clutter)) {
        if (std::find(image.begin(), image.end(), m) == image.end())
          return "core member " + describe(m) +
                 " of the side minor is outside the core image at " + where;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_setcore0(const CleanTangledContext& ctx) {
  const int n = ctx.c.ground_size();
  auto same_part = [&](int u, int v) {
    for (const Component& comp : ctx.g.components)
      if ((comp.side_u.contains(u) && comp.side_u.contains(v)) ||
          (comp.side_v.contains(u) && comp.side_v.contains(v)))
        return true;
    return false;
  };
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v || same_part(u, v)) continue;
      bool found = false;
      for (ElemSet m : ctx.core_members)
        if (m.contains(u) && !m.contains(v)) {
          found = true;
          break;
        }
      if (!found)
        return "every core member containing " + std::to_string(u) +
               " also contains " + std::to_string(v) +
               ", yet they are not in the same bipartition part";
    }
  return std::nullopt;
}

std::optional<std::string> check_theorem(const CleanTangledContext& ctx) {
  const ParamReport r = param_report(ctx.c);
  if (r.mu == r.mu1 && r.mu1 == r.mu2 && r.mu2 == r.mu3 && r.mu3 == r.lambda)
    return std::nullopt;
  return "parameters differ: mu=" + r.mu.to_string() +
         " mu1=" + r.mu1.to_string() + " mu2=" + r.mu2.to_string() +
         " mu3=" + r.mu3.to_string() + " lambda=" + r.lambda.to_string();
}

std::optional<std::string> check_mu_chain(const CleanTangledContext& ctx) {
  const ParamReport r = param_report(ctx.c);
  if (!(r.mu1 >= r.mu2)) return "mu1 < mu2";
  if (!(r.mu2 >= r.mu3)) return "mu2 < mu3";
  if (!(r.mu3 >= r.mu)) return "mu3 < mu";
  if (!(r.mu >= r.mu1)) return "mu < mu1";
  if (r.mu1.is_finite() && r.mu1 < ExtNat(3))
    return "finite mu1 = " + r.mu1.to_string() + " below 3";
  return std::nullopt;
}

// Translate the mu1 witness into a GSC inequality and the lambda witness
// into a one-per-component cover of the core; both directions must land on
// valid certificates of the same size.
std::optional<std::string> check_mu1_lambda_bijection(
    const CleanTangledContext& ctx) {
  const CoverSearchResult m1 = mu1(ctx.c, ctx.g);
  const ConnectivityResult lam = connectivity(ctx.score);
  if (m1.value != lam.value)
    return "mu1 = " + m1.value.to_string() +
           " != lambda = " + lam.value.to_string();
  if (m1.witness) {
    GscInequality q;
    for (std::size_t i = 0; i < ctx.g.components.size(); ++i) {
      const Component& comp = ctx.g.components[i];
      const ElemSet trace = *m1.witness & comp.vertices();
      if (trace.empty()) continue;
      if (trace.subset_of(comp.side_v))
        q.positive = q.positive.with(static_cast<int>(i) + 1);
      else
        q.negated = q.negated.with(static_cast<int>(i) + 1);
    }
    if (!gsc_valid(ctx.score, q))
      return "mu1 witness " + describe(*m1.witness) +
             " translates to an invalid GSC inequality";
    if (q.variable_count() != static_cast<int>(m1.value.value()))
      return "mu1 witness translation changes the variable count";
  }
  if (lam.witness) {
    ElemSet cover;
    for (int i : lam.witness->positive.elements())
      cover = cover.with(
          ctx.g.components[static_cast<std::size_t>(i - 1)].side_v.smallest());
    for (int j : lam.witness->negated.elements())
      cover = cover.with(
          ctx.g.components[static_cast<std::size_t>(j - 1)].side_u.smallest());
    for (ElemSet m : ctx.core_members)
      if (!m.intersects(cover))
        return "lambda witness translates to a non-cover of the core";
  }
  return std::nullopt;
}

std::optional<std::string> check_rainbow_monochromatic(
    const CleanTangledContext& ctx) {
  const CoverSearchResult mu = rainbow_covering_number(ctx.c, ctx.g);
  if (!mu.witness) return std::nullopt;
  if (!is_rainbow_cover(ctx.c, ctx.g, *mu.witness))
    return "rainbow witness fails revalidation";
  for (const Component& comp : ctx.g.components) {
    const ElemSet trace = *mu.witness & comp.vertices();
    if (!trace.subset_of(comp.side_u) && !trace.subset_of(comp.side_v))
      return "rainbow witness is not monochromatic";
  }
  return std::nullopt;
}

std::optional<std::string> check_witness_revalidation(
    const CleanTangledContext& ctx) {
  const ParamReport r = param_report(ctx.c);
  if (r.rainbow_witness && !is_rainbow_cover(ctx.c, ctx.g, *r.rainbow_witness))
    return "mu witness fails is_rainbow_cover";
  if (r.core_cover_witness) {
    for (ElemSet m : ctx.core_members)
      if (!m.intersects(*r.core_cover_witness))
        return "mu1 witness does not cover the core";
    for (const Component& comp : ctx.g.components)
      if ((*r.core_cover_witness & comp.vertices()).size() > 1)
        return "mu1 witness meets a component twice";
  }
  if (r.mu2_witness && !is_cover(ctx.c, pattern_union(ctx.g, *r.mu2_witness)))
    return "mu2 witness does not cover";
  if (r.mu3_witness && !is_irreducible(ctx.c, ctx.g, *r.mu3_witness))
    return "mu3 witness is not irreducible";
  if (r.lambda_witness && !gsc_valid(ctx.score, *r.lambda_witness))
    return "lambda witness fails gsc_valid";
  return std::nullopt;
}

std::optional<std::string> check_irred_mono(const CleanTangledContext& ctx) {
  const int d = ctx.g.component_count();
  SidePattern p(static_cast<std::size_t>(d), SideChoice::Skip);
  std::string failure;
  // every irreducible covering pattern must admit a minimal cover picking
  // exactly one vertex from each chosen side
  std::function<bool(std::size_t)> walk = [&](std::size_t idx) -> bool {
    if (idx == p.size()) {
      if (!is_cover(ctx.c, pattern_union(ctx.g, p))) return true;
      if (!is_irreducible(ctx.c, ctx.g, p)) return true;
      std::vector<ElemSet> sides;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == SideChoice::Skip) continue;
        sides.push_back(p[i] == SideChoice::U ? ctx.g.components[i].side_u
                                              : ctx.g.components[i].side_v);
      }
      ElemSet pick;
      std::function<bool(std::size_t)> choose = [&](std::size_t k) -> bool {
        if (k == sides.size()) {
          if (!is_cover(ctx.c, pick)) return false;
          for (int e : pick.elements())  // must also be a minimal cover
            if (is_cover(ctx.c, pick.without(e))) return false;
          return true;
        }
        for (int v : sides[k].elements()) {
          pick = pick.with(v);
          if (choose(k + 1)) return true;
          pick = pick.without(v);
        }
        return false;
      };
      if (!choose(0)) {
        failure = "irreducible pattern " + pattern_to_string(p) +
                  " has no one-per-side minimal cover";
        return false;
      }
      return true;
    }
    for (SideChoice ch : {SideChoice::Skip, SideChoice::U, SideChoice::V}) {
      p[idx] = ch;
      if (!walk(idx + 1)) return false;
    }
    p[idx] = SideChoice::Skip;
    return true;
  };
  if (!walk(0)) return failure;
  return std::nullopt;
}

using CleanCheck =
    std::optional<std::string> (*)(const CleanTangledContext&);

struct NamedCheck {
  const char* name;
  CleanCheck fn;
};

constexpr NamedCheck kTheoremChecks[] = {
    {"setcore-geometry", check_geometry},
    {"theorem-min-min", check_theorem},
};

constexpr NamedCheck kLemmaChecks[] = {
    {"core-formula", check_core_formula},
    {"core-shape", check_core_shape},
    {"corollary-d2", check_corollary_d2},
    {"setcore-geometry", check_geometry},
    {"deletion-contraction", check_deletion_contraction},
    {"setcore0", check_setcore0},
    {"theorem-min-min", check_theorem},
    {"mu-chain", check_mu_chain},
    {"mu1-lambda-bijection", check_mu1_lambda_bijection},
    {"rainbow-monochromatic", check_rainbow_monochromatic},
    {"witness-revalidation", check_witness_revalidation},
    {"irred-mono", check_irred_mono},
};

}  // namespace

std::vector<std::string> theorem_check_names() {
  std::vector<std::string> out;
  for (const NamedCheck& c : kTheoremChecks) out.emplace_back(c.name);
  return out;
}

std::vector<std::string> lemma_check_names() {
  std::vector<std::string> out = {"blocker-involution", "blocker-duality"};
  for (const NamedCheck& c : kLemmaChecks) out.emplace_back(c.name);
  return out;
}

std::optional<std::string> run_check(const std::string& name,
                                     const Clutter& c) {
  if (name == "blocker-involution") return check_involution(c);
  if (name == "blocker-duality") return check_duality(c);
  if (!is_tangled(c) || !is_clean(c).clean) return std::nullopt;
  CleanTangledContext ctx(c);
  for (const NamedCheck& check : kLemmaChecks)
    if (name == check.name) return check.fn(ctx);
  throw Error(Errc::ParseError, "unknown check `" + name + "`");
}

namespace {

class Campaign {
 public:
  Campaign(const GeneratorConfig& config, bool with_blocker_checks,
           std::span<const NamedCheck> clean_checks)
      : config_(config),
        with_blocker_checks_(with_blocker_checks),
        clean_checks_(clean_checks) {
    report_.config_echo = config.echo();
  }

  VerificationReport run() {
    const auto start = std::chrono::steady_clock::now();
    switch (config_.kind) {
      case GenKind::Exhaustive: {
        if (config_.n > config_.exhaustive_bound)
          throw Error(Errc::BoundExceeded,
                      "exhaustive campaign bound is n <= " +
                          std::to_string(config_.exhaustive_bound));
        for (int n = 0; n <= config_.n; ++n)
          for_each_clutter(n, [&](const Clutter& c) { visit(c); },
                           config_.exhaustive_bound);
        break;
      }
      case GenKind::Random: {
        RandomClutterStream stream(config_);
        for (std::uint64_t i = 0; i < config_.count; ++i) visit(stream.next());
        break;
      }
      case GenKind::Family:
        visit(make_family(config_));
        break;
    }
    report_.runtime_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return std::move(report_);
  }

 private:
  void record(const Clutter& c, const std::string& check,
              const std::string& detail) {
    ++report_.violations;
    if (report_.violation_details.size() < config_.violation_cap)
      report_.violation_details.push_back({check, format_clutter(c), detail});
  }

  void visit(const Clutter& c) {
    ++report_.instances_total;
    if (with_blocker_checks_) {
      if (auto fail = check_involution(c))
        record(c, "blocker-involution", *fail);
      if (auto fail = check_duality(c)) record(c, "blocker-duality", *fail);
    }
    if (!is_tangled(c) || !is_clean(c).clean) return;
    ++report_.clean_tangled_count;
    try {
      CleanTangledContext ctx(c);
      for (const NamedCheck& check : clean_checks_)
        if (auto fail = check.fn(ctx)) record(c, check.name, *fail);
    } catch (const NotBipartiteError& e) {
      record(c, "bipartite", "G(C) is not bipartite for a clean instance");
    }
  }

  GeneratorConfig config_;
  bool with_blocker_checks_;
  std::span<const NamedCheck> clean_checks_;
  VerificationReport report_;
};

}  // namespace

VerificationReport verify_theorem(const GeneratorConfig& config) {
  return Campaign(config, /*with_blocker_checks=*/false, kTheoremChecks).run();
}

VerificationReport verify_lemmas(const GeneratorConfig& config) {
  return Campaign(config, /*with_blocker_checks=*/true, kLemmaChecks).run();
}

}  // namespace clutterlab
