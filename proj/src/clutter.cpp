#include "clutterlab/clutter.hpp"

#include <algorithm>
#include <cassert>

namespace clutterlab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotAntichain: return "NotAntichain";
    case Errc::DuplicateMember: return "DuplicateMember";
    case Errc::ElementOutOfRange: return "ElementOutOfRange";
    case Errc::InfiniteCoveringNumber: return "InfiniteCoveringNumber";
    case Errc::NotTangled: return "NotTangled";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::GraphConnected: return "GraphConnected";
    case Errc::EmptyCore: return "EmptyCore";
    case Errc::NotACover: return "NotACover";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EmptySetSystem: return "EmptySetSystem";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::SizeRangeInfeasible: return "SizeRangeInfeasible";
    case Errc::BadDimension: return "BadDimension";
    case Errc::SetcoreNotInjective: return "SetcoreNotInjective";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

std::vector<int> ElemSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::uint64_t b = bits_;
  while (b) {
    out.push_back(std::countr_zero(b) + 1);
    b &= b - 1;
  }
  return out;
}

std::string ElemSet::to_string() const {
  std::string out = "{";
  bool first = true;
  std::uint64_t b = bits_;
  while (b) {
    if (!first) out += ",";
    out += std::to_string(std::countr_zero(b) + 1);
    first = false;
    b &= b - 1;
  }
  out += "}";
  return out;
}

bool lex_less(ElemSet a, ElemSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x && y) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;  // proper prefix is smaller
}

namespace {

void sort_canonical(std::vector<ElemSet>& members) {
  std::sort(members.begin(), members.end(), lex_less);
}

}  // namespace

Clutter Clutter::validate(int ground_size, std::vector<ElemSet> raw_members) {
  if (ground_size < 0 || ground_size > 64)
    throw Error(Errc::ElementOutOfRange,
                "ground size must be in [0, 64], got " +
                    std::to_string(ground_size));
  const ElemSet full = ElemSet::full(ground_size);
  for (ElemSet m : raw_members)
    if (!m.subset_of(full))
      throw Error(Errc::ElementOutOfRange,
                  "member " + m.to_string() + " exceeds ground set [1," +
                      std::to_string(ground_size) + "]");
  sort_canonical(raw_members);
  for (std::size_t i = 0; i + 1 < raw_members.size(); ++i)
    if (raw_members[i] == raw_members[i + 1])
      throw Error(Errc::DuplicateMember,
                  "member " + raw_members[i].to_string() + " repeated");
  for (std::size_t i = 0; i < raw_members.size(); ++i)
    for (std::size_t j = 0; j < raw_members.size(); ++j)
      if (i != j && raw_members[i].subset_of(raw_members[j]))
        throw Error(Errc::NotAntichain,
                    raw_members[i].to_string() + " is contained in " +
                        raw_members[j].to_string());
  return Clutter(ground_size, std::move(raw_members));
}

Clutter Clutter::from_antichain(int ground_size, std::vector<ElemSet> members) {
  sort_canonical(members);
#ifndef NDEBUG
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      assert(i == j || !members[i].subset_of(members[j]));
#endif
  return Clutter(ground_size, std::move(members));
}

bool is_cover(const Clutter& c, ElemSet b) {
  for (ElemSet m : c.members())
    if (!b.intersects(m)) return false;
  return true;
}

namespace {

// Keep the inclusion-wise minimal sets (deduplicated).
std::vector<std::uint64_t> minimal_sets(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint64_t> out;
  for (std::uint64_t s : sets) {
    bool dominated = false;
    for (std::uint64_t r : out)
      if ((r & s) == r) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

// Incremental transversal construction: fold members in one at a time,
// maintaining the family of minimal transversals of the prefix.
std::vector<std::uint64_t> blocker_masks(const Clutter& c) {
  std::vector<std::uint64_t> trans = {0};
  for (ElemSet member : c.members()) {
    const std::uint64_t m = member.bits();
    if (m == 0) return {};  // {emptyset} admits no cover
    std::vector<std::uint64_t> hit, cand;
    for (std::uint64_t t : trans) {
      if (t & m) {
        hit.push_back(t);
      } else {
        std::uint64_t rest = m;
        while (rest) {
          cand.push_back(t | (rest & -rest));
          rest &= rest - 1;
        }
      }
    }
    std::sort(cand.begin(), cand.end(),
              [](std::uint64_t a, std::uint64_t b) {
                int pa = std::popcount(a), pb = std::popcount(b);
                return pa != pb ? pa < pb : a < b;
              });
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<std::uint64_t> next = hit;
    // A candidate t|{v} can only be dominated by a hit transversal or by a
    // smaller candidate; hit transversals are never dominated by candidates.
    std::vector<std::uint64_t> kept;
    for (std::uint64_t s : cand) {
      bool dominated = false;
      for (std::uint64_t r : hit)
        if ((r & s) == r) {
          dominated = true;
          break;
        }
      if (!dominated)
        for (std::uint64_t r : kept)
          if ((r & s) == r) {
            dominated = true;
            break;
          }
      if (!dominated) {
        kept.push_back(s);
        next.push_back(s);
      }
    }
    trans = std::move(next);
  }
  return trans;
}

}  // namespace

Clutter blocker(const Clutter& c) {
  std::vector<std::uint64_t> masks = blocker_masks(c);
  std::vector<ElemSet> members;
  members.reserve(masks.size());
  for (std::uint64_t m : masks) members.push_back(ElemSet::from_bits(m));
  return Clutter::from_antichain(c.ground_size(), std::move(members));
}

ExtNat covering_number(const Clutter& c) {
  std::vector<std::uint64_t> masks = blocker_masks(c);
  if (masks.empty()) return ExtNat::infinity();
  int best = 65;
  for (std::uint64_t m : masks) best = std::min(best, std::popcount(m));
  return ExtNat(static_cast<std::uint64_t>(best));
}

std::vector<ElemSet> minimum_covers(const Clutter& c) {
  std::vector<std::uint64_t> masks = blocker_masks(c);
  if (masks.empty())
    throw Error(Errc::InfiniteCoveringNumber, "{emptyset} has no cover");
  int tau = 65;
  for (std::uint64_t m : masks) tau = std::min(tau, std::popcount(m));
  std::vector<ElemSet> out;
  for (std::uint64_t m : masks)
    if (std::popcount(m) == tau) out.push_back(ElemSet::from_bits(m));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

MinorResult minor(const Clutter& c, const MinorSpec& spec) {
  const ElemSet full = ElemSet::full(c.ground_size());
  if (!spec.deleted.subset_of(full) || !spec.contracted.subset_of(full))
    throw Error(Errc::ElementOutOfRange, "minor spec exceeds ground set");
  if (spec.deleted.intersects(spec.contracted))
    throw Error(Errc::ElementOutOfRange,
                "delete and contract sets must be disjoint");

  const ElemSet kept = full - (spec.deleted | spec.contracted);
  std::vector<int> old_label = kept.elements();
  // order-preserving relabeling old -> new
  int relabel[65] = {0};
  for (std::size_t i = 0; i < old_label.size(); ++i)
    relabel[old_label[i]] = static_cast<int>(i) + 1;

  std::vector<std::uint64_t> traces;
  for (ElemSet m : c.members()) {
    if (m.intersects(spec.deleted)) continue;
    traces.push_back((m - spec.contracted).bits());
  }
  traces = minimal_sets(std::move(traces));

  std::vector<ElemSet> members;
  members.reserve(traces.size());
  for (std::uint64_t t : traces) {
    ElemSet relabeled;
    std::uint64_t b = t;
    while (b) {
      relabeled = relabeled.with(relabel[std::countr_zero(b) + 1]);
      b &= b - 1;
    }
    members.push_back(relabeled);
  }
  return {Clutter::from_antichain(static_cast<int>(old_label.size()),
                                  std::move(members)),
          std::move(old_label)};
}

std::vector<MinorSpec> all_minor_specs(int n) {
  std::vector<MinorSpec> out;
  const std::uint64_t top = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t p = 0;; ++p) {
    by_size[static_cast<std::size_t>(std::popcount(p))].push_back(p);
    if (p == top) break;
  }
  for (const auto& group : by_size) {
    for (std::uint64_t p : group) {
      std::uint64_t i = 0;
      while (true) {
        out.push_back({ElemSet::from_bits(i), ElemSet::from_bits(p & ~i)});
        if (i == p) break;
        i = (i - p) & p;  // next submask in increasing order
      }
    }
  }
  return out;
}

}  // namespace clutterlab
