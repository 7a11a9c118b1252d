#include "clutterlab/obstructions.hpp"

#include <algorithm>

namespace clutterlab {

const char* obstruction_kind_name(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::Delta: return "delta";
    case ObstructionKind::BlockerOfExtendedOddHole:
      return "blocker-of-extended-odd-hole";
  }
  return "unknown";
}

std::optional<int> recognize_delta(const Clutter& c) {
  const int n = c.ground_size();
  if (n < 3 || static_cast<int>(c.member_count()) != n) return std::nullopt;
  std::vector<std::uint64_t> bits;
  bits.reserve(c.member_count());
  for (ElemSet m : c.members()) bits.push_back(m.bits());
  std::sort(bits.begin(), bits.end());
  auto present = [&](ElemSet s) {
    return std::binary_search(bits.begin(), bits.end(), s.bits());
  };
  const ElemSet full = ElemSet::full(n);
  for (int hub = 1; hub <= n; ++hub) {
    if (!present(full.without(hub))) continue;
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v)
      if (v != hub && !present(ElemSet::single(hub).with(v))) ok = false;
    if (ok) return n;
  }
  return std::nullopt;
}

std::optional<int> recognize_blocker_of_extended_odd_hole(const Clutter& c) {
  const int n = c.ground_size();
  if (n < 5 || n % 2 == 0) return std::nullopt;
  const Clutter b = blocker(c);
  if (b.member_count() == 0) return std::nullopt;
  int min_size = 65;
  for (ElemSet m : b.members()) min_size = std::min(min_size, m.size());
  if (min_size != 2) return std::nullopt;
  // The size-2 members must form a single spanning cycle: every vertex of
  // degree exactly 2, connected, odd length.
  std::vector<ElemSet> adj(static_cast<std::size_t>(n) + 1);
  int edge_count = 0;
  for (ElemSet m : b.members()) {
    if (m.size() != 2) continue;
    auto uv = m.elements();
    adj[static_cast<std::size_t>(uv[0])] =
        adj[static_cast<std::size_t>(uv[0])].with(uv[1]);
    adj[static_cast<std::size_t>(uv[1])] =
        adj[static_cast<std::size_t>(uv[1])].with(uv[0]);
    ++edge_count;
  }
  if (edge_count != n) return std::nullopt;
  for (int v = 1; v <= n; ++v)
    if (adj[static_cast<std::size_t>(v)].size() != 2) return std::nullopt;
  // walk the cycle from vertex 1
  int prev = 0, cur = 1, visited = 0;
  do {
    auto nbrs = adj[static_cast<std::size_t>(cur)].elements();
    int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
    ++visited;
  } while (cur != 1);
  if (visited != n) return std::nullopt;  // degree-2 graph with >1 cycle
  return n;
}

CleanResult is_clean(const Clutter& c, int max_n) {
  const int n = c.ground_size();
  if (n > max_n)
    throw Error(Errc::BudgetExceeded,
                "ground set " + std::to_string(n) +
                    " exceeds the minor enumeration bound " +
                    std::to_string(max_n));
  for (const MinorSpec& spec : all_minor_specs(n)) {
    const int rest = n - spec.deleted.size() - spec.contracted.size();
    if (rest < 3) continue;  // both obstructions need at least 3 elements
    const Clutter m = minor(c, spec).clutter;
    if (auto dim = recognize_delta(m))
      return {false, ObstructionWitness{ObstructionKind::Delta, spec, *dim}};
    if (rest >= 5 && rest % 2 == 1)
      if (auto dim = recognize_blocker_of_extended_odd_hole(m))
        return {false,
                ObstructionWitness{ObstructionKind::BlockerOfExtendedOddHole,
                                   spec, *dim}};
  }
  return {true, std::nullopt};
}

}  // namespace clutterlab
