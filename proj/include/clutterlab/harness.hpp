#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clutterlab/clutter.hpp"
#include "clutterlab/structure.hpp"

namespace clutterlab {

enum class GenKind { Exhaustive, Random, Family };
enum class FamilyKind { Delta, OddHole, Cuboid };

struct GeneratorConfig {
  GenKind kind = GenKind::Exhaustive;
  int n = 4;
  std::uint64_t count = 1;       // Random: number of instances
  std::uint64_t seed = 0;        // Random: PRNG seed (std::mt19937_64)
  std::optional<FamilyKind> family;
  std::optional<SetSystem> cuboid_points;
  int min_member_size = 1;       // Random: member size range
  int max_member_size = 0;       // 0 means "up to n"
  int exhaustive_bound = 5;      // n = 6 only behind an explicit opt-in
  std::size_t violation_cap = 100;

  std::string echo() const;
};

/// Streams every clutter over ground set [n] exactly once (all antichains of
/// the Boolean lattice, the two trivial ones first), in a deterministic
/// order. Throws BoundExceeded when n > max_n.
void for_each_clutter(int n, const std::function<void(const Clutter&)>& fn,
                      int max_n = 6);

std::vector<Clutter> enumerate_clutters(int n, int max_n = 6);

/// Deterministic stream of random antichains driven by std::mt19937_64, so a
/// (seed, config) pair reproduces the same instances. Member count is drawn
/// uniformly from [1, max(2, n)], member sizes uniformly from the size range;
/// non-antichain samples are rejected and redrawn.
class RandomClutterStream {
 public:
  explicit RandomClutterStream(const GeneratorConfig& config);

  Clutter next();

 private:
  int n_;
  int min_size_;
  int max_size_;
  std::mt19937_64 engine_;
};

/// One sample from a fresh stream; same config, same clutter.
Clutter random_clutter(const GeneratorConfig& config);

/// Delta_n: {1,2},{1,3},...,{1,n},{2,...,n}. Throws BadDimension for n < 3.
Clutter make_delta(int n);

/// The minimal extended odd hole: exactly the n cycle edges. Throws
/// BadDimension unless n is odd and >= 5.
Clutter make_odd_hole(int n);

/// Clutter over 2d elements with one member per point p: element 2i-1 when
/// p_i = 1, element 2i when p_i = 0.
Clutter make_cuboid(const SetSystem& s);

Clutter make_family(const GeneratorConfig& config);

struct ViolationDetail {
  std::string check;
  std::string instance;  // clutter text, replayable via run_check
  std::string detail;
};

struct VerificationReport {
  std::uint64_t instances_total = 0;
  std::uint64_t clean_tangled_count = 0;
  std::uint64_t violations = 0;
  std::vector<ViolationDetail> violation_details;  // capped
  std::uint64_t runtime_ms = 0;
  std::string config_echo;

  bool passed() const { return violations == 0; }
};

/// Named property checks, one per theorem/lemma consequence. Returns the
/// failure description, or nullopt when the instance passes (or the check
/// does not apply to it). Used by the campaigns and by violation replay.
std::optional<std::string> run_check(const std::string& name,
                                     const Clutter& c);

std::vector<std::string> theorem_check_names();
std::vector<std::string> lemma_check_names();

/// Runs the min-min theorem checks (graph bipartite, setcore geometry,
/// five-way parameter equality) on every generated clean tangled instance.
VerificationReport verify_theorem(const GeneratorConfig& config);

/// Runs the whole lemma/property suite: blocker involution and duality on
/// all instances, everything else on the clean tangled ones.
VerificationReport verify_lemmas(const GeneratorConfig& config);

}  // namespace clutterlab
