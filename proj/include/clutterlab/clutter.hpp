#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "clutterlab/errors.hpp"
#include "clutterlab/ext_nat.hpp"

namespace clutterlab {

/// A subset of the ground set {1, ..., n}, n <= 64, as a bit mask.
/// Element i corresponds to bit i-1.
class ElemSet {
 public:
  constexpr ElemSet() = default;

  static constexpr ElemSet from_bits(std::uint64_t bits) {
    return ElemSet(bits);
  }
  static constexpr ElemSet single(int e) {
    return ElemSet(std::uint64_t{1} << (e - 1));
  }
  /// {1, ..., n}.
  static constexpr ElemSet full(int n) {
    return ElemSet(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
  }
  static ElemSet of(std::initializer_list<int> elems) {
    ElemSet s;
    for (int e : elems) s.bits_ |= std::uint64_t{1} << (e - 1);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const {
    return (bits_ >> (e - 1)) & std::uint64_t{1};
  }
  constexpr bool subset_of(ElemSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool intersects(ElemSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr ElemSet with(int e) const {
    return ElemSet(bits_ | (std::uint64_t{1} << (e - 1)));
  }
  constexpr ElemSet without(int e) const {
    return ElemSet(bits_ & ~(std::uint64_t{1} << (e - 1)));
  }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ & b.bits_);
  }
  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ | b.bits_);
  }
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ & ~b.bits_);
  }

  /// Smallest element, or 0 when empty.
  constexpr int smallest() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }

  std::vector<int> elements() const;

  friend constexpr bool operator==(ElemSet a, ElemSet b) = default;

  /// "{1,3,5}"; "{}" for the empty set.
  std::string to_string() const;

 private:
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Canonical member order: lexicographic on the ascending element lists
/// ({1,2} < {1,3} < {2,3}; {1,3} < {2,4}).
bool lex_less(ElemSet a, ElemSet b);

/// A deletion/contraction pair: delete `deleted`, contract `contracted`.
/// The two sets must be disjoint and within the ground-set bounds.
struct MinorSpec {
  ElemSet deleted;
  ElemSet contracted;

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

/// An antichain of subsets of {1, ..., ground_size}. Members are pairwise
/// distinct, none contains another, and the list is kept in canonical
/// lexicographic order, so equality is direct structural comparison.
class Clutter {
 public:
  /// Canonicalizes and checks the invariants. Throws ElementOutOfRange,
  /// DuplicateMember or NotAntichain. Does not minimalize: a non-antichain
  /// input is an error, not a request for minimalization.
  static Clutter validate(int ground_size, std::vector<ElemSet> raw_members);

  /// For internal producers whose output is an antichain by construction
  /// (blocker, minor). Sorts canonically; checks invariants in debug builds.
  static Clutter from_antichain(int ground_size, std::vector<ElemSet> members);

  Clutter() = default;

  int ground_size() const { return n_; }
  std::span<const ElemSet> members() const { return members_; }
  std::size_t member_count() const { return members_.size(); }

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  Clutter(int n, std::vector<ElemSet> sorted_members)
      : n_(n), members_(std::move(sorted_members)) {}

  int n_ = 0;
  std::vector<ElemSet> members_;
};

/// True iff b meets every member (vacuously true for the memberless clutter).
bool is_cover(const Clutter& c, ElemSet b);

/// tau(c): 0 for the memberless clutter, infinity for {emptyset}.
ExtNat covering_number(const Clutter& c);

/// All covers of cardinality exactly tau(c), canonically ordered.
/// Throws InfiniteCoveringNumber when tau is infinite.
std::vector<ElemSet> minimum_covers(const Clutter& c);

/// The clutter of inclusion-wise minimal covers over the same ground set.
/// b(memberless) = {emptyset}; b({emptyset}) = memberless.
Clutter blocker(const Clutter& c);

struct MinorResult {
  Clutter clutter;
  /// old_label[i-1] is the original element behind new element i.
  std::vector<int> old_label;
};

/// C \ I / J: drop members meeting the deleted set, remove the contracted
/// set from the rest, keep the inclusion-wise minimal sets, and relabel the
/// surviving elements to a contiguous range preserving order.
MinorResult minor(const Clutter& c, const MinorSpec& spec);

/// All 3^n disjoint (I, J) pairs in increasing |I|+|J|, then deterministic
/// mask order. Used by cleanness testing and the duality property checks.
std::vector<MinorSpec> all_minor_specs(int n);

}  // namespace clutterlab
