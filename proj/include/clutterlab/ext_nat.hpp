#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace clutterlab {

/// A natural number extended with +infinity. Infinity compares strictly
/// greater than every finite value. Used for tau, mu, mu1..mu3 and lambda.
class ExtNat {
 public:
  constexpr ExtNat() : v_(0) {}
  constexpr explicit ExtNat(std::uint64_t v) : v_(v) {}

  static constexpr ExtNat infinity() { return ExtNat(kInf, Tag{}); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }

  /// Finite value; must not be called on infinity.
  constexpr std::uint64_t value() const { return v_; }

  friend constexpr auto operator<=>(ExtNat a, ExtNat b) = default;

  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(v_);
  }

 private:
  struct Tag {};
  constexpr ExtNat(std::uint64_t v, Tag) : v_(v) {}
  static constexpr std::uint64_t kInf = ~std::uint64_t{0};
  std::uint64_t v_;
};

}  // namespace clutterlab
