#pragma once

#include "spinmap/rational.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace spinmap {

/// Exact half-integer stored as twice its value, so spin eigenvalues such as
/// -7/2 or 13 never go through rational normalisation.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_doubled(std::int64_t doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }
  static constexpr HalfInt integer(std::int64_t n) { return from_doubled(2 * n); }

  /// Accepts "n" or "n/2".
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  BigRational to_rational() const { return BigRational(doubled_, 2); }
  double to_double() const { return static_cast<double>(doubled_) / 2.0; }
  std::string str() const;

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ + b.doubled_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ - b.doubled_); }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  std::int64_t doubled_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace spinmap
