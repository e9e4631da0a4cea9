#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace spinmap {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Division by zero throws instead of producing a value.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral T>
  BigRational(T n) : value_(from_integer(n)) {}  // NOLINT: implicit on purpose

  BigRational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "n" or "n/d" (signed decimal numerator, unsigned decimal
  /// denominator). Whitespace, '+' signs and zero denominators are rejected.
  static BigRational parse(std::string_view text);

  static BigRational from_mpq(const mpq_class& q);

  const mpq_class& raw() const noexcept { return value_; }

  std::string str() const;
  double to_double() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  BigRational abs() const;

  /// Numerator and denominator as decimal strings.
  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }

  /// Raises to a non-negative integer power.
  BigRational pow(unsigned exponent) const;

  BigRational& operator+=(const BigRational& other);
  BigRational& operator-=(const BigRational& other);
  BigRational& operator*=(const BigRational& other);
  BigRational& operator/=(const BigRational& other);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  template <std::integral T>
  static mpq_class from_integer(T n) {
    if constexpr (std::is_signed_v<T>) {
      if constexpr (sizeof(T) <= sizeof(long)) {
        return mpq_class(static_cast<long>(n));
      } else {
        return mpq_class(mpz_class(std::to_string(n)));
      }
    } else {
      if constexpr (sizeof(T) <= sizeof(unsigned long)) {
        return mpq_class(static_cast<unsigned long>(n));
      } else {
        return mpq_class(mpz_class(std::to_string(n)));
      }
    }
  }

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigRational factorial(unsigned n);

}  // namespace spinmap
