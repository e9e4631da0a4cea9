#pragma once

#include "spinmap/half_int.hpp"
#include "spinmap/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace spinmap {

/// Dense univariate polynomial over BigRational; coefficient k multiplies
/// s^k. The zero polynomial has no coefficients, otherwise the leading
/// coefficient is nonzero.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coefficients);

  static RationalPolynomial constant(const BigRational& c);
  static RationalPolynomial monomial(std::size_t degree, const BigRational& c = BigRational(1));
  /// The monic linear factor (s - root).
  static RationalPolynomial linear_factor(const BigRational& root);

  /// Reads the serialised form "[c0, c1, ...]".
  static RationalPolynomial parse(std::string_view text);

  const std::vector<BigRational>& coefficients() const { return coefficients_; }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  /// Coefficient of s^k; zero beyond the degree.
  BigRational coefficient(std::size_t k) const;

  BigRational evaluate(const BigRational& x) const;
  BigRational evaluate(HalfInt x) const { return evaluate(x.to_rational()); }

  /// True when every even-power coefficient vanishes.
  bool is_odd() const;

  RationalPolynomial scaled(const BigRational& factor) const;
  /// Exact quotient by (s - root); throws Inconsistent if root is not a zero.
  RationalPolynomial divided_by_root(const BigRational& root) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  RationalPolynomial operator-() const { return scaled(BigRational(-1)); }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// "[0, -7/6, 0, 2/3]", constant term first.
  std::string str() const;

 private:
  void normalize();

  std::vector<BigRational> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

}  // namespace spinmap
