#pragma once

// Base-p digit bijection between one spin S = (p^M - 1)/2 and a cluster of M
// spins sigma = (p - 1)/2, plus the Lagrange-interpolated inverse maps.
//
// Digit index convention: digit i (1-based) carries weight p^(i-1), so
//   s = sigma_1 + p sigma_2 + ... + p^(M-1) sigma_M.
// Everything printed or returned is labelled by weight. The most-significant-
// first index m used for the projection formula maps to i = M + 1 - m.

#include "spinmap/half_int.hpp"
#include "spinmap/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spinmap {

inline constexpr std::uint64_t kDefaultTableLimit = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultPolynomialLimit = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kDefaultDeriveLimit = 32;

class ClusterSpec {
 public:
  /// Throws InvalidArgument for p < 2 or M < 1 and LimitExceeded when p^M > limit.
  ClusterSpec(int p, int cluster_size, std::uint64_t limit = kDefaultTableLimit);

  int p() const { return p_; }
  int cluster_size() const { return cluster_size_; }
  /// p^M = 2S + 1.
  std::uint64_t states() const { return states_; }
  HalfInt spin() const { return HalfInt::from_doubled(static_cast<std::int64_t>(states_) - 1); }
  HalfInt sigma() const { return HalfInt::from_doubled(p_ - 1); }
  /// p^(i-1) for digit i in 1..M.
  std::uint64_t weight(int digit) const;

  /// The eigenvalues -S, -S+1, ..., S in ascending order.
  std::vector<HalfInt> eigenvalues() const;
  /// The sigma levels -(p-1)/2, ..., (p-1)/2 in ascending order.
  std::vector<HalfInt> digit_values() const;

  friend bool operator==(const ClusterSpec&, const ClusterSpec&) = default;

 private:
  int p_;
  int cluster_size_;
  std::uint64_t states_;
};

/// sigma values of one cluster, least significant digit first.
using DigitVector = std::vector<HalfInt>;

HalfInt compose_spin(const ClusterSpec& spec, std::span<const HalfInt> digits);
DigitVector decompose_spin(const ClusterSpec& spec, HalfInt s);

/// M x p^M table of digit values; at(i, j) is digit i (weight p^(i-1)) of the
/// configuration with index j = s + S.
class ProjectionTable {
 public:
  ProjectionTable(int rows, std::uint64_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  int rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  HalfInt at(int digit, std::uint64_t j) const { return entries_[(digit - 1) * cols_ + j]; }
  HalfInt& at(int digit, std::uint64_t j) { return entries_[(digit - 1) * cols_ + j]; }
  std::vector<HalfInt> row(int digit) const;

  /// Header "weight" followed by j=0 .. j=p^M-1, then one row per weight
  /// in ascending order.
  std::string to_tsv(const ClusterSpec& spec) const;

 private:
  int rows_;
  std::uint64_t cols_;
  std::vector<HalfInt> entries_;
};

/// Evaluates P_{j,m} = floor(j p^(m-M)) - p floor(j p^(m-1-M)) - (p-1)/2 and
/// stores it under digit i = M + 1 - m.
ProjectionTable projection_table(const ClusterSpec& spec);

/// A_j(s) = (-1)^(2S+j) / (j! (2S-j)!) * prod_{i != j} (s + S - i), expanded.
RationalPolynomial lagrange_basis(HalfInt spin, std::int64_t j);

/// sigma_i(s) for each digit i = 1..M, in weight order.
std::vector<RationalPolynomial> inverse_polynomials(const ClusterSpec& spec,
                                                    std::uint64_t limit = kDefaultPolynomialLimit);

/// Row m of the result interpolates table[m][j] at the eigenvalues j - S.
std::vector<RationalPolynomial> general_inverse(HalfInt spin, const std::vector<std::vector<HalfInt>>& table);

struct RoundTripReport {
  bool passed = true;
  std::uint64_t eigenvalues_checked = 0;
  bool compose_identity = true;
  bool polynomial_values = true;
  bool polynomial_identity = true;
  bool odd = true;
  bool range_bounded = true;
  std::optional<std::string> counterexample;

  std::string summary(const ClusterSpec& spec) const;
};

/// Exhaustive check of compose(decompose(s)) = s and sigma_i(s) = digit_i(s)
/// over every eigenvalue, plus sum_i p^(i-1) sigma_i(s) = s coefficient-wise.
RoundTripReport verify_roundtrip(const ClusterSpec& spec, std::uint64_t limit = kDefaultPolynomialLimit);

}  // namespace spinmap
