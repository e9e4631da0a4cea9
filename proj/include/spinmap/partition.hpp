#pragma once

// Periodic spin-1/2 Ising chain of M sites written as one particle of spin
// S = (2^M - 1)/2. Each configuration index j = s + S carries the energy
// F_{j,j}, so the partition function is a sum of 2^M exponentials of exact
// linear forms a*J + b*h.

#include "spinmap/bijection.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spinmap {

inline constexpr int kDefaultChainLimit = 20;
inline constexpr int kDefaultFMatrixLimit = 10;

/// Exponent a*J + b*h.
struct LinearForm {
  BigRational j;
  BigRational h;

  LinearForm& operator+=(const LinearForm& o) {
    j += o.j;
    h += o.h;
    return *this;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b) { return {a.j - b.j, a.h - b.h}; }
  LinearForm scaled(const BigRational& f) const { return {j * f, h * f}; }

  double evaluate(double J, double h_value) const { return j.to_double() * J + h.to_double() * h_value; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.h <=> b.h;
  }

  /// "a*J + b*h" with exact rationals, e.g. "-1/2*J + 0*h".
  std::string str() const;
};

/// Uniform periodic chain (sigma_{M+1} = sigma_1).
class ChainSpec {
 public:
  /// Requires 2 <= sites <= limit. Numeric evaluation works for any length;
  /// the exact per-configuration work is what the limit bounds.
  explicit ChainSpec(int sites, int limit = kDefaultChainLimit);

  int sites() const { return sites_; }
  /// 2^M; LimitExceeded beyond 63 sites.
  std::uint64_t states() const;
  HalfInt spin() const { return HalfInt::from_doubled(static_cast<std::int64_t>(states()) - 1); }

 private:
  int sites_;
};

/// Entry F_{j,j'} = sum_m [J P_{j,m} P_{j',m+1} + (h/2)(P_{j,m} + P_{j',m+1})],
/// with P_{j,m} the projection of j on the digit of weight 2^(M-m).
LinearForm f_entry(const ChainSpec& chain, std::uint64_t j, std::uint64_t jp);

/// Dense square matrix of LinearForm, row-major.
class FMatrix {
 public:
  explicit FMatrix(std::uint64_t dim) : dim_(dim), entries_(dim * dim) {}
  std::uint64_t dim() const { return dim_; }
  LinearForm& at(std::uint64_t j, std::uint64_t jp) { return entries_[j * dim_ + jp]; }
  const LinearForm& at(std::uint64_t j, std::uint64_t jp) const { return entries_[j * dim_ + jp]; }

 private:
  std::uint64_t dim_;
  std::vector<LinearForm> entries_;
};

/// The full 2^M x 2^M matrix; LimitExceeded above `max_sites`.
FMatrix f_matrix(const ChainSpec& chain, int max_sites = kDefaultFMatrixLimit);

/// -beta H_M(s) = sum_{j,j'} A_j(s) A_j'(s) F_{j,j'}. At an eigenvalue the
/// Lagrange bases are indicators, leaving F_{s+S, s+S}.
LinearForm single_particle_energy(HalfInt s, const ChainSpec& chain);

/// Canonical multiset of exponents: sorted by (a, b), multiplicities merged.
struct SymbolicZ {
  std::vector<std::pair<LinearForm, std::uint64_t>> terms;

  std::uint64_t total_multiplicity() const;
  double evaluate(double J, double h) const;
  /// One line "mult * exp(a*J + b*h)" per term, in canonical order.
  std::string str() const;
  static SymbolicZ parse(std::string_view text);
  /// Builds the canonical form from an unsorted list.
  static SymbolicZ from_terms(std::vector<std::pair<LinearForm, std::uint64_t>> raw);

  friend bool operator==(const SymbolicZ&, const SymbolicZ&) = default;
};

SymbolicZ partition_symbolic(const ChainSpec& chain);

/// Exponents of the single-particle factors, all exact:
///   a^+- = exp(J/4 +- h/2)                         largest/lowest momentum
///   c^+- = exp((M-4)/(4M) J +- (M-2)/(2M) h)      next largest/lowest
///   dE^+- = J +- h                                gap
///   b^+- = exp(dE^+- / 4)                          as printed
/// plus the off-diagonal product exponent actually needed by the closed
/// form, b_product = -J/2 (the transfer-matrix value); 4 b^+ b^- as printed
/// gives J/2 instead.
struct GapFactors {
  LinearForm a_plus, a_minus;
  LinearForm c_plus, c_minus;
  LinearForm delta_e_plus, delta_e_minus;
  LinearForm b_plus, b_minus;
  LinearForm b_product;
};

GapFactors gap_factors(const ChainSpec& chain);

/// lambda_+^M + lambda_-^M with lambda_+- = (a+ + a- +- sqrt((a+ - a-)^2 +
/// 4 q))/2, q standing for the off-diagonal product.
double partition_from_factors(double a_plus, double a_minus, double off_product, int sites);

/// ln Z_M from the two eigenvalues lambda+- = (a+ + a- +- sqrt((a+ - a-)^2
/// + 4 e^{-J/2}))/2 as M ln lambda+ + log1p((lambda-/lambda+)^M).
double log_partition_closed_form(const ChainSpec& chain, double J, double h);
/// exp(log_partition_closed_form); Overflow if not representable.
double partition_closed_form(const ChainSpec& chain, double J, double h);

/// trace(T^M) for T = [[e^{J/4+h/2}, e^{-J/4}], [e^{-J/4}, e^{J/4-h/2}]],
/// by repeated squaring with a running log scale.
double log_transfer_matrix_partition(const ChainSpec& chain, double J, double h);
double transfer_matrix_partition(const ChainSpec& chain, double J, double h);

/// ln lambda_max = ln(e^{J/4} cosh(h/2) + sqrt(e^{J/2} sinh^2(h/2) + e^{-J/2})).
double free_energy(double J, double h);

/// Second over first transfer-matrix eigenvalue, |lambda-| / lambda+.
double eigenvalue_ratio(double J, double h);

struct Bond {
  int m;
  int m_prime;
  BigRational coupling;  // multiplies the symbol J
};

/// General-lattice F: F_{j,j'} = sum_bonds [J_{m,m'} P_{j,m} P_{j',m'} +
/// (2h/gamma)(P_{j,m} + P_{j',m'})], with P_{j,m} the projection of j on the
/// digit of weight p^(M-m) and site indices m, m' in 1..M.
FMatrix f_matrix_general(const std::vector<Bond>& bonds, std::int64_t gamma, const ClusterSpec& spec,
                         std::uint64_t max_states = std::uint64_t{1} << kDefaultFMatrixLimit);

}  // namespace spinmap
