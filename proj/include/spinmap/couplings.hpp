#pragma once

#include "spinmap/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace spinmap {

/// One coupling constant of the up-down-symmetric spin-S bond Hamiltonian:
/// either J_{alpha,beta} (alpha <= beta, alpha + beta even) or a field
/// h_{power} (power even). Field symbols always enter multiplied by gamma.
struct Symbol {
  enum class Kind { Coupling, Field };

  Kind kind = Kind::Coupling;
  int alpha = 0;  // J: first power; field: the even power 2a
  int beta = 0;   // J: second power; field: unused

  static Symbol coupling(int a, int b) { return {Kind::Coupling, a < b ? a : b, a < b ? b : a}; }
  static Symbol field(int power) { return {Kind::Field, power, 0}; }

  /// "J13", "h6" for single-digit powers; "J10,12" style otherwise.
  std::string name() const;
  /// name() with "gamma*" prepended for fields, as the symbol appears in a
  /// reduced coupling.
  std::string term_name() const;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// The symbols of the spin-S family: J_{a,b} for 1 <= a <= b <= 2S with a+b
/// even, then h_{2a} for 2 <= 2a <= 2S, in that order.
std::vector<Symbol> coupling_symbols(int two_s);

/// Couplings of the up-down-symmetric spin-S bond Hamiltonian
///   sum_{a<=b, a+b even} (J_ab/2)(s_i^a s_j^b + s_i^b s_j^a)
///     + sum_a (gamma h_2a / 2)(s_i^2a + s_j^2a).
/// For S = 7/2 (two_s = 7) this is the 19-constant family.
class SpinCouplings {
 public:
  explicit SpinCouplings(int two_s = 7, std::int64_t gamma = 1);

  int two_s() const { return two_s_; }
  std::int64_t gamma() const { return gamma_; }
  void set_gamma(std::int64_t gamma);

  bool has(const Symbol& sym) const { return values_.contains(sym); }
  const BigRational& get(const Symbol& sym) const;
  void set(const Symbol& sym, BigRational value);

  const BigRational& J(int a, int b) const { return get(Symbol::coupling(a, b)); }
  const BigRational& h(int power) const { return get(Symbol::field(power)); }

  const std::map<Symbol, BigRational>& values() const { return values_; }

  /// Value of a symbol as it enters a reduced coupling: J, or gamma * h.
  BigRational term_value(const Symbol& sym) const;

  /// Line-oriented "key = rational" text: gamma first, then every J, then
  /// every h. Parses back to an equal object.
  std::string to_text() const;
  /// Keys J<a><b> (either index order), h<2a>, gamma. Unknown or repeated
  /// keys are errors; absent couplings are zero; gamma is required.
  static SpinCouplings parse(std::string_view text, int two_s = 7);

  friend bool operator==(const SpinCouplings&, const SpinCouplings&) = default;

 private:
  int two_s_;
  std::int64_t gamma_;
  std::map<Symbol, BigRational> values_;
};

/// Exact linear combination of coupling symbols; a field symbol stands for
/// gamma * h.
class CouplingForm {
 public:
  CouplingForm() = default;

  void add(const Symbol& sym, const BigRational& coefficient);
  BigRational coefficient(const Symbol& sym) const;
  const std::map<Symbol, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigRational evaluate(const SpinCouplings& couplings) const;

  CouplingForm& operator+=(const CouplingForm& other);
  CouplingForm& operator-=(const CouplingForm& other);
  friend CouplingForm operator-(CouplingForm a, const CouplingForm& b) { return a -= b; }
  CouplingForm scaled(const BigRational& factor) const;

  friend bool operator==(const CouplingForm&, const CouplingForm&) = default;

  /// "J11 + 61/4*J13 + 2*gamma*h2"; "0" when empty.
  std::string str() const;

 private:
  std::map<Symbol, BigRational> terms_;
};

/// The 19 constants of the three-layer sigma = 1/2 bond Hamiltonian. Every
/// constant is the coefficient of its spin monomial in the per-bond energy:
///
///   sum_a K_aa s_ai s_aj
///   + sum_{a<b} K_ab (s_ai s_bj + s_bi s_aj)              cross terms
///   + sum_{a<b} K_ba (s_ai s_bi + s_aj s_bj)              on-site glue
///   + sum_{a; b<c} R_abc s_ai s_aj (s_bi s_cj + s_bj s_ci)
///   + sum_{a; b<c} R_acb s_ai s_aj (s_bi s_ci + s_bj s_cj)
///   + sum_{a<b} R_ab s_ai s_aj s_bi s_bj
///   + R s_1i s_2i s_3i s_1j s_2j s_3j
///
/// (b, c range over the two layers other than a). Layer a is the digit of
/// weight 2^(a-1).
class LayerCouplings {
 public:
  static constexpr std::size_t kCount = 19;
  /// K11 K12 K13 K22 K23 K33 K21 K31 K32 R12 R13 R23 R123 R213 R312 R132 R231 R321 R
  static const std::array<std::string_view, kCount>& names();

  LayerCouplings() = default;
  explicit LayerCouplings(std::array<BigRational, kCount> values) : values_(std::move(values)) {}

  /// K_{a,b} for a, b in 1..3 (a < b cross, a > b glue).
  const BigRational& K(int a, int b) const;
  /// R_{a,b} for a < b.
  const BigRational& R(int a, int b) const;
  /// R_{a,b,c} for the six ordered patterns with a, b, c distinct.
  const BigRational& R(int a, int b, int c) const;
  const BigRational& R() const { return values_[18]; }

  const BigRational& operator[](std::size_t index) const { return values_[index]; }
  BigRational& operator[](std::size_t index) { return values_[index]; }
  /// Index into names() for a name such as "K21"; throws for unknown names.
  static std::size_t index_of(std::string_view name);
  BigRational& at(std::string_view name) { return values_[index_of(name)]; }
  const BigRational& at(std::string_view name) const { return values_[index_of(name)]; }

  const std::array<BigRational, kCount>& values() const { return values_; }

  friend bool operator==(const LayerCouplings&, const LayerCouplings&) = default;

 private:
  std::array<BigRational, kCount> values_{};
};

}  // namespace spinmap
