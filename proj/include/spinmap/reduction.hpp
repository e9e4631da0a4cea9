#pragma once

// Spin-S <-> M-layer spin-sigma Hamiltonian reduction.
//
// The spin-S side is the up-down-symmetric bond Hamiltonian of
// SpinCouplings. Substituting s = sum_i p^(i-1) sigma_i on both sites of a
// bond turns every s^k into a polynomial in the cluster variables, so the
// bond energy becomes a linear combination of monomials
//   prod_a sigma_{a,i}^{e_a} prod_b sigma_{b,j}^{f_b},   e_a, f_b < p,
// whose coefficients are linear forms in the couplings. For p = 2, M = 3
// those coefficients are the 19 constants of LayerCouplings plus an additive
// constant.

#include "spinmap/bijection.hpp"
#include "spinmap/couplings.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spinmap {

/// Per-bond spin-S energy; s_i, s_j must be eigenvalues of S = two_s/2.
BigRational bond_energy_spin(HalfInt s_i, HalfInt s_j, const SpinCouplings& c);

/// Per-bond three-layer energy for sigma = +-1/2 digit vectors of length 3.
BigRational bond_energy_layers(std::span<const HalfInt> d_i, std::span<const HalfInt> d_j, const LayerCouplings& k);

/// The 19 reduced constants as linear forms in the spin-7/2 couplings, as
/// tabulated (hard-coded, not derived).
const std::array<CouplingForm, LayerCouplings::kCount>& tabulated_formulas();

/// Evaluates tabulated_formulas() at the given spin-7/2 couplings.
LayerCouplings reduce_couplings_7_2(const SpinCouplings& c);

/// Monomial exponents of one bond: site_i[a] and site_j[a] are the powers of
/// sigma_{a+1} on each site, encoded as mixed-radix indices
/// sum_a e_a p^a.
struct BondPattern {
  std::uint64_t site_i = 0;
  std::uint64_t site_j = 0;

  friend auto operator<=>(const BondPattern&, const BondPattern&) = default;
};

/// Result of expanding the generic spin-S bond energy over the cluster
/// monomial basis. terms holds every pattern with a nonzero coefficient; the
/// (0, 0) pattern is the additive constant.
struct DerivedReduction {
  int p = 2;
  int cluster_size = 1;
  std::vector<Symbol> symbols;
  std::map<BondPattern, CouplingForm> terms;

  CouplingForm coefficient(const BondPattern& pattern) const;
  CouplingForm constant() const { return coefficient({0, 0}); }
  /// Exponent of sigma_digit (1-based) in an encoded site pattern.
  int exponent(std::uint64_t site_pattern, int digit) const;
  /// e.g. "s1i*s2j^2"; "1" for the constant pattern.
  std::string pattern_name(const BondPattern& pattern) const;
};

/// Expands the bond energy for the given cluster. Powers sigma^k with k >= p
/// are reduced through the monic polynomial whose roots are the sigma levels.
DerivedReduction derive_reduction(const ClusterSpec& spec, std::uint64_t limit = kDefaultDeriveLimit);

struct LayerFormulas {
  std::array<CouplingForm, LayerCouplings::kCount> constants;
  CouplingForm offset;
};

/// Collects the 19 layer constants from a (p=2, M=3) derivation. Throws
/// Inconsistent if a pattern outside the three-layer family is nonzero or two
/// patterns sharing a constant disagree.
LayerFormulas layer_formulas(const DerivedReduction& derived);

struct EquivalenceResult {
  bool equivalent = false;
  /// bond_energy_spin - bond_energy_layers, common to every configuration.
  BigRational offset;
  std::uint64_t configurations_checked = 0;
  /// First (s_i, s_j) whose difference departs from the first one.
  std::optional<std::pair<HalfInt, HalfInt>> violation;
};

/// Exhaustive comparison over all (s_i, s_j) in {-7/2..7/2}^2 against the
/// decomposed three-layer energies.
EquivalenceResult equivalence_check(const SpinCouplings& c, const LayerCouplings& k);

}  // namespace spinmap
