#pragma once

// Known misprints in the published formulas this library reproduces. Each
// entry carries two live checks: one that evaluates the formula as printed
// (expected to fail) and one that evaluates the corrected reading (expected
// to pass).

#include "spinmap/bijection.hpp"
#include "spinmap/polynomial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinmap {

struct Erratum {
  std::string key;
  std::string title;
  std::string printed;
  std::string correction;
  std::function<bool()> literal_holds;
  std::function<bool()> corrected_holds;
};

/// The five documented discrepancies, in a fixed order.
const std::vector<Erratum>& errata();

/// Text report: one block per entry with the live check outcomes.
std::string errata_report();

/// Odd series in s written as "c1*s^k1 + c2*s^k2 - c3 ..." with single
/// spaces around each sign. Any other operator token (e.g. "++") is a Parse
/// error.
RationalPolynomial parse_printed_series(std::string_view text);

/// The published sigma_1..sigma_M for (p, M) in {(2,2), (2,3), (3,2), (3,3)},
/// in printed order. For (3,3) the printed brackets contain stray "++"
/// tokens; `repaired` reads them as "+", otherwise Parse is thrown.
std::vector<RationalPolynomial> printed_inverse_polynomials(int p, int M, bool repaired = true);

/// Derived inverse polynomials relabelled to printed order: entry m-1 is the
/// digit of weight p^(M-m).
std::vector<RationalPolynomial> derived_in_printed_order(const ClusterSpec& spec);

/// +1 or -1 if printed[k] == sign * derived[k] for every k with one common
/// sign, nullopt otherwise.
std::optional<int> global_sign(const std::vector<RationalPolynomial>& printed,
                               const std::vector<RationalPolynomial>& derived);

/// ln(e^{J/4} cosh(h/2) + sqrt(e^{J/2} sinh(h/2) + e^{-J/2})) exactly as
/// printed; NaN where the radicand goes negative.
double free_energy_as_printed(double J, double h);

}  // namespace spinmap
