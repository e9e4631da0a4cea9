#include "spinmap/bijection.hpp"

#include "spinmap/error.hpp"

#include <sstream>

namespace spinmap {

namespace {

std::string spec_label(const ClusterSpec& spec) {
  return "p=" + std::to_string(spec.p()) + " M=" + std::to_string(spec.cluster_size());
}

bool is_digit_value(const ClusterSpec& spec, HalfInt v) {
  const std::int64_t top = spec.p() - 1;
  const std::int64_t d = v.doubled();
  return d >= -top && d <= top && (d - top) % 2 == 0;
}

}  // namespace

ClusterSpec::ClusterSpec(int p, int cluster_size, std::uint64_t limit)
    : p_(p), cluster_size_(cluster_size), states_(1) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "p must be >= 2, got " + std::to_string(p));
  if (cluster_size < 1) throw Error(ErrorKind::InvalidArgument, "M must be >= 1, got " + std::to_string(cluster_size));
  for (int i = 0; i < cluster_size; ++i) {
    if (states_ > limit / static_cast<std::uint64_t>(p)) {
      throw Error(ErrorKind::LimitExceeded,
                  "p^M for p=" + std::to_string(p) + " M=" + std::to_string(cluster_size) + " exceeds limit " +
                      std::to_string(limit));
    }
    states_ *= static_cast<std::uint64_t>(p);
  }
}

std::uint64_t ClusterSpec::weight(int digit) const {
  if (digit < 1 || digit > cluster_size_) {
    throw Error(ErrorKind::IndexOutOfRange, "digit " + std::to_string(digit) + " outside 1.." + std::to_string(cluster_size_));
  }
  std::uint64_t w = 1;
  for (int i = 1; i < digit; ++i) w *= static_cast<std::uint64_t>(p_);
  return w;
}

std::vector<HalfInt> ClusterSpec::eigenvalues() const {
  std::vector<HalfInt> out;
  out.reserve(states_);
  const std::int64_t top = spin().doubled();
  for (std::int64_t d = -top; d <= top; d += 2) out.push_back(HalfInt::from_doubled(d));
  return out;
}

std::vector<HalfInt> ClusterSpec::digit_values() const {
  std::vector<HalfInt> out;
  for (std::int64_t d = -(p_ - 1); d <= p_ - 1; d += 2) out.push_back(HalfInt::from_doubled(d));
  return out;
}

HalfInt compose_spin(const ClusterSpec& spec, std::span<const HalfInt> digits) {
  if (digits.size() != static_cast<std::size_t>(spec.cluster_size())) {
    throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(spec.cluster_size()) + " digits, got " +
                                              std::to_string(digits.size()));
  }
  std::int64_t doubled = 0;
  std::int64_t weight = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!is_digit_value(spec, digits[i])) {
      throw Error(ErrorKind::DigitOutOfRange,
                  "digit " + std::to_string(i + 1) + " = " + digits[i].str() + " is not a sigma value for " + spec_label(spec));
    }
    doubled += weight * digits[i].doubled();
    weight *= spec.p();
  }
  return HalfInt::from_doubled(doubled);
}

DigitVector decompose_spin(const ClusterSpec& spec, HalfInt s) {
  const std::int64_t top = spec.spin().doubled();
  if (s.doubled() < -top || s.doubled() > top) {
    throw Error(ErrorKind::SpinOutOfRange, s.str() + " outside [-" + spec.spin().str() + ", " + spec.spin().str() + "]");
  }
  if ((s.doubled() - top) % 2 != 0) {
    throw Error(ErrorKind::ParityMismatch, s.str() + " is not an eigenvalue of spin " + spec.spin().str());
  }
  auto j = static_cast<std::uint64_t>((s.doubled() + top) / 2);
  const auto p = static_cast<std::uint64_t>(spec.p());
  DigitVector digits;
  digits.reserve(spec.cluster_size());
  for (int i = 0; i < spec.cluster_size(); ++i) {
    digits.push_back(HalfInt::from_doubled(2 * static_cast<std::int64_t>(j % p) - (spec.p() - 1)));
    j /= p;
  }
  return digits;
}

std::vector<HalfInt> ProjectionTable::row(int digit) const {
  const auto begin = entries_.begin() + static_cast<std::ptrdiff_t>((digit - 1) * cols_);
  return {begin, begin + static_cast<std::ptrdiff_t>(cols_)};
}

std::string ProjectionTable::to_tsv(const ClusterSpec& spec) const {
  std::ostringstream os;
  os << "weight";
  for (std::uint64_t j = 0; j < cols_; ++j) os << "\tj=" << j;
  os << '\n';
  for (int i = 1; i <= rows_; ++i) {
    os << spec.weight(i);
    for (std::uint64_t j = 0; j < cols_; ++j) os << '\t' << at(i, j);
    os << '\n';
  }
  return os.str();
}

ProjectionTable projection_table(const ClusterSpec& spec) {
  const int M = spec.cluster_size();
  const auto p = static_cast<std::uint64_t>(spec.p());
  ProjectionTable table(M, spec.states());
  for (int m = 1; m <= M; ++m) {
    // j p^(m-M) = j / p^(M-m); j p^(m-1-M) = j / p^(M-m+1); floor for j >= 0.
    std::uint64_t inner = 1;
    for (int k = 0; k < M - m; ++k) inner *= p;
    const std::uint64_t outer = inner * p;
    const int digit = M + 1 - m;
    for (std::uint64_t j = 0; j < spec.states(); ++j) {
      const auto projected = static_cast<std::int64_t>(j / inner - p * (j / outer));
      table.at(digit, j) = HalfInt::from_doubled(2 * projected - (spec.p() - 1));
    }
  }
  return table;
}

namespace {

BigRational lagrange_weight(std::int64_t two_s, std::int64_t j) {
  BigRational w = BigRational(1) / (factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(two_s - j)));
  return (two_s + j) % 2 == 0 ? w : -w;
}

void check_spin(HalfInt spin) {
  if (spin.doubled() < 0) throw Error(ErrorKind::InvalidArgument, "spin must be non-negative, got " + spin.str());
}

}  // namespace

RationalPolynomial lagrange_basis(HalfInt spin, std::int64_t j) {
  check_spin(spin);
  const std::int64_t two_s = spin.doubled();
  if (j < 0 || j > two_s) {
    throw Error(ErrorKind::IndexOutOfRange, "j=" + std::to_string(j) + " outside 0.." + std::to_string(two_s));
  }
  const BigRational shift = spin.to_rational();
  RationalPolynomial product = RationalPolynomial::constant(lagrange_weight(two_s, j));
  for (std::int64_t i = 0; i <= two_s; ++i) {
    if (i == j) continue;
    // (s + S - i) = (s - (i - S))
    product = product * RationalPolynomial::linear_factor(BigRational(i) - shift);
  }
  return product;
}

std::vector<RationalPolynomial> general_inverse(HalfInt spin, const std::vector<std::vector<HalfInt>>& table) {
  check_spin(spin);
  const std::int64_t two_s = spin.doubled();
  const auto n = static_cast<std::size_t>(two_s + 1);
  for (std::size_t m = 0; m < table.size(); ++m) {
    if (table[m].size() != n) {
      throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(m) + " has " + std::to_string(table[m].size()) +
                                                " entries, expected 2S+1 = " + std::to_string(n));
    }
  }

  std::vector<BigRational> nodes;
  nodes.reserve(n);
  for (std::int64_t j = 0; j <= two_s; ++j) nodes.push_back(HalfInt::from_doubled(2 * j - two_s).to_rational());

  // A_j(s) = w_j * W(s) / (s - x_j) with W the product over all nodes.
  RationalPolynomial master = RationalPolynomial::constant(BigRational(1));
  for (const auto& x : nodes) master = master * RationalPolynomial::linear_factor(x);

  std::vector<RationalPolynomial> rows(table.size());
  for (std::size_t j = 0; j < n; ++j) {
    bool needed = false;
    for (const auto& r : table) needed = needed || r[j].doubled() != 0;
    if (!needed) continue;
    const RationalPolynomial basis =
        master.divided_by_root(nodes[j]).scaled(lagrange_weight(two_s, static_cast<std::int64_t>(j)));
    for (std::size_t m = 0; m < table.size(); ++m) {
      if (table[m][j].doubled() != 0) rows[m] += basis.scaled(table[m][j].to_rational());
    }
  }
  return rows;
}

std::vector<RationalPolynomial> inverse_polynomials(const ClusterSpec& spec, std::uint64_t limit) {
  if (spec.states() > limit) {
    throw Error(ErrorKind::LimitExceeded, "p^M = " + std::to_string(spec.states()) +
                                              " exceeds the inverse-polynomial limit " + std::to_string(limit));
  }
  const ProjectionTable table = projection_table(spec);
  std::vector<std::vector<HalfInt>> rows;
  for (int i = 1; i <= spec.cluster_size(); ++i) rows.push_back(table.row(i));
  return general_inverse(spec.spin(), rows);
}

std::string RoundTripReport::summary(const ClusterSpec& spec) const {
  std::ostringstream os;
  os << spec_label(spec) << " S=" << spec.spin() << ": " << (passed ? "PASS" : "FAIL") << ", " << eigenvalues_checked
     << " eigenvalues checked\n";
  os << "  compose(decompose(s)) = s: " << (compose_identity ? "ok" : "FAIL") << '\n';
  os << "  sigma_i(s) = digit_i(s): " << (polynomial_values ? "ok" : "FAIL") << '\n';
  os << "  sum_i p^(i-1) sigma_i(s) = s: " << (polynomial_identity ? "ok" : "FAIL") << '\n';
  os << "  odd polynomials: " << (odd ? "ok" : "FAIL") << '\n';
  os << "  values within sigma range: " << (range_bounded ? "ok" : "FAIL") << '\n';
  if (counterexample) os << "  first counterexample: " << *counterexample << '\n';
  return os.str();
}

RoundTripReport verify_roundtrip(const ClusterSpec& spec, std::uint64_t limit) {
  RoundTripReport report;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    report.passed = false;
    if (!report.counterexample) report.counterexample = what;
  };

  const auto polys = inverse_polynomials(spec, limit);

  RationalPolynomial identity;
  for (int i = 1; i <= spec.cluster_size(); ++i) {
    identity += polys[i - 1].scaled(BigRational(spec.weight(i)));
    if (!polys[i - 1].is_odd()) fail(report.odd, "sigma_" + std::to_string(i) + " has an even-power term");
  }
  if (identity != RationalPolynomial::monomial(1)) {
    fail(report.polynomial_identity, "sum_i p^(i-1) sigma_i(s) = " + identity.str());
  }

  for (HalfInt s : spec.eigenvalues()) {
    const DigitVector digits = decompose_spin(spec, s);
    if (compose_spin(spec, digits) != s) fail(report.compose_identity, "compose(decompose(" + s.str() + ")) != s");
    const BigRational x = s.to_rational();
    for (int i = 1; i <= spec.cluster_size(); ++i) {
      const BigRational value = polys[i - 1].evaluate(x);
      const BigRational twice = value * BigRational(2);
      const bool on_grid = twice.is_integer() && twice.abs() <= BigRational(spec.p() - 1) &&
                           is_digit_value(spec, HalfInt::from_doubled(std::stoll(twice.str())));
      if (!on_grid) fail(report.range_bounded, "sigma_" + std::to_string(i) + "(" + s.str() + ") = " + value.str());
      if (value != digits[i - 1].to_rational()) {
        fail(report.polynomial_values, "sigma_" + std::to_string(i) + "(" + s.str() + ") = " + value.str() +
                                           ", digit is " + digits[i - 1].str());
      }
    }
    ++report.eigenvalues_checked;
  }
  return report;
}

}  // namespace spinmap
