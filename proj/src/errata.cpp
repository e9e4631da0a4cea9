#include "spinmap/errata.hpp"

#include "spinmap/error.hpp"
#include "spinmap/partition.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace spinmap {

namespace {

RationalPolynomial series(std::initializer_list<std::pair<std::size_t, BigRational>> terms) {
  RationalPolynomial out;
  for (const auto& [k, c] : terms) out += RationalPolynomial::monomial(k, c);
  return out;
}

// s * prod_k (s^2 - r_k^2) for the listed nonzero roots r_k.
RationalPolynomial odd_root_product(std::initializer_list<int> roots) {
  RationalPolynomial out = RationalPolynomial::monomial(1);
  for (int r : roots) out = out * series({{2, BigRational(1)}, {0, BigRational(-r * r)}});
  return out;
}

// Brackets of the (3,3) expressions, transcribed token by token.
constexpr std::array<std::string_view, 3> kBrackets33 = {
    "15184387919/1918955630592000*s^2 - 66791923009387/192008442802176000000*s^4 + "
    "22371900997/2643031196467200000*s^6 - 5057645209/40579872915456000000*s^8 - 17330419/226767340800 ++ "
    "2967383/2608706115993600000*s^10 - 664843/105721247858688000000*s^12 + 883/45812540738764800000*s^14 - "
    "1/39836991946752000000*s^16",
    "-192181663909/624923050752000000*s^2 + 15276178774039/427447366714368000000*s^4 - "
    "3162180475127/1496065783500288000000*s^6 + 88912189981/1329836252000256000000*s^8 + "
    "148211081/128501493120000 - 13780223389/11968526268002304000000*s^10 + "
    "126626341/11968526268002304000000*s^12 - 193309/3989508756000768000000*s^14 + "
    "173/1994754378000384000000*s^16",
    "841457709/2345390215168000*s^2 - 627741171441/16417731506176000000*s^4 + "
    "25815639/14857675571200000*s^6 - 77436279/1836948979712000000*s^8 - 15097/23796572800 ++ "
    "7713/13121064140800000*s^10 - 47463/10103219388416000000*s^12 + 261/13134185204940800000*s^14 - "
    "9/262683704098816000000*s^16",
};

std::string repair(std::string_view text) {
  std::string out(text);
  for (auto pos = out.find("++"); pos != std::string::npos; pos = out.find("++", pos)) out.erase(pos, 1);
  return out;
}

bool check_index_order_literal() {
  for (auto [p, M] : {std::pair{2, 2}, std::pair{3, 2}}) {
    const auto printed = printed_inverse_polynomials(p, M);
    const auto derived = inverse_polynomials(ClusterSpec(p, M));
    // printed sigma_m read as the digit of weight p^(m-1)
    if (printed == derived) return true;
  }
  return false;
}

bool check_index_order_corrected() {
  for (auto [p, M] : {std::pair{2, 2}, std::pair{3, 2}}) {
    if (printed_inverse_polynomials(p, M) != derived_in_printed_order(ClusterSpec(p, M))) return false;
  }
  return true;
}

bool check_sign(int p, int M, bool repaired, int expected) {
  try {
    return global_sign(printed_inverse_polynomials(p, M, repaired), derived_in_printed_order(ClusterSpec(p, M))) ==
           expected;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) return false;
    throw;
  }
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); }

constexpr std::array<std::pair<double, double>, 4> kSamplePoints = {
    std::pair{1.0, 0.5}, std::pair{-1.5, 0.25}, std::pair{0.75, -1.0}, std::pair{2.0, 1.0}};

// Z_M from the factors with 4 b+ b- replaced by 4 q.
bool check_gap_factors(bool literal) {
  for (int M = 2; M <= 5; ++M) {
    const ChainSpec chain(M);
    const GapFactors g = gap_factors(chain);
    const SymbolicZ z = partition_symbolic(chain);
    for (auto [J, h] : kSamplePoints) {
      const double q = literal ? std::exp(g.b_plus.evaluate(J, h) + g.b_minus.evaluate(J, h))
                               : std::exp(g.b_product.evaluate(J, h));
      const double closed =
          partition_from_factors(std::exp(g.a_plus.evaluate(J, h)), std::exp(g.a_minus.evaluate(J, h)), q, M);
      if (!close(closed, z.evaluate(J, h))) return false;
    }
  }
  return true;
}

// Largest eigenvalue of the 2x2 transfer matrix from its trace and determinant.
double largest_eigenvalue(double J, double h) {
  const double tr = std::exp(J / 4 + h / 2) + std::exp(J / 4 - h / 2);
  const double det = std::exp(J / 2) - std::exp(-J / 2);
  return (tr + std::sqrt(tr * tr - 4 * det)) / 2;
}

bool check_free_energy(double (*f)(double, double)) {
  for (auto [J, h] : kSamplePoints) {
    const double got = f(J, h);
    if (!std::isfinite(got) || std::abs(got - std::log(largest_eigenvalue(J, h))) > 1e-12) return false;
  }
  return true;
}

std::vector<Erratum> build() {
  std::vector<Erratum> out;
  out.push_back({"index-order",
                 "Inverse polynomials list digits most-significant first",
                 "S = sigma_1 + p sigma_2 + ... with sigma_1(s) = 13/12 s - 1/3 s^3 for S = 3/2",
                 "printed sigma_m is the digit of weight p^(M-m); for S = 3/2 the weight-1 digit is -7/6 s + 2/3 s^3",
                 check_index_order_literal, check_index_order_corrected});
  out.push_back({"sign-2-3",
                 "Spin-7/2 inverse polynomials carry a global minus sign",
                 "sigma_1(s) = 1/252 s^7 - 61/720 s^5 + 301/576 s^3 - 30251/26880 s, giving -1/2 at s = 7/2",
                 "all three printed polynomials are negated: sigma_m = -(printed sigma_m)",
                 [] { return check_sign(2, 3, true, 1); }, [] { return check_sign(2, 3, true, -1); }});
  out.push_back({"corruption-3-3",
                 "Spin-13 inverse polynomials contain stray '++' tokens",
                 "... - 17330419/226767340800 ++ 2967383/2608706115993600000 s^10 ... in sigma_1 and sigma_3",
                 "read '++' as '+'; the repaired expressions are then the negatives of the derived polynomials",
                 [] { return check_sign(3, 3, false, 1); }, [] { return check_sign(3, 3, true, -1); }});
  out.push_back({"gap-factor",
                 "Off-diagonal product in the closed-form partition function",
                 "4 b+ b- with b+- = exp((J +- h)/4), i.e. 4 exp(J/2)",
                 "the product must be 4 exp(-J/2), the squared off-diagonal transfer-matrix element",
                 [] { return check_gap_factors(true); }, [] { return check_gap_factors(false); }});
  out.push_back({"sinh-square",
                 "Free energy radicand misses a square",
                 "ln(e^{J/4} cosh(h/2) + sqrt(e^{J/2} sinh(h/2) + e^{-J/2}))",
                 "ln(e^{J/4} cosh(h/2) + sqrt(e^{J/2} sinh^2(h/2) + e^{-J/2}))",
                 [] { return check_free_energy(free_energy_as_printed); },
                 [] { return check_free_energy(free_energy); }});
  return out;
}

}  // namespace

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> table = build();
  return table;
}

std::string errata_report() {
  std::ostringstream out;
  int n = 0;
  for (const Erratum& e : errata()) {
    out << ++n << ". [" << e.key << "] " << e.title << "\n"
        << "   printed:    " << e.printed << "\n"
        << "   correction: " << e.correction << "\n"
        << "   check:      as printed " << (e.literal_holds() ? "holds" : "fails") << ", corrected "
        << (e.corrected_holds() ? "holds" : "fails") << "\n";
  }
  return out.str();
}

RationalPolynomial parse_printed_series(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  RationalPolynomial out;
  int sign = 1;
  bool expect_term = true;
  while (in >> token) {
    if (!expect_term) {
      if (token == "+") {
        sign = 1;
      } else if (token == "-") {
        sign = -1;
      } else {
        throw Error(ErrorKind::Parse, "unexpected operator '" + token + "'");
      }
      expect_term = true;
      continue;
    }
    std::size_t degree = 0;
    std::string coeff = token;
    if (const auto star = token.find("*s"); star != std::string::npos) {
      coeff = token.substr(0, star);
      const std::string rest = token.substr(star + 2);
      if (rest.empty()) {
        degree = 1;
      } else if (rest.size() > 1 && rest[0] == '^' &&
                 std::from_chars(rest.data() + 1, rest.data() + rest.size(), degree).ptr == rest.data() + rest.size()) {
      } else {
        throw Error(ErrorKind::Parse, "bad power in '" + token + "'");
      }
    }
    out += RationalPolynomial::monomial(degree, BigRational::parse(coeff) * BigRational(sign));
    expect_term = false;
  }
  if (expect_term) throw Error(ErrorKind::Parse, "series ends with an operator");
  return out;
}

std::vector<RationalPolynomial> printed_inverse_polynomials(int p, int M, bool repaired) {
  if (p == 2 && M == 2) {
    return {series({{1, BigRational(13, 12)}, {3, BigRational(-1, 3)}}),
            series({{1, BigRational(-7, 6)}, {3, BigRational(2, 3)}})};
  }
  if (p == 2 && M == 3) {
    return {series({{7, BigRational(1, 252)}, {5, BigRational(-61, 720)}, {3, BigRational(301, 576)},
                    {1, BigRational(-30251, 26880)}}),
            series({{7, BigRational(-1, 630)}, {5, BigRational(17, 360)}, {3, BigRational(-637, 1440)},
                    {1, BigRational(14887, 13440)}}),
            series({{7, BigRational(-4, 315)}, {5, BigRational(11, 45)}, {3, BigRational(-217, 180)},
                    {1, BigRational(2161, 1680)}})};
  }
  if (p == 3 && M == 2) {
    return {odd_root_product({1}) * series({{2, BigRational(-27, 560)}, {4, BigRational(1, 560)},
                                            {0, BigRational(139, 420)}}),
            odd_root_product({3}) * series({{2, BigRational(57, 560)}, {4, BigRational(-3, 560)},
                                            {0, BigRational(-31, 140)}})};
  }
  if (p == 3 && M == 3) {
    const std::array<RationalPolynomial, 3> roots = {odd_root_product({1, 2, 3, 4}), odd_root_product({1, 8, 9, 10}),
                                                     odd_root_product({3, 6, 9, 12})};
    std::vector<RationalPolynomial> out;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string text = repaired ? repair(kBrackets33[k]) : std::string(kBrackets33[k]);
      out.push_back(roots[k] * parse_printed_series(text));
    }
    return out;
  }
  throw Error(ErrorKind::InvalidArgument,
              "no printed polynomials for p = " + std::to_string(p) + ", M = " + std::to_string(M));
}

std::vector<RationalPolynomial> derived_in_printed_order(const ClusterSpec& spec) {
  auto derived = inverse_polynomials(spec);
  return {derived.rbegin(), derived.rend()};
}

std::optional<int> global_sign(const std::vector<RationalPolynomial>& printed,
                               const std::vector<RationalPolynomial>& derived) {
  if (printed.size() != derived.size() || printed.empty()) return std::nullopt;
  for (int sign : {1, -1}) {
    bool all = true;
    for (std::size_t k = 0; k < printed.size() && all; ++k) {
      all = printed[k] == derived[k].scaled(BigRational(sign));
    }
    if (all) return sign;
  }
  return std::nullopt;
}

double free_energy_as_printed(double J, double h) {
  return std::log(std::exp(J / 4) * std::cosh(h / 2) + std::sqrt(std::exp(J / 2) * std::sinh(h / 2) + std::exp(-J / 2)));
}

}  // namespace spinmap
