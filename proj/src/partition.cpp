#include "spinmap/partition.hpp"

#include "spinmap/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace spinmap {

namespace {

// Doubled projection: +1 for an up digit, -1 for a down one.
std::int64_t doubled_projection(int sites, std::uint64_t j, int m) {
  return ((j >> (sites - m)) & 1U) ? 1 : -1;
}

// 4 * (coefficient of J, coefficient of h) for F_{j,j'}.
std::pair<std::int64_t, std::int64_t> f_entry_quarters(int sites, std::uint64_t j, std::uint64_t jp) {
  std::int64_t a = 0;
  std::int64_t b = 0;
  for (int m = 1; m <= sites; ++m) {
    const int next = m == sites ? 1 : m + 1;
    const std::int64_t p = doubled_projection(sites, j, m);
    const std::int64_t q = doubled_projection(sites, jp, next);
    a += p * q;
    b += p + q;
  }
  return {a, b};
}

LinearForm quarters(std::int64_t a, std::int64_t b) { return {BigRational(a, 4), BigRational(b, 4)}; }

void check_index(const ChainSpec& chain, std::uint64_t j) {
  if (j >= chain.states()) {
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(j) + " outside 0.." +
                                                std::to_string(chain.states() - 1));
  }
}

struct Eigen {
  double plus;
  double minus;
};

Eigen eigenvalues_from(double ap, double am, double q) {
  const double disc = std::sqrt((ap - am) * (ap - am) + 4 * q);
  return {(ap + am + disc) / 2, (ap + am - disc) / 2};
}

Eigen eigenvalues(double J, double h) {
  return eigenvalues_from(std::exp(J / 4 + h / 2), std::exp(J / 4 - h / 2), std::exp(-J / 2));
}

double checked_exp(double log_value) {
  const double v = std::exp(log_value);
  if (!std::isfinite(v) || !std::isfinite(log_value)) {
    throw Error(ErrorKind::Overflow, "partition function not representable as a double");
  }
  return v;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

BigRational parse_coefficient(std::string_view text, std::string_view suffix, std::string_view line) {
  std::string t = trim(text);
  if (t.size() <= suffix.size() || t.compare(t.size() - suffix.size(), suffix.size(), suffix) != 0) {
    throw Error(ErrorKind::Parse, "expected '<rational>" + std::string(suffix) + "' in: " + std::string(line));
  }
  return BigRational::parse(t.substr(0, t.size() - suffix.size()));
}

}  // namespace

std::string LinearForm::str() const {
  std::string out = j.str() + "*J ";
  if (h.sign() < 0) {
    out += "- " + h.abs().str();
  } else {
    out += "+ " + h.str();
  }
  return out + "*h";
}

ChainSpec::ChainSpec(int sites, int limit) : sites_(sites) {
  if (sites < 2) throw Error(ErrorKind::InvalidArgument, "chain needs at least 2 sites");
  if (sites > limit) {
    throw Error(ErrorKind::LimitExceeded,
                "chain of " + std::to_string(sites) + " sites exceeds limit " + std::to_string(limit));
  }
}

std::uint64_t ChainSpec::states() const {
  if (sites_ > 63) throw Error(ErrorKind::LimitExceeded, "2^M does not fit in 64 bits");
  return std::uint64_t{1} << sites_;
}

LinearForm f_entry(const ChainSpec& chain, std::uint64_t j, std::uint64_t jp) {
  check_index(chain, j);
  check_index(chain, jp);
  const auto [a, b] = f_entry_quarters(chain.sites(), j, jp);
  return quarters(a, b);
}

FMatrix f_matrix(const ChainSpec& chain, int max_sites) {
  if (chain.sites() > max_sites) {
    throw Error(ErrorKind::LimitExceeded, "full F matrix limited to " + std::to_string(max_sites) + " sites");
  }
  const std::uint64_t n = chain.states();
  FMatrix f(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    for (std::uint64_t jp = 0; jp < n; ++jp) {
      const auto [a, b] = f_entry_quarters(chain.sites(), j, jp);
      f.at(j, jp) = quarters(a, b);
    }
  }
  return f;
}

LinearForm single_particle_energy(HalfInt s, const ChainSpec& chain) {
  const HalfInt spin = chain.spin();
  if (s < -spin || s > spin) throw Error(ErrorKind::SpinOutOfRange, "s = " + s.str() + " outside [-S, S]");
  const HalfInt shifted = s + spin;
  if (!shifted.is_integer()) throw Error(ErrorKind::ParityMismatch, "s + S must be an integer");
  const auto j = static_cast<std::uint64_t>(shifted.doubled() / 2);
  return f_entry(chain, j, j);
}

std::uint64_t SymbolicZ::total_multiplicity() const {
  std::uint64_t n = 0;
  for (const auto& [form, mult] : terms) n += mult;
  return n;
}

double SymbolicZ::evaluate(double J, double h) const {
  double z = 0;
  for (const auto& [form, mult] : terms) z += static_cast<double>(mult) * std::exp(form.evaluate(J, h));
  return z;
}

std::string SymbolicZ::str() const {
  std::string out;
  for (const auto& [form, mult] : terms) out += std::to_string(mult) + " * exp(" + form.str() + ")\n";
  return out;
}

SymbolicZ SymbolicZ::parse(std::string_view text) {
  std::vector<std::pair<LinearForm, std::uint64_t>> raw;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto star = t.find(" * exp(");
    if (star == std::string::npos || t.back() != ')') throw Error(ErrorKind::Parse, "malformed term: " + t);
    std::uint64_t mult = 0;
    const std::string count = t.substr(0, star);
    const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), mult);
    if (ec != std::errc{} || ptr != count.data() + count.size() || mult == 0) {
      throw Error(ErrorKind::Parse, "bad multiplicity in: " + t);
    }
    const std::string body = t.substr(star + 7, t.size() - star - 8);
    auto sep = body.find(" + ");
    bool negative = false;
    if (sep == std::string::npos) {
      sep = body.find(" - ");
      negative = true;
    }
    if (sep == std::string::npos) throw Error(ErrorKind::Parse, "expected 'a*J +/- b*h' in: " + t);
    LinearForm form{parse_coefficient(std::string_view(body).substr(0, sep), "*J", t),
                    parse_coefficient(std::string_view(body).substr(sep + 3), "*h", t)};
    if (negative) {
      if (form.h.sign() < 0) throw Error(ErrorKind::Parse, "double sign in: " + t);
      form.h = -form.h;
    }
    raw.emplace_back(std::move(form), mult);
  }
  return from_terms(std::move(raw));
}

SymbolicZ SymbolicZ::from_terms(std::vector<std::pair<LinearForm, std::uint64_t>> raw) {
  std::map<LinearForm, std::uint64_t> merged;
  for (auto& [form, mult] : raw) {
    if (mult != 0) merged[std::move(form)] += mult;
  }
  SymbolicZ z;
  z.terms.assign(merged.begin(), merged.end());
  return z;
}

SymbolicZ partition_symbolic(const ChainSpec& chain) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> counts;
  const std::uint64_t n = chain.states();
  for (std::uint64_t j = 0; j < n; ++j) ++counts[f_entry_quarters(chain.sites(), j, j)];
  std::vector<std::pair<LinearForm, std::uint64_t>> raw;
  raw.reserve(counts.size());
  for (const auto& [key, mult] : counts) raw.emplace_back(quarters(key.first, key.second), mult);
  return SymbolicZ::from_terms(std::move(raw));
}

GapFactors gap_factors(const ChainSpec& chain) {
  const BigRational per_site(1, chain.sites());
  const HalfInt spin = chain.spin();
  const HalfInt one = HalfInt::integer(1);
  const LinearForm top = single_particle_energy(spin, chain);
  const LinearForm bottom = single_particle_energy(-spin, chain);
  const LinearForm next_top = single_particle_energy(spin - one, chain);
  const LinearForm next_bottom = single_particle_energy(-spin + one, chain);

  GapFactors g;
  g.a_plus = top.scaled(per_site);
  g.a_minus = bottom.scaled(per_site);
  g.c_plus = next_top.scaled(per_site);
  g.c_minus = next_bottom.scaled(per_site);
  g.delta_e_plus = top - next_top;
  g.delta_e_minus = bottom - next_bottom;
  g.b_plus = g.delta_e_plus.scaled(BigRational(1, 4));
  g.b_minus = g.delta_e_minus.scaled(BigRational(1, 4));
  g.b_product = {BigRational(-1, 2), BigRational(0)};
  return g;
}

double partition_from_factors(double a_plus, double a_minus, double off_product, int sites) {
  const Eigen e = eigenvalues_from(a_plus, a_minus, off_product);
  return std::pow(e.plus, sites) + std::pow(e.minus, sites);
}

double log_partition_closed_form(const ChainSpec& chain, double J, double h) {
  const Eigen e = eigenvalues(J, h);
  const double m = chain.sites();
  const double ratio = e.minus / e.plus;
  return m * std::log(e.plus) + std::log1p(std::pow(ratio, m));
}

double partition_closed_form(const ChainSpec& chain, double J, double h) {
  const Eigen e = eigenvalues(J, h);
  const double direct = std::pow(e.plus, chain.sites()) + std::pow(e.minus, chain.sites());
  if (std::isfinite(direct) && direct > 0) return direct;
  return checked_exp(log_partition_closed_form(chain, J, h));
}

double log_transfer_matrix_partition(const ChainSpec& chain, double J, double h) {
  using Mat = std::array<double, 4>;
  const auto mul = [](const Mat& x, const Mat& y) {
    return Mat{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
               x[2] * y[1] + x[3] * y[3]};
  };
  const auto normalize = [](Mat& x, double& log_scale) {
    const double big = std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2]), std::abs(x[3])});
    for (double& v : x) v /= big;
    log_scale += std::log(big);
  };

  Mat base{std::exp(J / 4 + h / 2), std::exp(-J / 4), std::exp(-J / 4), std::exp(J / 4 - h / 2)};
  double base_log = 0;
  normalize(base, base_log);
  Mat acc{1, 0, 0, 1};
  double acc_log = 0;
  for (auto n = static_cast<unsigned>(chain.sites()); n != 0; n >>= 1) {
    if (n & 1U) {
      acc = mul(acc, base);
      acc_log += base_log;
      normalize(acc, acc_log);
    }
    if (n > 1) {
      base = mul(base, base);
      base_log *= 2;
      normalize(base, base_log);
    }
  }
  return acc_log + std::log(acc[0] + acc[3]);
}

double transfer_matrix_partition(const ChainSpec& chain, double J, double h) {
  return checked_exp(log_transfer_matrix_partition(chain, J, h));
}

double free_energy(double J, double h) {
  const double sh = std::sinh(h / 2);
  return std::log(std::exp(J / 4) * std::cosh(h / 2) + std::sqrt(std::exp(J / 2) * sh * sh + std::exp(-J / 2)));
}

double eigenvalue_ratio(double J, double h) {
  const Eigen e = eigenvalues(J, h);
  return std::abs(e.minus) / e.plus;
}

FMatrix f_matrix_general(const std::vector<Bond>& bonds, std::int64_t gamma, const ClusterSpec& spec,
                         std::uint64_t max_states) {
  if (gamma < 1) throw Error(ErrorKind::InvalidArgument, "gamma must be a positive integer");
  const int sites = spec.cluster_size();
  for (const Bond& b : bonds) {
    if (b.m < 1 || b.m > sites || b.m_prime < 1 || b.m_prime > sites) {
      throw Error(ErrorKind::IndexOutOfRange, "bond site outside 1.." + std::to_string(sites));
    }
  }
  const std::uint64_t n = spec.states();
  if (n > max_states) {
    throw Error(ErrorKind::LimitExceeded, "F matrix of dimension " + std::to_string(n) + " exceeds limit " +
                                              std::to_string(max_states));
  }
  // doubled projection of j on digit m, weight p^(M-m)
  const auto proj = [&](std::uint64_t j, int m) {
    const std::uint64_t digit = (j / spec.weight(sites - m + 1)) % static_cast<std::uint64_t>(spec.p());
    return 2 * static_cast<std::int64_t>(digit) - (spec.p() - 1);
  };
  FMatrix f(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    for (std::uint64_t jp = 0; jp < n; ++jp) {
      LinearForm entry{BigRational(0), BigRational(0)};
      for (const Bond& b : bonds) {
        const std::int64_t p = proj(j, b.m);
        const std::int64_t q = proj(jp, b.m_prime);
        entry.j += b.coupling * BigRational(p * q, 4);
        entry.h += BigRational(p + q, gamma);
      }
      f.at(j, jp) = std::move(entry);
    }
  }
  return f;
}

}  // namespace spinmap
