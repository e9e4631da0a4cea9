#include "spinmap/polynomial.hpp"

#include "spinmap/error.hpp"

#include <algorithm>
#include <ostream>

namespace spinmap {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) {
  return RationalPolynomial(std::vector<BigRational>{c});
}

RationalPolynomial RationalPolynomial::monomial(std::size_t degree, const BigRational& c) {
  std::vector<BigRational> coeffs(degree + 1);
  coeffs[degree] = c;
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial RationalPolynomial::linear_factor(const BigRational& root) {
  return RationalPolynomial(std::vector<BigRational>{-root, BigRational(1)});
}

RationalPolynomial RationalPolynomial::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(ErrorKind::Parse, "polynomial must be written as [c0, c1, ...]");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<BigRational> coeffs;
  if (body.empty()) return RationalPolynomial{};
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    std::string_view item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (!coeffs.empty()) {
      // entries after the first are separated by ", "
      if (item.empty() || item.front() != ' ') throw Error(ErrorKind::Parse, "expected ', ' separator");
      item.remove_prefix(1);
    }
    coeffs.push_back(BigRational::parse(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return RationalPolynomial(std::move(coeffs));
}

BigRational RationalPolynomial::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : BigRational(0);
}

BigRational RationalPolynomial::evaluate(const BigRational& x) const {
  BigRational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

bool RationalPolynomial::is_odd() const {
  for (std::size_t k = 0; k < coefficients_.size(); k += 2) {
    if (!coefficients_[k].is_zero()) return false;
  }
  return true;
}

RationalPolynomial RationalPolynomial::scaled(const BigRational& factor) const {
  if (factor.is_zero()) return {};
  RationalPolynomial out = *this;
  for (auto& c : out.coefficients_) c *= factor;
  return out;
}

RationalPolynomial RationalPolynomial::divided_by_root(const BigRational& root) const {
  if (coefficients_.empty()) return {};
  // synthetic division, highest power first
  std::vector<BigRational> quotient(coefficients_.size() - 1);
  BigRational carry;
  for (std::size_t k = coefficients_.size(); k-- > 1;) {
    carry = coefficients_[k] + carry * root;
    quotient[k - 1] = carry;
  }
  const BigRational remainder = coefficients_[0] + carry * root;
  if (!remainder.is_zero()) {
    throw Error(ErrorKind::Inconsistent, root.str() + " is not a root");
  }
  return RationalPolynomial(std::move(quotient));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
  normalize();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (k) out += ", ";
    out += coefficients_[k].str();
  }
  return out + "]";
}

void RationalPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) { return os << p.str(); }

}  // namespace spinmap
