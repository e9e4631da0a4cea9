#include "spinmap/rational.hpp"

#include "spinmap/error.hpp"

#include <cctype>
#include <ostream>

namespace spinmap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorKind::SpinOutOfRange: return "SpinOutOfRange";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRational::BigRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  const bool negative = !num.empty() && num.front() == '-';
  if (!all_digits(negative ? num.substr(1) : num)) {
    throw Error(ErrorKind::Parse, "malformed rational literal '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos && !all_digits(den)) {
    throw Error(ErrorKind::Parse, "malformed rational literal '" + std::string(text) + "'");
  }

  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  BigRational out;
  out.value_ = mpq_class(n, d);
  out.value_.canonicalize();
  return out;
}

BigRational BigRational::from_mpq(const mpq_class& q) {
  BigRational out;
  out.value_ = q;
  out.value_.canonicalize();
  return out;
}

std::string BigRational::str() const { return value_.get_str(); }

double BigRational::to_double() const { return value_.get_d(); }

BigRational BigRational::abs() const { return from_mpq(::abs(value_)); }

BigRational BigRational::pow(unsigned exponent) const {
  BigRational out;
  mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return out;
}

BigRational& BigRational::operator+=(const BigRational& other) {
  value_ += other.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& other) {
  value_ -= other.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& other) {
  value_ *= other.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& other) {
  if (other.is_zero()) throw Error(ErrorKind::DivisionByZero, "division of " + str() + " by zero");
  value_ /= other.value_;
  return *this;
}

BigRational BigRational::operator-() const { return from_mpq(-value_); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.str(); }

BigRational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational::from_mpq(mpq_class(f));
}

}  // namespace spinmap
