#include "spinmap/half_int.hpp"

#include "spinmap/error.hpp"

#include <ostream>

namespace spinmap {

HalfInt HalfInt::parse(std::string_view text) {
  const BigRational q = BigRational::parse(text);
  const BigRational twice = q * BigRational(2);
  if (!twice.is_integer()) {
    throw Error(ErrorKind::Parse, "'" + std::string(text) + "' is not a half-integer");
  }
  return from_doubled(std::stoll(twice.numerator_str()));
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace spinmap
