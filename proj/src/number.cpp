#include "lat/number.hpp"

#include <limits>
#include <stdexcept>

namespace lat {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Integer q = a / b;  // truncates toward zero
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  return -floor_div(-a, b);
}

Integer isqrt(const Integer& a) {
  if (a < 0) throw std::domain_error("isqrt: negative argument");
  return boost::multiprecision::sqrt(a);
}

Integer floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q),
                   boost::multiprecision::denominator(q));
}

bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

std::optional<std::int64_t> to_int64(const Integer& a) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (a < lo || a > hi) return std::nullopt;
  return a.convert_to<std::int64_t>();
}

std::int64_t checked_int64(const Integer& a, const char* what) {
  auto v = to_int64(a);
  if (!v) throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
  return *v;
}

std::string to_string(const Integer& a) { return a.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

}  // namespace lat
