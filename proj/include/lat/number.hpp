#ifndef LAT_NUMBER_HPP
#define LAT_NUMBER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lat {

// Exact scalars. Every quantity derived from a Gram matrix is computed with
// these; nothing in the library touches floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer magnitude(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// floor(a / b) and ceil(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

// floor(sqrt(a)) for a >= 0.
Integer isqrt(const Integer& a);

// floor of a rational.
Integer floor(const Rational& q);

bool is_integral(const Rational& q);

std::optional<std::int64_t> to_int64(const Integer& a);

// Throws std::overflow_error naming `what` when `a` does not fit.
std::int64_t checked_int64(const Integer& a, const char* what);

std::string to_string(const Integer& a);
std::string to_string(const Rational& q);

}  // namespace lat

#endif  // LAT_NUMBER_HPP
