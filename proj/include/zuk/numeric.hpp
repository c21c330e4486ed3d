#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zuk {

// Exact arithmetic everywhere: arbitrary-precision integers and always-reduced
// rationals (denominator > 0 is maintained by the backend).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Rat& x) {
    if (x == 0) return Sign::zero;
    return x > 0 ? Sign::positive : Sign::negative;
}

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

Int pow10(unsigned k);

std::string to_string(const Int& x);
// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& x);

// Accepts "p/q", plain integers, and decimal notation with an optional
// exponent ("0.25", "1e-12", "-2.5e-3"). Always exact.
Rat parse_rational(const std::string& text);

}  // namespace zuk
