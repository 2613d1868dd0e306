#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dimlaw {

/// Exact arbitrary-precision fraction. boost keeps it canonical:
/// gcd(|num|, den) == 1 and den > 0 after every operation.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RatVec = std::vector<Rational>;

/// "p/q" when q != 1, plain "p" otherwise. Inverse of parse_rational.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q", "-p/q" with q > 0 after normalization.
/// Throws dimlaw::ParseError on anything else (including "p/0").
Rational parse_rational(std::string_view text);

std::vector<std::string> to_strings(const RatVec& v);

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

}  // namespace dimlaw
