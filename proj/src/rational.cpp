#include "dimlaw/rational.hpp"

#include <cctype>
#include <sstream>

#include "dimlaw/errors.hpp"

namespace dimlaw {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rational parse_rational(std::string_view text) {
    // Hand-rolled instead of cpp_rational(std::string): boost accepts
    // whitespace-padded and exotic forms, we want the exact grammar.
    std::size_t i = 0;
    auto fail = [&](const char* why) -> Rational {
        throw ParseError("invalid rational '" + std::string(text) + "': " + why);
    };
    auto read_int = [&](bool allow_sign) -> BigInt {
        bool negative = false;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
            negative = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("expected digit");
        BigInt value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            ++i;
        }
        return negative ? -value : value;
    };

    const BigInt num = read_int(true);
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int(true);
        if (den == 0) fail("zero denominator");
    }
    if (i != text.size()) fail("trailing characters");
    return Rational(num, den);
}

std::vector<std::string> to_strings(const RatVec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

}  // namespace dimlaw
