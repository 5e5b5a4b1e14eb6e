#include "tga/rational.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace tga {

Rational rational_pow(const Rational& base, int exp) {
    if (exp < 0) throw std::invalid_argument("rational_pow: negative exponent");
    Rational result = 1;
    for (int i = 0; i < exp; ++i) result *= base;
    return result;
}

long long floor_strict(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    BigInt q = num / den;  // truncates toward zero
    BigInt r = num % den;
    BigInt f;
    if (r == 0) {
        f = q - 1;  // integer value: strictly below
    } else if (num < 0) {
        f = q - 1;  // truncation rounded up for negatives
    } else {
        f = q;
    }
    if (f > std::numeric_limits<long long>::max() || f < std::numeric_limits<long long>::min())
        throw std::overflow_error("floor_strict: value out of long long range");
    return static_cast<long long>(f);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

std::string to_string(const Rational& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

}  // namespace tga
