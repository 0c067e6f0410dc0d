#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace svt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a closed-form expression is evaluated outside the parameter
/// range on which it is defined (e.g. a zero linear divisor).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline BigInt factorial(long m) {
    if (m < 0) {
        throw DomainError("factorial of negative argument " + std::to_string(m));
    }
    BigInt r = 1;
    for (long k = 2; k <= m; ++k) {
        r *= k;
    }
    return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Lowest-terms rendering. Integers print without "/1" unless
/// `always_fraction` is set.
inline std::string to_string(const Rational& q, bool always_fraction = false) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1 && !always_fraction) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

inline BigInt to_integer(const Rational& q) {
    if (!is_integer(q)) {
        throw DomainError("expected an integer, got " + to_string(q));
    }
    return boost::multiprecision::numerator(q);
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (text.empty() || slash == 0 || slash + 1 == text.size()) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

} // namespace svt
