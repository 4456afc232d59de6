#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace autobasis {

/// Arbitrary-precision natural number. Signed storage; callers keep it >= 0.
using BigNat = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigNat pow_nat(unsigned base, unsigned exponent) {
    return boost::multiprecision::pow(BigNat(base), exponent);
}

inline BigRational inverse_power(unsigned base, unsigned exponent) {
    return BigRational(BigNat(1), pow_nat(base, exponent));
}

inline std::string to_string(const BigNat& n) { return n.str(); }

inline std::string to_string(const BigRational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses a decimal natural number; throws InputError on malformed text.
BigNat parse_nat(const std::string& text);

}  // namespace autobasis
