#ifndef INDEL_RATIONAL_HPP
#define INDEL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace indel {

// All counts and probabilities in this library are exact. Integer is
// unbounded; Rational is kept in lowest terms with a positive denominator
// (cpp_rational canonicalizes on construction).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer int_pow(Integer base, long long exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    Integer result = 1;  // 0^0 = 1 by convention, needed at q = 2
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

// C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline Integer factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

inline std::string to_fraction_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Fixed-point decimal with `precision` digits, round half to even.
inline std::string to_decimal_string(const Rational& value, int precision) {
    if (precision < 0) throw std::invalid_argument("to_decimal_string: negative precision");
    Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    const bool negative = num < 0;
    if (negative) num = -num;

    const Integer scale = int_pow(10, precision);
    Integer scaled = num * scale;
    Integer quotient = scaled / den;
    const Integer remainder = scaled % den;
    const Integer twice = remainder * 2;
    if (twice > den || (twice == den && (quotient & 1) != 0)) ++quotient;

    std::string digits = quotient.str();
    std::string out = negative && quotient != 0 ? "-" : "";
    if (precision == 0) return out + digits;
    if (static_cast<int>(digits.size()) <= precision)
        digits.insert(0, precision + 1 - digits.size(), '0');
    const auto split = digits.size() - precision;
    return out + digits.substr(0, split) + "." + digits.substr(split);
}

}  // namespace indel

#endif
