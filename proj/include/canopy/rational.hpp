#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

#include <optional>
#include <stdexcept>
#include <string>

namespace canopy {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_int(BigInt base, unsigned long long e) {
    BigInt r = 1;
    while (e > 0) {
        if (e & 1ULL) r *= base;
        base *= base;
        e >>= 1ULL;
    }
    return r;
}

/// base^e for integer e (negative exponents allowed, base != 0).
inline Rational pow_rat(const Rational& base, long long e) {
    if (e >= 0) {
        return Rational(pow_int(numerator(base), (unsigned long long)e),
                        pow_int(denominator(base), (unsigned long long)e));
    }
    if (base == 0) throw std::domain_error("pow_rat: 0 to negative power");
    return Rational(pow_int(denominator(base), (unsigned long long)(-e)),
                    pow_int(numerator(base), (unsigned long long)(-e)));
}

inline BigInt floor_rat(const Rational& x) {
    BigInt q = numerator(x) / denominator(x);
    if (x < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// "p/q" (or "p" when q == 1); the wire format used in JSON reports.
inline std::string rat_to_string(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num, den);
}

/// Largest e with m = c^e for an integer c >= 2; returns {c, e}.
inline std::pair<long long, int> largest_power_base(long long m) {
    if (m < 2) throw std::invalid_argument("largest_power_base: need m >= 2");
    for (int e = 62; e >= 2; --e) {
        long long c = (long long)std::llround(std::pow((double)m, 1.0 / e));
        for (long long cand = std::max(2LL, c - 1); cand <= c + 1; ++cand) {
            BigInt p = pow_int(BigInt(cand), (unsigned long long)e);
            if (p == m) return {cand, e};
        }
    }
    return {m, 1};
}

}  // namespace canopy
