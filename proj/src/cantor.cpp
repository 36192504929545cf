#include "canopy/cantor.hpp"

#include <stdexcept>
#include <vector>

namespace canopy {

namespace {

// Scaled back up to [0,1], the set satisfies C = (1 + C)/5 union (3 + C)/5,
// so within a digit cylinder it spans [1/4, 3/4] of the cylinder scale.
// The successor walk keeps the query's residual y with a fixed denominator:
// y' = 5y - d touches only the numerator, so the loop needs no gcd work.

Rational cylinder_floor(const std::vector<int>& digits) {
    BigInt num = 0;
    for (int d : digits) num = num * 5 + d;
    return Rational(num, pow_int(BigInt(5), digits.size()));
}

Rational scale_pow5(std::size_t k) { return Rational(BigInt(1), pow_int(BigInt(5), k)); }

}  // namespace

CantorBracket cantor_successor(const Rational& a, int max_digits) {
    BigInt den = denominator(a);
    BigInt y = numerator(a);
    std::vector<int> digits;
    std::vector<BigInt> seen;
    seen.push_back(y);

    for (int k = 0; k <= max_digits; ++k) {
        if (4 * y <= den) {
            // below (or at) the scaled minimum: successor is the cylinder min
            Rational v = cylinder_floor(digits) + scale_pow5(digits.size()) * Rational(1, 4);
            return {true, v, v};
        }
        if (20 * y <= 7 * den) {
            digits.push_back(1);
            y = 5 * y - den;
        } else if (20 * y <= 13 * den) {
            // in the gap: successor is the min of the upper digit branch
            Rational v = cylinder_floor(digits) + scale_pow5(digits.size()) * Rational(13, 20);
            return {true, v, v};
        } else if (4 * y <= 3 * den) {
            digits.push_back(3);
            y = 5 * y - 3 * den;
        } else {
            // above the scaled maximum; only possible before any descent
            return {false, Rational(0), Rational(0)};
        }
        for (const BigInt& prev : seen) {
            if (prev == y) {
                // periodic residual: the query itself has an admissible
                // digit expansion, so it is the successor
                return {true, a, a};
            }
        }
        seen.push_back(y);
    }
    Rational fl = cylinder_floor(digits);
    Rational sc = scale_pow5(digits.size());
    return {true, fl + sc * Rational(1, 4), fl + sc * Rational(3, 4)};
}

bool cantor_contains(const Rational& x, int max_digits) {
    if (x < 0 || x > 1) return false;
    CantorBracket b = cantor_successor(x, max_digits);
    return b.exact() && b.lo == x;
}

Verdict cantor_interval_oracle(const Rational& lo, const Rational& hi, int max_digits) {
    if (lo < 0 || hi > 1 || lo > hi) throw std::invalid_argument("malformed interval");
    CantorBracket b = cantor_successor(lo, max_digits);
    if (!b.exists) return Verdict::Outside;
    if (b.lo > hi) return Verdict::Outside;
    if (b.hi <= hi) {
        if (lo == hi) return Verdict::Inside;
        return Verdict::Boundary;
    }
    return Verdict::Boundary;  // unresolved at the digit cap
}

TargetOracle make_cantor_wc(int max_digits) {
    TargetOracle s;
    s.tree = complete_tree(2);
    s.name = "cantor_WC";
    s.verdict = [max_digits](const Position& p) {
        BigInt k = 0;
        for (std::size_t i = 0; i < p.len(); ++i) k = 2 * k + p[i];
        BigInt den = pow_int(BigInt(2), p.len());
        return cantor_interval_oracle(Rational(k, den), Rational(k + 1, den), max_digits);
    };
    return s;
}

}  // namespace canopy
