#include "canopy/algebraic.hpp"

#include <numeric>
#include <stdexcept>

namespace canopy {

PowerContext PowerContext::make(int arity, const Rational& delta) {
    if (arity < 2) throw std::invalid_argument("arity must be >= 2");
    if (delta < 0) throw std::invalid_argument("exponent must be >= 0");
    auto [c, e] = largest_power_base(arity);
    BigInt num = numerator(delta) * e;
    BigInt den = denominator(delta);
    BigInt g = boost::multiprecision::gcd(num, den);
    BigInt step = num / g;
    BigInt s = den / g;
    if (num == 0) {
        step = 0;
        s = 1;
    }
    if (s > 64 || step > (BigInt(1) << 40))
        throw std::invalid_argument("exponent denominator too large for exact arithmetic");
    PowerContext ctx;
    ctx.root_base = c;
    ctx.root_index = (int)s;
    ctx.depth_step = (long long)step;
    return ctx;
}

PowerSum::PowerSum(PowerContext ctx) : ctx_(ctx), coef_(ctx.root_index, Rational(0)) {}

PowerSum PowerSum::diam_pow(const PowerContext& ctx, long long depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    PowerSum r(ctx);
    long long k = depth * ctx.depth_step;
    long long j = k % ctx.root_index;
    long long t = k / ctx.root_index;
    r.coef_[(std::size_t)j] = pow_rat(Rational(ctx.root_base), -t);
    return r;
}

PowerSum PowerSum::from_rational(const PowerContext& ctx, const Rational& q) {
    PowerSum r(ctx);
    r.coef_[0] = q;
    return r;
}

PowerSum& PowerSum::operator+=(const PowerSum& rhs) {
    if (!(ctx_ == rhs.ctx_)) throw std::invalid_argument("mixed power contexts");
    for (std::size_t j = 0; j < coef_.size(); ++j) coef_[j] += rhs.coef_[j];
    return *this;
}

bool PowerSum::is_zero() const {
    for (const auto& q : coef_)
        if (q != 0) return false;
    return true;
}

bool PowerSum::is_rational() const {
    for (std::size_t j = 1; j < coef_.size(); ++j)
        if (coef_[j] != 0) return false;
    return true;
}

namespace {

// Sign of sum q_j * u^j with u = base^(-1/s), by refining a rational
// bracket of u until zero is excluded. The basis powers are linearly
// independent over Q, so a nonzero coefficient vector has nonzero value and
// the refinement terminates.
int poly_sign(const std::vector<Rational>& q, long long base, int s) {
    bool nonzero = false;
    for (const auto& c : q)
        if (c != 0) nonzero = true;
    if (!nonzero) return 0;
    if (s == 1) return q[0] < 0 ? -1 : (q[0] > 0 ? 1 : 0);

    Rational lo(0), hi(1);
    Rational inv_base(1, base);
    for (int iter = 0; iter < 20000; ++iter) {
        Rational mid = (lo + hi) / 2;
        if (pow_rat(mid, s) <= inv_base)
            lo = mid;
        else
            hi = mid;
        Rational sum_lo(0), sum_hi(0);
        Rational plo(1), phi(1);
        for (int j = 0; j < s; ++j) {
            if (q[(std::size_t)j] >= 0) {
                sum_lo += q[(std::size_t)j] * plo;
                sum_hi += q[(std::size_t)j] * phi;
            } else {
                sum_lo += q[(std::size_t)j] * phi;
                sum_hi += q[(std::size_t)j] * plo;
            }
            plo *= lo;
            phi *= hi;
        }
        if (sum_lo > 0) return 1;
        if (sum_hi < 0) return -1;
    }
    throw std::logic_error("sign refinement did not converge");
}

}  // namespace

int PowerSum::compare(const PowerSum& rhs) const {
    if (!(ctx_ == rhs.ctx_)) throw std::invalid_argument("mixed power contexts");
    std::vector<Rational> diff(coef_.size());
    for (std::size_t j = 0; j < coef_.size(); ++j) diff[j] = coef_[j] - rhs.coef_[j];
    return poly_sign(diff, ctx_.root_base, ctx_.root_index);
}

double PowerSum::to_double() const {
    int s = ctx_.root_index;
    if (s == 1) return canopy::to_double(coef_[0]);
    Rational lo(0), hi(1);
    Rational inv_base(1, ctx_.root_base);
    for (int iter = 0; iter < 96; ++iter) {
        Rational mid = (lo + hi) / 2;
        if (pow_rat(mid, s) <= inv_base)
            lo = mid;
        else
            hi = mid;
    }
    Rational u = (lo + hi) / 2;
    Rational sum(0), p(1);
    for (int j = 0; j < s; ++j) {
        sum += coef_[(std::size_t)j] * p;
        p *= u;
    }
    return canopy::to_double(sum);
}

std::string PowerSum::str() const {
    std::string out;
    for (std::size_t j = 0; j < coef_.size(); ++j) {
        if (coef_[j] == 0) continue;
        if (!out.empty()) out += " + ";
        if (j == 0) {
            out += rat_to_string(coef_[j]);
        } else {
            if (coef_[j] != 1) out += rat_to_string(coef_[j]) + "*";
            out += std::to_string(ctx_.root_base) + "^(-" + std::to_string(j) + "/" +
                   std::to_string(ctx_.root_index) + ")";
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace canopy
