#pragma once

#include "canopy/rational.hpp"

#include <string>
#include <vector>

namespace canopy {

/// Exact arithmetic for cylinder-cover costs: with a fixed tree arity m and
/// exponent delta = a/b, every cost is a sum of monomials m^(-delta*n).
/// Values are kept in the basis 1, c^(-1/s), ..., c^(-(s-1)/s) where c is
/// the smallest base with m a power of c and s divides b; comparisons are
/// exact (coefficient identity plus interval refinement of c^(-1/s)).
struct PowerContext {
    long long root_base = 2;  // c
    int root_index = 1;       // s
    long long depth_step = 1; // m^(-delta*n) = c^(-(n*depth_step)/s)

    static PowerContext make(int arity, const Rational& delta);
    bool operator==(const PowerContext& o) const {
        return root_base == o.root_base && root_index == o.root_index &&
               depth_step == o.depth_step;
    }
};

class PowerSum {
  public:
    explicit PowerSum(PowerContext ctx);

    static PowerSum zero(const PowerContext& ctx) { return PowerSum(ctx); }
    /// diam(cylinder at depth n)^delta as an exact value.
    static PowerSum diam_pow(const PowerContext& ctx, long long depth);
    static PowerSum from_rational(const PowerContext& ctx, const Rational& q);

    PowerSum& operator+=(const PowerSum& rhs);
    PowerSum operator+(const PowerSum& rhs) const {
        PowerSum r = *this;
        r += rhs;
        return r;
    }

    int compare(const PowerSum& rhs) const;  // -1, 0, +1
    bool operator==(const PowerSum& rhs) const { return compare(rhs) == 0; }
    bool operator<(const PowerSum& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const PowerSum& rhs) const { return compare(rhs) <= 0; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const { return coef_[0]; }

    double to_double() const;
    std::string str() const;

    const PowerContext& ctx() const { return ctx_; }
    const std::vector<Rational>& coefficients() const { return coef_; }

  private:
    PowerContext ctx_;
    std::vector<Rational> coef_;  // size root_index
};

inline PowerSum min(const PowerSum& a, const PowerSum& b) { return a.compare(b) <= 0 ? a : b; }

}  // namespace canopy
