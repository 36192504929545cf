#pragma once

#include "canopy/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace canopy {

/// A set of natural numbers given by a membership predicate, an optional
/// declared density, and an optional certificate that [cofinite_from, inf)
/// is contained in the set. Density claims are empirical, never proven.
struct IndexSet {
    std::function<bool(std::uint64_t)> member;
    std::optional<Rational> claimed_density;
    std::optional<std::uint64_t> cofinite_from;
    std::string name = "set";

    bool operator()(std::uint64_t n) const { return member(n); }

    std::uint64_t count_below(std::uint64_t n) const {
        std::uint64_t c = 0;
        for (std::uint64_t i = 0; i < n; ++i)
            if (member(i)) ++c;
        return c;
    }

    static IndexSet empty() {
        return {[](std::uint64_t) { return false; }, Rational(0), std::nullopt, "empty"};
    }
    static IndexSet all() {
        return {[](std::uint64_t) { return true; }, Rational(1), 0, "all"};
    }
    static IndexSet odds() {
        return {[](std::uint64_t n) { return n % 2 == 1; }, Rational(1, 2), std::nullopt, "odds"};
    }
    static IndexSet evens() {
        return {[](std::uint64_t n) { return n % 2 == 0; }, Rational(1, 2), std::nullopt, "evens"};
    }
    static IndexSet multiples(std::uint64_t k) {
        if (k == 0) throw std::invalid_argument("multiples of 0");
        return {[k](std::uint64_t n) { return n % k == 0; }, Rational(1, (long long)k),
                std::nullopt, "multiples_of_" + std::to_string(k)};
    }
    static IndexSet residue(std::uint64_t r, std::uint64_t mod) {
        if (mod == 0) throw std::invalid_argument("residue mod 0");
        return {[r, mod](std::uint64_t n) { return n % mod == r % mod; },
                Rational(1, (long long)mod), std::nullopt,
                "residue_" + std::to_string(r) + "_mod_" + std::to_string(mod)};
    }
    static IndexSet finite(std::vector<std::uint64_t> values) {
        return {[values = std::move(values)](std::uint64_t n) {
                    for (auto v : values)
                        if (v == n) return true;
                    return false;
                },
                Rational(0), std::nullopt, "finite"};
    }

    static IndexSet set_union(IndexSet a, IndexSet b) {
        IndexSet r;
        r.name = a.name + "|" + b.name;
        r.member = [a = a.member, b = b.member](std::uint64_t n) { return a(n) || b(n); };
        if (a.cofinite_from && b.cofinite_from)
            r.cofinite_from = std::min(*a.cofinite_from, *b.cofinite_from);
        else if (a.cofinite_from)
            r.cofinite_from = a.cofinite_from;
        else if (b.cofinite_from)
            r.cofinite_from = b.cofinite_from;
        return r;
    }
    static IndexSet set_intersect(IndexSet a, IndexSet b) {
        IndexSet r;
        r.name = a.name + "&" + b.name;
        r.member = [a = a.member, b = b.member](std::uint64_t n) { return a(n) && b(n); };
        if (a.cofinite_from && b.cofinite_from)
            r.cofinite_from = std::max(*a.cofinite_from, *b.cofinite_from);
        return r;
    }
    static IndexSet set_difference(IndexSet a, IndexSet b) {
        IndexSet r;
        r.name = a.name + "\\" + b.name;
        r.member = [a = a.member, b = b.member](std::uint64_t n) { return a(n) && !b(n); };
        return r;
    }
};

/// |M intersect [0,n)| / n as an exact rational.
inline Rational density_prefix(const IndexSet& m, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("density_prefix: n must be >= 1");
    return Rational((long long)m.count_below(n), (long long)n);
}

/// Paired even/odd indices {4^j, 4^j + 1 : j >= 1}; zero density, consecutive
/// pairs starting at even indices.
inline IndexSet paired_powers_set(std::uint64_t base = 4) {
    IndexSet r;
    r.name = "paired_powers_" + std::to_string(base);
    r.claimed_density = Rational(0);
    r.member = [base](std::uint64_t n) {
        if (n < base) return false;
        std::uint64_t p = base;
        while (p <= n) {
            if (n == p || n == p + 1) return true;
            if (p > (UINT64_MAX / base)) break;
            p *= base;
        }
        return false;
    };
    return r;
}

}  // namespace canopy
