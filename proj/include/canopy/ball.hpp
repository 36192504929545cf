#pragma once

#include "canopy/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace canopy {

/// A closed l-infinity ball: center coordinates and radius, all exact.
struct Ball {
    std::vector<Rational> center;
    Rational radius;

    int dim() const { return (int)center.size(); }

    /// max_i |c_i - o.c_i|
    Rational center_distance(const Ball& o) const {
        Rational best(0);
        for (std::size_t i = 0; i < center.size(); ++i) {
            Rational d = center[i] - o.center[i];
            if (d < 0) d = -d;
            if (d > best) best = d;
        }
        return best;
    }

    /// this contained in o, exact: |c - c'|_inf <= r' - r.
    bool inside(const Ball& o) const {
        if (dim() != o.dim()) return false;
        return center_distance(o) <= o.radius - radius;
    }

    bool interior_disjoint(const Ball& o) const {
        return center_distance(o) >= radius + o.radius;
    }

    /// inf distance between the two closed balls (0 when they meet).
    Rational gap(const Ball& o) const {
        Rational g = center_distance(o) - radius - o.radius;
        return g > 0 ? g : Rational(0);
    }

    Rational axis_lo(int i) const { return center[(std::size_t)i] - radius; }
    Rational axis_hi(int i) const { return center[(std::size_t)i] + radius; }

    std::string str() const {
        std::string out = "B(";
        for (std::size_t i = 0; i < center.size(); ++i) {
            if (i) out += ",";
            out += rat_to_string(center[i]);
        }
        return out + "; " + rat_to_string(radius) + ")";
    }

    bool operator==(const Ball& o) const { return center == o.center && radius == o.radius; }
};

inline Ball interval_ball(const Rational& lo, const Rational& hi) {
    return Ball{{(lo + hi) / 2}, (hi - lo) / 2};
}

/// Half-open lattice cube m^{-level} * ([0,1)^d + offset); its closure is an
/// l-infinity ball of radius m^{-level}/2.
struct MAdicCube {
    int base = 2;
    long long level = 0;
    std::vector<long long> offset;  // one entry per axis

    int dim() const { return (int)offset.size(); }

    Rational side() const { return pow_rat(Rational(base), -level); }

    Ball closure() const {
        Ball b;
        Rational s = side();
        for (long long o : offset) b.center.push_back(s * Rational(2 * o + 1, 2));
        b.radius = s / 2;
        return b;
    }

    /// The base^d cubes of the next level that partition this one.
    std::vector<MAdicCube> children() const {
        std::vector<MAdicCube> out;
        int d = dim();
        std::vector<long long> idx((std::size_t)d, 0);
        while (true) {
            MAdicCube c;
            c.base = base;
            c.level = level + 1;
            for (int i = 0; i < d; ++i)
                c.offset.push_back(offset[(std::size_t)i] * base + idx[(std::size_t)i]);
            out.push_back(std::move(c));
            int axis = 0;
            while (axis < d) {
                if (++idx[(std::size_t)axis] < base) break;
                idx[(std::size_t)axis] = 0;
                ++axis;
            }
            if (axis == d) break;
        }
        return out;
    }

    bool operator==(const MAdicCube& o) const {
        return base == o.base && level == o.level && offset == o.offset;
    }
};

inline MAdicCube unit_cube(int base, int dim) {
    MAdicCube c;
    c.base = base;
    c.offset.assign((std::size_t)dim, 0);
    return c;
}

inline std::vector<MAdicCube> madic_children(const MAdicCube& c) { return c.children(); }

}  // namespace canopy
