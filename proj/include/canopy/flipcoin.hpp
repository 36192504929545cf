#pragma once

#include "canopy/game.hpp"

#include <cstdint>
#include <vector>

namespace canopy {

struct NotInSubcanopy : std::runtime_error {
    explicit NotInSubcanopy(const Position& p)
        : std::runtime_error("position not consistent with the strategy: " + p.str()) {}
};

/// Distance-preserving map from the subcanopy of a Player I strategy onto
/// the even-coordinates-zero set: zero out the even coordinates.
Position isometry_phi(const Position& x, const PureStrategy& s1);

/// P_{s1, uniform}(cylinder below p) on the complete binary tree: 0 when p
/// contradicts s1 at an even index, 2^(-len/2) otherwise. len(p) must be
/// even.
Rational cylinder_probability(const Position& p, const PureStrategy& s1);

/// Even-length position p with both prefixes inside the cylinder below p and
/// diam(cylinder) <= 2 * d(x, y).
Position enclosing_even_cylinder(const Position& x, const Position& y);

struct McCurve {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int depth = 0;
    /// survivors[d] = number of trials whose depth-d prefix is not Outside.
    std::vector<std::uint64_t> survivors;
    /// depth-8 prefix histogram keyed by play bits (for frequency checks).
    std::vector<std::uint64_t> depth8_histogram;

    double survival(int d) const {
        return trials ? (double)survivors[(std::size_t)d] / (double)trials : 0.0;
    }
    double final_survival() const { return survival(depth); }
    bool monotone() const {
        for (std::size_t i = 0; i + 1 < survivors.size(); ++i)
            if (survivors[i + 1] > survivors[i]) return false;
        return true;
    }
};

/// Monte Carlo survival of plays of s1 against the coin-flip Player II:
/// the share of sampled plays whose depth-d prefix is not yet Outside, per
/// depth. Trial i draws from the stream derived from (seed, i).
McCurve mc_flipcoin(const TargetOracle& s, const PureStrategy& s1, int depth,
                    std::uint64_t trials, std::uint64_t seed);

}  // namespace canopy
