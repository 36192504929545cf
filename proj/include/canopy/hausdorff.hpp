#pragma once

#include "canopy/algebraic.hpp"
#include "canopy/target.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace canopy {

/// Number of depth-n positions with verdict != Outside. Uses the oracle's
/// exact survivor counter when it has one, otherwise a pruned traversal.
std::uint64_t box_count(const TargetOracle& s, int depth);

/// Survivor counts for every depth 0..max_depth in one pruned traversal.
std::vector<std::uint64_t> box_counts_range(const TargetOracle& s, int max_depth);

struct DimensionEstimate {
    std::vector<std::uint64_t> counts;  // N_n for n in [n_min, n_max]
    int n_min = 0, n_max = 0;
    double slope = 0.0;     // least-squares slope of log_m N_n against n
    double residual = 0.0;  // rms deviation from the fit
    bool counts_monotone = true;
    bool submultiplicative = true;
    bool endpoints_only = false;
};

struct EmptyTargetError : std::runtime_error {
    EmptyTargetError() : std::runtime_error("target set is empty at the requested depth") {}
};

DimensionEstimate dim_estimate(const TargetOracle& s, int n_min, int n_max,
                               bool endpoints_only = false);

/// Cost of the optimal mixed-depth cylinder cover: inf over antichains with
/// leaves at depth <= max_depth of sum diam^delta, computed exactly by
/// cost(p) = min(diam(p)^delta, sum over children), with Outside cylinders
/// free and depth-capped leaves paying diam^delta.
PowerSum measure_estimate(const TargetOracle& s, const Rational& delta, int max_depth);

/// A finitely-additive mass on prefix cylinders, total mass 1 at the root.
struct CylinderMeasure {
    std::function<Rational(const Position&)> mass;
    std::string name = "measure";
};

/// Splits mass equally among the non-Outside children at every step.
CylinderMeasure uniform_on(const TargetOracle& s);

/// True iff mass(cyl) <= bound * diam(cyl)^delta for every non-Outside
/// cylinder to the given depth (the checks are exact: both sides are raised
/// to the denominator of delta).
bool mass_bound_certificate(const CylinderMeasure& mu, const TargetOracle& s,
                            const Rational& delta, const Rational& bound, int depth);

/// Max number of closed l-infinity balls of radius r with pairwise disjoint
/// interiors inside a closed ball of radius big_r: floor(big_r/r)^d.
std::uint64_t packing_number_linf(int dim, const Rational& big_r, const Rational& r);

struct PackingLemmaReport {
    int dim = 0;
    std::uint64_t packed_in_triple = 0;   // N^pack_r of a radius-3r ball
    std::uint64_t cube_bound = 0;         // D^3 with D = 2^d
    bool pass = false;
    bool doubling_witnessed = false;      // explicit half-radius cover checked
};

PackingLemmaReport verify_packing_lemma(int dim);

}  // namespace canopy
