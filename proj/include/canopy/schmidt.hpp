#pragma once

#include "canopy/ball.hpp"
#include "canopy/dimgame.hpp"
#include "canopy/position.hpp"
#include "canopy/rng.hpp"
#include "canopy/target.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace canopy {

struct IllegalBallMove : std::runtime_error {
    explicit IllegalBallMove(const std::string& constraint)
        : std::runtime_error("illegal ball move: " + constraint) {}
};

struct DegenerateCollection : std::runtime_error {
    DegenerateCollection() : std::runtime_error("admissible collection is empty") {}
};

/// Dyadic interval coded by a binary position.
Ball coding_interval(const Position& p);
/// Tetradic interval coded by a quaternary position.
Ball coding_quaternary_interval(const Position& p);
/// Dyadic square coded by a quaternary position: low bits drive the x axis,
/// high bits the y axis.
Ball coding_square(const Position& p);

/// A nested-ball game with fixed shrink rates: Player I scales the radius by
/// alpha on even stages, Player II by beta on odd stages, each choosing from
/// the admissible collection of the current history. The opening ball is
/// Player II's stage -1 choice, fixed by the config (the engine's dummy
/// stage for Player I is implicit in that convention).
struct SchmidtConfig {
    Rational alpha{1, 2};
    Rational beta{1, 2};
    Ball initial;
    std::function<std::vector<Ball>(const std::vector<Ball>&)> admissible;
    std::string name = "schmidt";
    int cube_base = 2;  // lattice base of the admissible children
};

/// The m-adic cube intersection game on [0,1]^d: admissible moves are the
/// m^d next-level cube closures inside the current cube; rates 1/m, 1/m.
SchmidtConfig madic_cube_config(int base, int dim);
/// Interval nesting game in the given base (the d = 1 cube game).
SchmidtConfig interval_config(int base);

struct SchmidtStrategy {
    std::function<std::size_t(const std::vector<Ball>&, const std::vector<Ball>&)> pick;
    std::string name = "schmidt_strategy";
};

SchmidtStrategy pick_first();
SchmidtStrategy pick_last();
SchmidtStrategy pick_seeded(std::uint64_t seed);

/// Classification of a ball against a target region of the model space.
using BallRegion = std::function<Verdict(const Ball&)>;

/// The digit-restricted base-5 set as a region of [0,1].
BallRegion cantor_region(int max_digits = 64);

SchmidtStrategy pick_follow_region(BallRegion region);
SchmidtStrategy pick_avoid_region(BallRegion region);

struct SchmidtTranscript {
    std::vector<Ball> balls;        // B_{-1}, B_0, B_1, ...
    std::vector<Verdict> verdicts;  // same indexing, when a region was given
};

SchmidtTranscript play_schmidt(const SchmidtConfig& config, const SchmidtStrategy& s1,
                               const SchmidtStrategy& s2, int steps,
                               const BallRegion* region = nullptr);

struct PointEnclosure {
    std::vector<Rational> center;
    Rational radius;
};

/// Center and enclosure radius of the intersection of a nested ball run.
PointEnclosure project_point(const std::vector<Ball>& balls);

/// One move of the collapsed game: the temporary ball (the original Player I
/// choice) followed by the final ball (the original Player II reply).
struct CollapsedMove {
    Ball temp;
    Ball final;
    bool operator==(const CollapsedMove& o) const { return temp == o.temp && final == o.final; }
};

struct CollapsedTranscript {
    Ball initial;
    std::vector<CollapsedMove> moves;
    bool operator==(const CollapsedTranscript& o) const {
        return initial == o.initial && moves == o.moves;
    }
};

/// The (alpha*beta, alpha*beta) bundling of a config: one composite move is
/// an admissible temporary ball followed by an admissible final ball.
struct CollapsedConfig {
    SchmidtConfig base;
    Rational rate() const { return base.alpha * base.beta; }
    std::vector<CollapsedMove> admissible_pairs(const std::vector<Ball>& flat) const;
};

CollapsedConfig collapse_alphabeta(const SchmidtConfig& config);

struct CollapsedStrategy {
    std::function<std::size_t(const std::vector<Ball>&, const std::vector<CollapsedMove>&)> pick;
    std::string name = "collapsed_strategy";
};

CollapsedTranscript play_collapsed(const CollapsedConfig& config, const CollapsedStrategy& s,
                                   int steps);

/// Flatten a collapsed transcript into a legal nested ball sequence of the
/// original game, and back. pack(unpack(t)) == t and unpack(pack(b)) == b.
std::vector<Ball> unpack_transcript(const CollapsedTranscript& t);
CollapsedTranscript pack_transcript(const std::vector<Ball>& flat);

struct Threshold {
    std::optional<Rational> exact;
    double value = 0.0;
};

/// log base (alpha*beta)^-1 of ball_count, exact when the two quantities are
/// powers of a common base.
Threshold threshold(const Rational& alpha, const Rational& beta, std::uint64_t ball_count);

struct HypothesisReport {
    bool ok = true;
    std::uint64_t positions_checked = 0;
    bool exhaustive = true;
    std::vector<Ball> witness;  // a disjoint family at the first checked position
    std::string failure;
};

/// At every history where Player II moves next (up to the depth), some
/// ball_count admissible balls have pairwise disjoint interiors. Exhaustive
/// within the node budget, seeded sampling beyond it.
HypothesisReport check_m_balls_hypothesis(const SchmidtConfig& config,
                                          std::uint64_t ball_count, int depth,
                                          std::uint64_t budget = 20000,
                                          std::uint64_t seed = 1);

struct StructuralReport {
    bool countable_cover_ok = false;
    std::string cover_witness;
    bool l_colored_ok = false;
    int colors = 0;  // L
    int levels_checked = 0;
};

/// Countable-covering and L-colored checks for lattice configs: the cube
/// family is the countable cover witness, and offset classes mod 2 (mod 4
/// when the base is 2) per axis give the separated coloring, verified
/// exactly at each level.
StructuralReport structural_checks(const SchmidtConfig& config, int depth);

// ---- associated non-overlapping dimension game ---------------------------

struct AssociatedStep {
    std::vector<Ball> offer;
    std::size_t picked = 0;
};

struct AssociatedTranscript {
    Rational initial_radius;
    Rational step_rate;  // offered radius at step n is initial * rate^(n+1)
    std::vector<AssociatedStep> steps;
};

using AssociatedOffer = std::function<std::vector<Ball>(const std::vector<Ball>&)>;
using AssociatedPick = std::function<std::size_t(const std::vector<Ball>&)>;

/// Play the dimension game associated with a collapsed config: every offer
/// must be a same-radius collection passing the legality mode; the separated
/// variant uses the offered radius as the separation distance.
AssociatedTranscript run_associated_game(const CollapsedConfig& config,
                                         const AssociatedOffer& s1, const AssociatedPick& s2,
                                         int steps, OfferLegality mode);

/// The offer side of the construction that turns a Player I strategy of the
/// ball game into a dimension-game strategy: play the temporary ball the
/// strategy would play, then offer a maximal pairwise-disjoint collection of
/// admissible replies.
AssociatedOffer associated_offer_from_strategy(const CollapsedConfig& config,
                                               const SchmidtStrategy& s1);

/// Average of log base rate^-1 of the offer sizes.
double associated_average_log(const AssociatedTranscript& t);

}  // namespace canopy
