#pragma once

#include "canopy/ball.hpp"
#include "canopy/indexset.hpp"
#include "canopy/target.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace canopy {

struct IllegalOffer : std::runtime_error {
    explicit IllegalOffer(const std::string& what) : std::runtime_error(what) {}
};

/// One step of the block game: a non-empty set of length-k words offered by
/// Player 1 and the word Player 2 picked from it.
struct DimGameStep {
    std::vector<Position> offer;
    Position pick;
};

/// Transcript of the block game: the block length is fixed at step 0 and
/// every pick is a member of its offer.
struct DimGameTranscript {
    int block = 1;  // k
    int arity = 2;
    std::vector<DimGameStep> steps;

    Position projected_prefix(std::size_t n_steps) const;
    Position projected_prefix() const { return projected_prefix(steps.size()); }
};

/// Concatenation of the picks, in order.
Position project_play(int block, const std::vector<Position>& picks);

struct PayoffRecord {
    bool escaped = false;   // projected prefix went Outside
    double value = 0.0;     // -1 when escaped, else the N-step average
    double last_average = 0.0;
    double running_min_average = 0.0;  // finite-horizon liminf proxy
    std::vector<double> per_step_log;  // log_{m^k} |A_n|
};

/// Finite-horizon payoff: -1 if the projected prefix is Outside, otherwise
/// the average of log_{m^k}|A_n| over the first n_steps offers. Reports the
/// running minimum of the averages alongside the final average.
PayoffRecord payoff_prefix(const DimGameTranscript& t, const TargetOracle& s,
                           std::size_t n_steps);

/// Player 1 strategy: step index and transcript so far to a non-empty offer.
using OfferStrategy = std::function<std::vector<Position>(const DimGameTranscript&)>;
/// Player 2 strategy: transcript and current offer to the picked element.
using PickStrategy =
    std::function<Position(const DimGameTranscript&, const std::vector<Position>&)>;

/// Offer {0,1} at step n iff n is in M, else {0}; block length 1. All offers
/// stay consistent with the zero-off-M target.
OfferStrategy sigma1_fm(const IndexSet& m_set);

/// Pick an offer element whose zero-padded continuation certifiably leaves
/// the target (smallest first); fall back to the smallest element. The probe
/// pads with zeros to probe_depth before asking for a verdict.
PickStrategy sigma2_avoid(const TargetOracle& s, std::size_t probe_depth = 64);

PickStrategy pick_smallest();
OfferStrategy offer_full(int block, int arity = 2);

DimGameTranscript run_dim_game(const OfferStrategy& s1, const PickStrategy& s2,
                               std::size_t steps, int arity = 2);

struct SandwichResult {
    double lower = 0.0;  // guaranteeing strategy against the escaping adversary
    double upper = 0.0;  // best adversarial Player 1 variant against the escaper
    double gap() const { return upper - lower; }
};

/// Runs the explicit pair of strategies for the zero-off-M target from both
/// sides: the offering strategy against the escaping picker (lower arm) and
/// Player 1 variants against the escaping picker (upper arm).
SandwichResult value_sandwich_fm(const IndexSet& m_set, std::size_t steps);

enum class OfferLegality { Disjoint, Separated };

/// A collection of equal-radius coded balls offered in the associated
/// non-overlapping game; separation distance is checked when given.
struct BallOffer {
    std::vector<Ball> balls;
    std::optional<Rational> separation;  // the r_n of the separated variant
};

/// Exact ball arithmetic: pairwise disjoint interiors, or pairwise gaps
/// exceeding the separation radius. Mixed radii in one offer are illegal.
bool check_offer_legality(const BallOffer& offer, OfferLegality mode);

}  // namespace canopy
