#pragma once

#include "canopy/strategy.hpp"

#include <optional>

namespace canopy {

/// Truncation semantics for finite-depth solving. A Closed target is the
/// set of plays that never hit an Outside cylinder, so Player I wins a
/// depth-d truncation by keeping the verdict out of Outside; an Open target
/// must be certified, so Player I wins only by forcing Inside.
enum class TargetStyle { Closed, Open };

enum class Winner { PlayerOne, PlayerTwo, Undecided };

inline const char* winner_name(Winner w) {
    switch (w) {
        case Winner::PlayerOne: return "player_one";
        case Winner::PlayerTwo: return "player_two";
        default: return "undecided_at_depth";
    }
}

struct SolveResult {
    Winner winner = Winner::Undecided;
    int depth = 0;  // the depth this verdict refers to
    TargetStyle style = TargetStyle::Closed;
    /// Winning strategy to the deciding depth, when a winner was found.
    std::optional<PureStrategy> strategy;
};

/// The prefix of the play <s_I, s_II> of the given length.
Position play(const TreeOracle& tree, const PureStrategy& s1, const PureStrategy& s2,
              int depth);

/// Three-valued backward induction at a fixed depth. Player II's win claims
/// (she forces Outside) hold for every deeper horizon; Player I's claims are
/// keep-alive truncation claims under Closed style and forced-Inside claims
/// under Open style.
SolveResult solve(const TreeOracle& tree, const TargetOracle& s, int depth,
                  TargetStyle style);

/// Deepen until the stable claim appears: Player II under Closed style, any
/// decided winner under Open style. Returns the Undecided cap result when
/// the cap is reached first.
SolveResult solve_iterative(const TreeOracle& tree, const TargetOracle& s, int cap,
                            TargetStyle style);

/// Does s1 (Player I) win the depth-truncated game against every opponent
/// line? Exhaustive.
bool strategy_wins_truncation(const TreeOracle& tree, const TargetOracle& s,
                              const PureStrategy& s1, int depth, TargetStyle style);

/// Dually for Player II: she wins iff every Player I line is lost for I.
bool strategy_defeats_truncation(const TreeOracle& tree, const TargetOracle& s,
                                 const PureStrategy& s2, int depth, TargetStyle style);

/// All positions of the given length reachable when one side plays s;
/// enumeration is lexicographic in the opponent's moves.
std::vector<Position> strategy_subcanopy(const TreeOracle& tree, const PureStrategy& s,
                                         int depth);

struct CriterionVerdict {
    bool player_one_excluded = false;  // Player I has no winning strategy
    bool player_two_wins = false;
    std::string text;
};

/// The monotone size-criterion rule: xi(W) < t excludes a winning strategy
/// for Player I; with Borel targets or a Borel-regular xi, Player II wins.
CriterionVerdict monotone_criterion(double xi_w, double threshold, bool borel_or_regular);

}  // namespace canopy
