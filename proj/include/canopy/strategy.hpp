#pragma once

#include "canopy/rng.hpp"
#include "canopy/target.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace canopy {

enum class Side { PlayerOne, PlayerTwo };

struct IllegalMove : std::runtime_error {
    Position at;
    int action;
    IllegalMove(Position p, int a)
        : std::runtime_error("illegal move " + std::to_string(a) + " at " + p.str()),
          at(std::move(p)),
          action(a) {}
};

/// Deterministic choice of an available action at positions of one parity
/// (even length for Player I, odd for Player II).
struct PureStrategy {
    Side side = Side::PlayerOne;
    std::function<int(const Position&)> choose;
    std::string name = "strategy";

    int operator()(const Position& p) const { return choose(p); }
};

/// Probability vector over the available actions, indexed like
/// tree.actions(p).
struct BehaviorStrategy {
    Side side = Side::PlayerTwo;
    std::function<std::vector<Rational>(const Position&)> distribution;
    std::string name = "behavior";

    int sample(const TreeOracle& tree, const Position& p, Stream& stream) const;
};

inline PureStrategy constant_strategy(Side side, int action) {
    return {side, [action](const Position&) { return action; },
            "always_" + std::to_string(action)};
}

PureStrategy seeded_random_strategy(const TreeOracle& tree, Side side, std::uint64_t seed);

/// Uniform over the available actions at every position of odd length; on a
/// forced move the single action gets probability 1.
BehaviorStrategy coin_flip_strategy(const TreeOracle& tree);

/// Player I: keep the verdict out of Outside if possible, smallest action
/// first. Falls back to the smallest available action.
PureStrategy follow_strategy(const TargetOracle& s);

/// Player II: force Outside when some action does, smallest action first.
PureStrategy avoid_strategy(const TargetOracle& s);

}  // namespace canopy
