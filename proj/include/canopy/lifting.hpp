#pragma once

#include "canopy/game.hpp"
#include "canopy/indexset.hpp"

namespace canopy {

/// Strategy transport between the base game and its spliced version. expand
/// turns a base-game Player I strategy into one for the spliced game: play 0
/// at every even stage outside N, and consult the base strategy on the
/// subsequence of coordinates in N. restrict extracts the base strategy back
/// (normalising the off-N behavior to zero first).
struct LiftMaps {
    IndexSet n_set;
    IndexSet m_set;

    PureStrategy expand(const PureStrategy& base) const;
    PureStrategy restrict_(const PureStrategy& spliced) const;
};

LiftMaps make_lift(IndexSet n_set, IndexSet m_set, std::uint64_t validate_horizon = 4096);

}  // namespace canopy
