#pragma once

#include "canopy/indexset.hpp"
#include "canopy/position.hpp"
#include "canopy/tree.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace canopy {

/// Tri-state classification of the cylinder below a position against a
/// target set: Inside means the whole cylinder is contained in the target,
/// Outside means it is disjoint, Boundary means undecided at this prefix.
enum class Verdict { Inside, Outside, Boundary };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Inside: return "inside";
        case Verdict::Outside: return "outside";
        default: return "boundary";
    }
}

/// A subset of the canopy represented by what finite prefixes decide.
/// Verdicts must be refinement-monotone: once Inside or Outside, all
/// extensions agree. survivor_count, when set, gives the exact number of
/// depth-n positions with verdict != Outside without traversal.
struct TargetOracle {
    TreeOracle tree;
    std::function<Verdict(const Position&)> verdict;
    std::function<std::optional<std::uint64_t>(int)> survivor_count;  // may be null
    std::string name = "target";
};

inline TargetOracle full_canopy(TreeOracle tree) {
    TargetOracle s;
    s.tree = std::move(tree);
    s.name = "full";
    s.verdict = [](const Position&) { return Verdict::Inside; };
    return s;
}

/// The cylinder below q as a (clopen) target.
inline TargetOracle cylinder_target(TreeOracle tree, Position q) {
    TargetOracle s;
    s.tree = std::move(tree);
    s.name = "cylinder" + q.str();
    s.verdict = [q = std::move(q)](const Position& p) {
        if (q.prefix_of(p)) return Verdict::Inside;
        if (p.prefix_of(q)) return Verdict::Boundary;
        return Verdict::Outside;
    };
    return s;
}

/// Plays whose coordinates vanish outside M. Outside as soon as some i not
/// in M carries a nonzero symbol. Inside only when M certifies cofinite
/// containment of [len(p), inf); otherwise Boundary forever on consistent
/// prefixes.
inline TargetOracle make_fm(IndexSet m_set, int arity = 2) {
    TargetOracle s;
    s.tree = complete_tree(arity);
    s.name = "F[" + m_set.name + "]";
    auto member = m_set.member;
    auto cof = m_set.cofinite_from;
    s.verdict = [member, cof](const Position& p) {
        for (std::size_t i = 0; i < p.len(); ++i)
            if (p[i] != 0 && !member(i)) return Verdict::Outside;
        if (cof && *cof <= p.len()) return Verdict::Inside;
        return Verdict::Boundary;
    };
    s.survivor_count = [m_set, arity](int n) -> std::optional<std::uint64_t> {
        std::uint64_t free = m_set.count_below((std::uint64_t)n);
        long double bits = (long double)free * std::log2((long double)arity);
        if (bits > 62.0L) return std::nullopt;
        std::uint64_t c = 1;
        for (std::uint64_t i = 0; i < free; ++i) c *= (std::uint64_t)arity;
        return c;
    };
    return s;
}

/// The one-play target {<0,0,...>}.
inline TargetOracle singleton_zero(int arity = 2) {
    TargetOracle s = make_fm(IndexSet::empty(), arity);
    s.name = "F[empty]";
    return s;
}

struct WdeltaParams {
    IndexSet n_set;               // paired even/odd indices of zero density
    IndexSet m_set;               // even indices, disjoint from N
    std::uint64_t validate_horizon = 4096;
};

/// Enumerate both sets up to the horizon and check the structural laws:
/// N pairs an even index with its successor, M is even and disjoint from N.
/// Throws on violation.
void validate_splice_sets(const IndexSet& n_set, const IndexSet& m_set,
                          std::uint64_t horizon);

/// Splice of a target W onto the coordinates in N, with zeros forced on
/// even coordinates outside M and N. Construction validates the structural
/// constraints on N and M by enumeration up to validate_horizon.
TargetOracle make_wdelta(TargetOracle w, const WdeltaParams& params);

/// Module defaults for the splice: N = {4^j, 4^j+1 : j>=1} and M an even
/// set of density delta - 1/2 disjoint from N.
IndexSet default_wdelta_n();
IndexSet default_wdelta_m(const Rational& delta);

/// Exhaustive refinement-monotonicity check to the given depth.
inline bool check_refinement_monotone(const TargetOracle& s, int depth) {
    std::function<bool(Position&, Verdict)> go = [&](Position& p, Verdict vp) -> bool {
        if ((int)p.len() >= depth) return true;
        for (int a : s.tree.actions(p)) {
            p.push(a);
            Verdict vc = s.verdict(p);
            if (vp != Verdict::Boundary && vc != vp) return false;
            if (!go(p, vc)) return false;
            p.pop();
        }
        return true;
    };
    Position p = s.tree.root();
    return go(p, s.verdict(p));
}

}  // namespace canopy
