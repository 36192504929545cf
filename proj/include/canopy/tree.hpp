#pragma once

#include "canopy/position.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace canopy {

/// A tree over {0..arity-1} represented by its membership predicate.
/// Callers rely on prefix-closure and extensibility; the checkers below
/// validate both by enumeration to a chosen depth.
struct TreeOracle {
    int arity = 2;
    std::function<bool(const Position&)> contains;
    std::string name = "tree";

    /// Available actions at p (the children present in the tree).
    std::vector<int> actions(const Position& p) const {
        std::vector<int> out;
        for (int a = 0; a < arity; ++a)
            if (contains(p.child(a))) out.push_back(a);
        return out;
    }

    Position root() const { return Position::root(arity); }
};

inline TreeOracle complete_tree(int m) {
    TreeOracle t;
    t.arity = m;
    t.name = m == 2 ? "binary" : "madic_" + std::to_string(m);
    t.contains = [](const Position&) { return true; };
    return t;
}

/// Canopy = the all-zero play plus every play starting with 1.
inline TreeOracle zero_ray_or_one_start_tree() {
    TreeOracle t;
    t.arity = 2;
    t.name = "example_5_5";
    t.contains = [](const Position& p) {
        if (p.empty()) return true;
        if (p[0] == 1) return true;
        for (std::size_t i = 0; i < p.len(); ++i)
            if (p[i] != 0) return false;
        return true;
    };
    return t;
}

/// Odd stages are forced to 0: Player II has a single strategy.
inline TreeOracle forced_zero_odd_tree() {
    TreeOracle t;
    t.arity = 2;
    t.name = "example_5_7";
    t.contains = [](const Position& p) {
        for (std::size_t i = 1; i < p.len(); i += 2)
            if (p[i] != 0) return false;
        return true;
    };
    return t;
}

inline std::map<std::string, TreeOracle> make_example_trees() {
    std::map<std::string, TreeOracle> out;
    out["binary"] = complete_tree(2);
    out["ternary"] = complete_tree(3);
    out["quaternary"] = complete_tree(4);
    out["example_5_5"] = zero_ray_or_one_start_tree();
    out["example_5_7"] = forced_zero_odd_tree();
    return out;
}

/// Exhaustive prefix-closure check to the given depth.
inline bool check_prefix_closed(const TreeOracle& t, int depth) {
    std::function<bool(Position&)> go = [&](Position& p) -> bool {
        if ((int)p.len() >= depth) return true;
        for (int a = 0; a < t.arity; ++a) {
            p.push(a);
            bool in = t.contains(p);
            if (in) {
                if (!t.contains(p.prefix(p.len() - 1))) return false;
                if (!go(p)) return false;
            }
            p.pop();
        }
        return true;
    };
    Position p = t.root();
    return t.contains(p) && go(p);
}

/// Exhaustive extensibility check to the given depth: every position of the
/// tree reachable from the root has at least one child.
inline bool check_extensible(const TreeOracle& t, int depth) {
    std::function<bool(Position&)> go = [&](Position& p) -> bool {
        if ((int)p.len() >= depth) return true;
        bool any = false;
        for (int a = 0; a < t.arity; ++a) {
            p.push(a);
            if (t.contains(p)) {
                any = true;
                if (!go(p)) return false;
            }
            p.pop();
        }
        return any;
    };
    Position p = t.root();
    return t.contains(p) && go(p);
}

}  // namespace canopy
