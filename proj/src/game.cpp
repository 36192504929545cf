#include "canopy/game.hpp"

#include <algorithm>

namespace canopy {

int BehaviorStrategy::sample(const TreeOracle& tree, const Position& p, Stream& stream) const {
    std::vector<int> acts = tree.actions(p);
    std::vector<Rational> dist = distribution(p);
    if (acts.empty() || dist.size() != acts.size())
        throw std::logic_error("behavior strategy shape mismatch at " + p.str());
    // exact inverse-CDF draw on a common denominator
    BigInt den = 1;
    for (const auto& q : dist) den = boost::multiprecision::lcm(den, denominator(q));
    std::vector<BigInt> weights;
    BigInt total = 0;
    for (const auto& q : dist) {
        BigInt w = numerator(q) * (den / denominator(q));
        weights.push_back(w);
        total += w;
    }
    if (total <= 0) throw std::logic_error("behavior strategy has no mass at " + p.str());
    BigInt draw;
    if (total <= UINT64_MAX) {
        draw = stream.below(total.convert_to<std::uint64_t>());
    } else {
        draw = BigInt(stream.next()) % total;
    }
    BigInt acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (draw < acc) return acts[i];
    }
    return acts.back();
}

PureStrategy seeded_random_strategy(const TreeOracle& tree, Side side, std::uint64_t seed) {
    PureStrategy s;
    s.side = side;
    s.name = "seeded_" + std::to_string(seed);
    s.choose = [tree, seed](const Position& p) {
        std::vector<int> acts = tree.actions(p);
        if (acts.empty()) throw std::logic_error("no available action at " + p.str());
        // keyed by the position so the strategy is a pure function
        std::uint64_t h = seed;
        for (std::size_t i = 0; i < p.len(); ++i) {
            std::uint64_t st = h ^ (0x100000001B3ULL * (std::uint64_t)(p[i] + 1));
            h = splitmix64(st);
        }
        std::uint64_t st2 = h ^ 0x5851F42D4C957F2DULL;
        return acts[splitmix64(st2) % acts.size()];
    };
    return s;
}

BehaviorStrategy coin_flip_strategy(const TreeOracle& tree) {
    BehaviorStrategy b;
    b.side = Side::PlayerTwo;
    b.name = "coin_flip";
    b.distribution = [tree](const Position& p) {
        std::size_t k = tree.actions(p).size();
        if (k == 0) throw std::logic_error("no available action at " + p.str());
        return std::vector<Rational>(k, Rational(1, (long long)k));
    };
    return b;
}

PureStrategy follow_strategy(const TargetOracle& s) {
    PureStrategy st;
    st.side = Side::PlayerOne;
    st.name = "follow[" + s.name + "]";
    auto verdict = s.verdict;
    auto tree = s.tree;
    st.choose = [verdict, tree](const Position& p) {
        std::vector<int> acts = tree.actions(p);
        if (acts.empty()) throw std::logic_error("no available action at " + p.str());
        for (int a : acts)
            if (verdict(p.child(a)) != Verdict::Outside) return a;
        return acts.front();
    };
    return st;
}

PureStrategy avoid_strategy(const TargetOracle& s) {
    PureStrategy st;
    st.side = Side::PlayerTwo;
    st.name = "avoid[" + s.name + "]";
    auto verdict = s.verdict;
    auto tree = s.tree;
    st.choose = [verdict, tree](const Position& p) {
        std::vector<int> acts = tree.actions(p);
        if (acts.empty()) throw std::logic_error("no available action at " + p.str());
        for (int a : acts)
            if (verdict(p.child(a)) == Verdict::Outside) return a;
        return acts.front();
    };
    return st;
}

Position play(const TreeOracle& tree, const PureStrategy& s1, const PureStrategy& s2,
              int depth) {
    Position p = tree.root();
    for (int n = 0; n < depth; ++n) {
        int a = (n % 2 == 0) ? s1(p) : s2(p);
        if (a < 0 || a >= tree.arity || !tree.contains(p.child(a))) throw IllegalMove(p, a);
        p.push(a);
    }
    return p;
}

namespace {

struct Sweep {
    bool pessimistic;  // Player I wins under the leaf payoff counting Boundary against her
    bool optimistic;   // ... counting Boundary for her
};

Sweep sweep(const TreeOracle& tree, const TargetOracle& s, Position& p, int depth_left,
            TargetStyle style) {
    Verdict v = s.verdict(p);
    if (v == Verdict::Outside) return {false, false};
    if (v == Verdict::Inside) return {true, true};
    if (depth_left == 0) {
        // Boundary leaf: under Closed style survival already realises the
        // truncation payoff, under Open style it does not.
        return {style == TargetStyle::Closed, true};
    }
    bool player_one = p.player_one_to_move();
    Sweep acc{!player_one, !player_one};  // OR-identity for I, AND-identity for II
    for (int a : tree.actions(p)) {
        p.push(a);
        Sweep c = sweep(tree, s, p, depth_left - 1, style);
        p.pop();
        if (player_one) {
            acc.pessimistic = acc.pessimistic || c.pessimistic;
            acc.optimistic = acc.optimistic || c.optimistic;
            if (acc.pessimistic) break;  // pessimistic implies optimistic
        } else {
            acc.pessimistic = acc.pessimistic && c.pessimistic;
            acc.optimistic = acc.optimistic && c.optimistic;
            if (!acc.optimistic) break;
        }
    }
    return acc;
}

PureStrategy extract_strategy(const TreeOracle& tree, const TargetOracle& s, int depth,
                              TargetStyle style, Winner winner) {
    PureStrategy st;
    st.side = winner == Winner::PlayerOne ? Side::PlayerOne : Side::PlayerTwo;
    st.name = "extracted";
    bool want_player_one = winner == Winner::PlayerOne;
    st.choose = [tree, s, depth, style, want_player_one](const Position& p) {
        std::vector<int> acts = tree.actions(p);
        if (acts.empty()) throw std::logic_error("no available action at " + p.str());
        int remaining = depth - (int)p.len() - 1;
        if (remaining < 0) return acts.front();
        for (int a : acts) {
            Position c = p.child(a);
            Sweep sw = sweep(tree, s, c, remaining, style);
            if (want_player_one ? sw.pessimistic : !sw.optimistic) return a;
        }
        return acts.front();
    };
    return st;
}

}  // namespace

SolveResult solve(const TreeOracle& tree, const TargetOracle& s, int depth,
                  TargetStyle style) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    Position p = tree.root();
    Sweep sw = sweep(tree, s, p, depth, style);
    SolveResult r;
    r.depth = depth;
    r.style = style;
    if (sw.pessimistic)
        r.winner = Winner::PlayerOne;
    else if (!sw.optimistic)
        r.winner = Winner::PlayerTwo;
    else
        r.winner = Winner::Undecided;
    if (r.winner != Winner::Undecided)
        r.strategy = extract_strategy(tree, s, depth, style, r.winner);
    return r;
}

SolveResult solve_iterative(const TreeOracle& tree, const TargetOracle& s, int cap,
                            TargetStyle style) {
    SolveResult last;
    for (int d = 1; d <= cap; ++d) {
        last = solve(tree, s, d, style);
        if (style == TargetStyle::Closed) {
            if (last.winner == Winner::PlayerTwo) return last;
        } else {
            if (last.winner != Winner::Undecided) return last;
        }
    }
    if (style == TargetStyle::Closed && last.winner == Winner::PlayerOne) {
        // survived to the cap: not a stable claim under Closed semantics
        last.winner = Winner::Undecided;
        last.strategy.reset();
    }
    return last;
}

namespace {

bool wins_rec(const TreeOracle& tree, const TargetOracle& s, const PureStrategy& st,
              bool st_is_player_one, Position& p, int depth_left, TargetStyle style) {
    Verdict v = s.verdict(p);
    if (v == Verdict::Outside) return !st_is_player_one;
    if (v == Verdict::Inside) return st_is_player_one;
    if (depth_left == 0) {
        bool player_one_payoff = style == TargetStyle::Closed;  // survived
        return st_is_player_one ? player_one_payoff : !player_one_payoff;
    }
    bool mover_is_strategy = p.player_one_to_move() == st_is_player_one;
    if (mover_is_strategy) {
        int a = st(p);
        if (!tree.contains(p.child(a))) throw IllegalMove(p, a);
        p.push(a);
        bool r = wins_rec(tree, s, st, st_is_player_one, p, depth_left - 1, style);
        p.pop();
        return r;
    }
    for (int a : tree.actions(p)) {
        p.push(a);
        bool r = wins_rec(tree, s, st, st_is_player_one, p, depth_left - 1, style);
        p.pop();
        if (!r) return false;
    }
    return true;
}

}  // namespace

bool strategy_wins_truncation(const TreeOracle& tree, const TargetOracle& s,
                              const PureStrategy& s1, int depth, TargetStyle style) {
    Position p = tree.root();
    return wins_rec(tree, s, s1, true, p, depth, style);
}

bool strategy_defeats_truncation(const TreeOracle& tree, const TargetOracle& s,
                                 const PureStrategy& s2, int depth, TargetStyle style) {
    Position p = tree.root();
    return wins_rec(tree, s, s2, false, p, depth, style);
}

namespace {

void subcanopy_rec(const TreeOracle& tree, const PureStrategy& s, Position& p, int depth,
                   std::vector<Position>& out) {
    if ((int)p.len() == depth) {
        out.push_back(p);
        return;
    }
    bool strategy_moves = (p.player_one_to_move()) == (s.side == Side::PlayerOne);
    if (strategy_moves) {
        int a = s(p);
        if (!tree.contains(p.child(a))) throw IllegalMove(p, a);
        p.push(a);
        subcanopy_rec(tree, s, p, depth, out);
        p.pop();
    } else {
        for (int a : tree.actions(p)) {
            p.push(a);
            subcanopy_rec(tree, s, p, depth, out);
            p.pop();
        }
    }
}

}  // namespace

std::vector<Position> strategy_subcanopy(const TreeOracle& tree, const PureStrategy& s,
                                         int depth) {
    std::vector<Position> out;
    Position p = tree.root();
    subcanopy_rec(tree, s, p, depth, out);
    return out;
}

CriterionVerdict monotone_criterion(double xi_w, double threshold, bool borel_or_regular) {
    if (xi_w < 0 || threshold < 0) throw std::invalid_argument("sizes must be >= 0");
    CriterionVerdict v;
    if (xi_w < threshold) {
        v.player_one_excluded = true;
        v.player_two_wins = borel_or_regular;
        v.text = borel_or_regular
                     ? "player one has no winning strategy; player two has one"
                     : "player one has no winning strategy";
    } else {
        v.text = "criterion inconclusive: size not below the threshold";
    }
    return v;
}

}  // namespace canopy
