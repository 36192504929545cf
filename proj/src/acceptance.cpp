#include "canopy/acceptance.hpp"

#include "canopy/cantor.hpp"
#include "canopy/flipcoin.hpp"
#include "canopy/game.hpp"
#include "canopy/hausdorff.hpp"
#include "canopy/lifting.hpp"
#include "canopy/schmidt.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace canopy {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

bool within(double x, double target, double tol) { return std::fabs(x - target) <= tol; }

RowResult density_dimension() {
    RowResult r;
    DimensionEstimate thirds = dim_estimate(make_fm(IndexSet::multiples(3)), 9, 45);
    DimensionEstimate halves = dim_estimate(make_fm(IndexSet::odds()), 2, 40);
    bool ok1 = within(thirds.slope, 1.0 / 3.0, 0.02);
    bool ok2 = within(halves.slope, 0.5, 0.02);
    r.pass = ok1 && ok2;
    r.detail = "slope(mult3, 9..45) = " + fmt(thirds.slope) + " vs 1/3 +-0.02; " +
               "slope(odds, 2..40) = " + fmt(halves.slope) + " vs 1/2 +-0.02";
    return r;
}

RowResult half_dim_measure() {
    RowResult r;
    TargetOracle s = make_fm(IndexSet::odds());
    PowerSum cost = measure_estimate(s, Rational(1, 2), 7);
    PowerSum expected = PowerSum::diam_pow(PowerContext::make(2, Rational(1, 2)), 1);
    bool exact = cost == expected;
    bool close = within(cost.to_double(), 0.7071067811865476, 1e-12);
    r.pass = exact && close;
    r.detail = "cover cost = " + cost.str() + " (float " + fmt(cost.to_double()) +
               "), exact-sqrt-half: " + (exact ? "yes" : "no");
    return r;
}

RowResult cantor_dimension() {
    RowResult r;
    DimensionEstimate est = dim_estimate(make_cantor_wc(), 8, 40);
    r.pass = within(est.slope, 0.43067655, 0.03);
    r.detail = "slope(8..40) = " + fmt(est.slope) + " vs log5(2) = 0.43068 +-0.03, residual " +
               fmt(est.residual);
    return r;
}

RowResult coinflip_decay() {
    RowResult r;
    TargetOracle wc = make_cantor_wc();
    PureStrategy follow = follow_strategy(wc);
    const std::uint64_t trials = 100000;
    McCurve curve = mc_flipcoin(wc, follow, 60, trials, 7);
    bool monotone = curve.monotone();
    bool decayed = curve.final_survival() <= 0.01;

    // exactness of the even-cylinder law at depth 8: every consistent
    // cylinder should appear with frequency 2^-4 up to 3 standard errors
    bool freq_ok = true;
    double p = 1.0 / 16.0;
    double se = std::sqrt(p * (1 - p) / (double)trials);
    int consistent = 0;
    for (unsigned idx = 0; idx < 256; ++idx) {
        std::vector<int> sym(8);
        for (int b = 0; b < 8; ++b) sym[(std::size_t)b] = (int)((idx >> (7 - b)) & 1u);
        Position cyl(sym, 2);
        Rational prob = cylinder_probability(cyl, follow);
        double freq = (double)curve.depth8_histogram[idx] / (double)trials;
        if (prob == 0) {
            if (curve.depth8_histogram[idx] != 0) freq_ok = false;
            continue;
        }
        ++consistent;
        if (std::fabs(freq - p) > 3 * se) freq_ok = false;
    }
    r.pass = monotone && decayed && freq_ok && consistent == 16;
    r.detail = "survival(60) = " + fmt(curve.final_survival()) + " <= 0.01, monotone: " +
               (monotone ? "yes" : "no") + ", depth-8 frequencies within 3se: " +
               (freq_ok ? "yes" : "no");
    return r;
}

RowResult dimgame_sandwich() {
    RowResult r;
    SandwichResult thirds = value_sandwich_fm(IndexSet::multiples(3), 3000);
    SandwichResult halves = value_sandwich_fm(IndexSet::odds(), 2000);
    bool ok1 = within(thirds.lower, 1.0 / 3.0, 0.01) && within(thirds.upper, 1.0 / 3.0, 0.01);
    bool ok2 = within(halves.lower, 0.5, 0.01) && within(halves.upper, 0.5, 0.01);
    r.pass = ok1 && ok2;
    r.detail = "mult3@3000: [" + fmt(thirds.lower) + ", " + fmt(thirds.upper) + "] vs 1/3; " +
               "odds@2000: [" + fmt(halves.lower) + ", " + fmt(halves.upper) + "] vs 1/2";
    return r;
}

RowResult packing_lemma() {
    RowResult r;
    r.pass = true;
    std::ostringstream detail;
    for (int d = 1; d <= 3; ++d) {
        PackingLemmaReport rep = verify_packing_lemma(d);
        std::uint64_t want_pack = 1;
        std::uint64_t want_bound = 1;
        for (int i = 0; i < d; ++i) {
            want_pack *= 3;
            want_bound *= 8;
        }
        bool ok = rep.pass && rep.packed_in_triple == want_pack && rep.cube_bound == want_bound &&
                  rep.doubling_witnessed;
        r.pass = r.pass && ok;
        detail << "d=" << d << ": (" << rep.packed_in_triple << ", " << rep.cube_bound << ") "
               << (ok ? "ok" : "FAIL") << "; ";
    }
    r.detail = detail.str();
    return r;
}

RowResult solver_ground_truth() {
    RowResult r;
    TreeOracle binary = complete_tree(2);
    std::ostringstream detail;
    bool ok = true;

    SolveResult a = solve(binary, cylinder_target(binary, Position({0})), 1, TargetStyle::Open);
    ok = ok && a.winner == Winner::PlayerOne;
    SolveResult b = solve(binary, cylinder_target(binary, Position({0, 0})), 2, TargetStyle::Open);
    ok = ok && b.winner == Winner::PlayerTwo;
    SolveResult c = solve(binary, make_fm(IndexSet::odds()), 20, TargetStyle::Closed);
    ok = ok && c.winner == Winner::PlayerOne;
    detail << "cyl<0>@1: " << winner_name(a.winner) << "; cyl<0,0>@2: " << winner_name(b.winner)
           << "; even-zero@20: " << winner_name(c.winner);

    TreeOracle forced = forced_zero_odd_tree();
    SolveResult d = solve(forced, cylinder_target(forced, Position({1, 0})), 4, TargetStyle::Open);
    ok = ok && d.winner == Winner::PlayerOne;
    detail << "; forced-tree nonempty: " << winner_name(d.winner);

    TargetOracle wc = make_cantor_wc();
    SolveResult e = solve_iterative(binary, wc, 32, TargetStyle::Closed);
    bool wc_ok = e.winner == Winner::PlayerTwo;
    bool verified = false;
    if (wc_ok && e.strategy)
        verified = strategy_defeats_truncation(binary, wc, *e.strategy, e.depth,
                                               TargetStyle::Closed);
    ok = ok && wc_ok && verified;
    detail << "; cantor game: " << winner_name(e.winner) << " at depth " << e.depth
           << (verified ? " (strategy verified)" : " (strategy NOT verified)");

    r.pass = ok;
    r.detail = detail.str();
    return r;
}

RowResult spliced_set_dimension() {
    RowResult r;
    Rational delta(3, 4);
    IndexSet n_set = default_wdelta_n();
    IndexSet m_set = default_wdelta_m(delta);
    IndexSet k_set = IndexSet::set_union(IndexSet::odds(), IndexSet::set_union(m_set, n_set));
    IndexSet l_set = IndexSet::set_difference(IndexSet::set_union(IndexSet::odds(), m_set), n_set);

    DimensionEstimate upper = dim_estimate(make_fm(k_set), 16, 48);
    DimensionEstimate lower = dim_estimate(make_fm(l_set), 16, 48);
    bool slopes_ok = within(upper.slope, 0.75, 0.03) && within(lower.slope, 0.75, 0.03);

    TargetOracle w = make_fm(IndexSet::odds());
    TargetOracle wd = make_wdelta(w, {n_set, m_set});
    TargetOracle fk = make_fm(k_set);
    TargetOracle fl = make_fm(l_set);
    bool chain_ok = true;
    std::function<void(Position&)> walk = [&](Position& p) {
        if (!chain_ok || p.len() >= 12) return;
        for (int a = 0; a < 2; ++a) {
            p.push(a);
            bool l_alive = fl.verdict(p) != Verdict::Outside;
            bool wd_alive = wd.verdict(p) != Verdict::Outside;
            bool k_alive = fk.verdict(p) != Verdict::Outside;
            if ((l_alive && !wd_alive) || (wd_alive && !k_alive)) chain_ok = false;
            walk(p);
            p.pop();
        }
    };
    Position p = Position::root(2);
    walk(p);

    r.pass = slopes_ok && chain_ok;
    r.detail = "slope(F_K) = " + fmt(upper.slope) + ", slope(F_L) = " + fmt(lower.slope) +
               " vs 3/4 +-0.03; depth-12 inclusion chain: " + (chain_ok ? "holds" : "BROKEN");
    return r;
}

RowResult strategy_lifting() {
    RowResult r;
    TreeOracle binary = complete_tree(2);
    TargetOracle w_base = cylinder_target(binary, Position({0}));
    IndexSet n_set = default_wdelta_n();
    IndexSet m_set = default_wdelta_m(Rational(3, 4));
    LiftMaps lift = make_lift(n_set, m_set);
    TargetOracle wd = make_wdelta(w_base, {n_set, m_set});

    // all Player I strategies of the base game defined to depth 4: one
    // choice at the root and one at each of the four length-2 positions
    std::vector<Position> len2;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) len2.push_back(Position({a, b}));

    bool ok = true;
    int wins_base = 0;
    for (unsigned code = 0; code < 32 && ok; ++code) {
        int at_root = (int)(code & 1u);
        std::vector<int> at_len2(4);
        for (int i = 0; i < 4; ++i) at_len2[(std::size_t)i] = (int)((code >> (1 + i)) & 1u);
        PureStrategy base;
        base.side = Side::PlayerOne;
        base.choose = [at_root, at_len2, len2](const Position& p) -> int {
            if (p.len() == 0) return at_root;
            for (std::size_t i = 0; i < len2.size(); ++i)
                if (p == len2[i]) return at_len2[i];
            return 0;
        };
        bool base_wins = strategy_wins_truncation(binary, w_base, base, 4, TargetStyle::Closed);
        PureStrategy lifted = lift.expand(base);
        bool lifted_wins = strategy_wins_truncation(binary, wd, lifted, 18, TargetStyle::Closed);
        if (base_wins != lifted_wins) ok = false;

        PureStrategy back = lift.restrict_(lifted);
        if (back(Position::root(2)) != base(Position::root(2))) ok = false;
        for (const Position& q : len2)
            if (back(q) != base(q)) ok = false;
    }
    r.pass = ok;
    r.detail = ok ? "all 32 depth-4 strategies: win iff lifted wins, and restrict(expand(s)) == s"
                  : "lifting equivalence BROKEN";
    return r;
}

RowResult subcanopy_isometry() {
    RowResult r;
    TreeOracle binary = complete_tree(2);
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 5 && ok; ++seed) {
        PureStrategy s1 = seeded_random_strategy(binary, Side::PlayerOne, seed);
        std::vector<Position> fan = strategy_subcanopy(binary, s1, 10);
        if (fan.size() != 32) ok = false;
        for (std::size_t i = 0; i < fan.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < fan.size(); ++j) {
                auto d_raw = metric_distance(fan[i], fan[j]);
                auto d_img = metric_distance(isometry_phi(fan[i], s1), isometry_phi(fan[j], s1));
                if (!d_raw || !d_img || *d_raw != *d_img) {
                    ok = false;
                    break;
                }
            }
        }
    }
    r.pass = ok;
    r.detail = ok ? "5 seeded strategies, all depth-10 subcanopy pairs distance-preserving"
                  : "isometry BROKEN";
    return r;
}

RowResult mass_distribution() {
    RowResult r;
    TargetOracle s = make_fm(IndexSet::multiples(3));
    CylinderMeasure mu = uniform_on(s);
    bool pos = mass_bound_certificate(mu, s, Rational(1, 3), Rational(1), 30);
    bool neg = mass_bound_certificate(mu, s, Rational(2, 5), Rational(1), 30);
    r.pass = pos && !neg;
    r.detail = std::string("delta=1/3, C=1, depth 30: ") + (pos ? "certified" : "FAIL") +
               "; negative control delta=2/5: " + (neg ? "unexpectedly passed" : "rejected");
    return r;
}

RowResult schmidt_thresholds() {
    RowResult r;
    bool ok = true;
    Threshold a = threshold(Rational(1, 4), Rational(1, 4), 4);
    ok = ok && a.exact && *a.exact == Rational(1, 2);
    Threshold b = threshold(Rational(1, 2), Rational(1, 2), 4);
    ok = ok && b.exact && *b.exact == Rational(1);
    for (int m = 2; m <= 3; ++m) {
        for (int d = 1; d <= 3; ++d) {
            std::uint64_t balls = 1;
            for (int i = 0; i < d; ++i) balls *= (std::uint64_t)m;
            Threshold t = threshold(Rational(1, m), Rational(1, m), balls);
            ok = ok && t.exact && *t.exact == Rational(d, 2);
        }
    }

    SchmidtConfig cube = madic_cube_config(2, 2);
    for (std::uint64_t seed = 0; seed < 100 && ok; ++seed) {
        SchmidtTranscript t =
            play_schmidt(cube, pick_seeded(seed), pick_seeded(seed + 1000), 20);
        Rational radius = cube.initial.radius;
        for (std::size_t i = 1; i < t.balls.size(); ++i) {
            Rational rate = (i % 2 == 1) ? cube.alpha : cube.beta;
            radius *= rate;
            if (t.balls[i].radius != radius) ok = false;
            if (!t.balls[i].inside(t.balls[i - 1])) ok = false;
        }
    }

    CollapsedConfig collapsed = collapse_alphabeta(cube);
    for (std::uint64_t seed = 0; seed < 50 && ok; ++seed) {
        CollapsedStrategy pick{[seed](const std::vector<Ball>& flat,
                                      const std::vector<CollapsedMove>& pairs) {
                                   Stream stream(derive_stream(seed, flat.size()));
                                   return (std::size_t)stream.below(pairs.size());
                               },
                               "seeded"};
        CollapsedTranscript t = play_collapsed(collapsed, pick, 10);
        if (!(pack_transcript(unpack_transcript(t)) == t)) ok = false;
    }

    r.pass = ok;
    r.detail = ok ? "thresholds exact (1/2, 1, d/2); 100 transcripts obey the radius/nesting "
                    "laws; 50 collapse round trips are identities"
                  : "schmidt engine law BROKEN";
    return r;
}

}  // namespace

std::vector<AcceptanceRow> acceptance_rows() {
    return {
        {"density-dimension",
         "box-count slope of the zero-off-M sets matches the index density", 20.0,
         density_dimension},
        {"half-dim-measure",
         "optimal exponent-1/2 cover cost of the even-zero set is exactly sqrt(1/2)", 1.0,
         half_dim_measure},
        {"cantor-dimension", "box-count slope of the digit-restricted target is log5(2)", 60.0,
         cantor_dimension},
        {"coinflip-decay",
         "survival against the coin-flip player decays below 1% by depth 60, frequencies exact",
         60.0, coinflip_decay},
        {"dimgame-sandwich",
         "both explicit block-game strategies pin the value at the index density", 5.0,
         dimgame_sandwich},
        {"packing-lemma", "triple-radius packing count is within the cubed doubling constant",
         1.0, packing_lemma},
        {"solver-ground-truth", "backward-induction winners on the reference games", 0.0,
         solver_ground_truth},
        {"spliced-set-dimension",
         "the spliced set of exponent 3/4 is pinched between matching-slope hull sets", 60.0,
         spliced_set_dimension},
        {"strategy-lifting",
         "depth-4 strategies win the base game iff their lifts win the spliced game", 30.0,
         strategy_lifting},
        {"subcanopy-isometry",
         "zeroing even coordinates preserves distances on strategy subcanopies", 1.0,
         subcanopy_isometry},
        {"mass-distribution",
         "the uniform mass certifies exponent 1/3 and rejects exponent 2/5", 5.0,
         mass_distribution},
        {"schmidt-thresholds",
         "winning thresholds are exact and the ball engine obeys its laws", 10.0,
         schmidt_thresholds},
    };
}

MatrixResult run_acceptance(std::ostream& out, const std::string& only, bool use_color) {
    const char* green = use_color ? "\033[32m" : "";
    const char* red = use_color ? "\033[31m" : "";
    const char* reset = use_color ? "\033[0m" : "";
    MatrixResult matrix;
    for (const AcceptanceRow& row : acceptance_rows()) {
        if (!only.empty() && row.key.find(only) == std::string::npos) continue;
        auto t0 = std::chrono::steady_clock::now();
        RowResult res;
        try {
            res = row.run();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        res.seconds = std::chrono::duration<double>(t1 - t0).count();
        bool in_budget = row.budget_seconds <= 0.0 || res.seconds < row.budget_seconds;
        bool pass = res.pass && in_budget;
        out << (pass ? green : red) << (pass ? "[PASS] " : "[FAIL] ") << reset << row.key << " ("
            << fmt(res.seconds) << "s)  " << res.detail;
        if (!in_budget) out << "  [over the " << fmt(row.budget_seconds) << "s budget]";
        out << "\n";
        if (pass)
            ++matrix.passed;
        else
            ++matrix.failed;
    }
    return matrix;
}

}  // namespace canopy
