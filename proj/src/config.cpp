#include "canopy/config.hpp"

#include "canopy/cantor.hpp"
#include "canopy/flipcoin.hpp"
#include "canopy/hausdorff.hpp"
#include "canopy/lifting.hpp"

#include <chrono>

namespace canopy {

const char* kLibraryVersion = "0.1.0";

namespace {

Rational rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational((long long)j.get<std::int64_t>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw ConfigError("expected an integer or a \"p/q\" string, got " + j.dump());
}

[[noreturn]] void unknown_key(const std::string& what, const std::string& key) {
    throw ConfigError("unknown " + what + ": \"" + key + "\"");
}

}  // namespace

IndexSet index_set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ConfigError("index set needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "empty") return IndexSet::empty();
    if (kind == "all") return IndexSet::all();
    if (kind == "odds") return IndexSet::odds();
    if (kind == "evens") return IndexSet::evens();
    if (kind == "multiples") return IndexSet::multiples(j.at("of").get<std::uint64_t>());
    if (kind == "mod")
        return IndexSet::residue(j.at("r").get<std::uint64_t>(), j.at("m").get<std::uint64_t>());
    if (kind == "list") return IndexSet::finite(j.at("values").get<std::vector<std::uint64_t>>());
    if (kind == "paired_powers") return paired_powers_set(j.value("base", 4));
    if (kind == "wdelta_default_N") return default_wdelta_n();
    if (kind == "wdelta_default_M") return default_wdelta_m(rat_from_json(j.at("delta")));
    if (kind == "union") {
        auto parts = j.at("of");
        if (!parts.is_array() || parts.empty()) throw ConfigError("union needs parts");
        IndexSet acc = index_set_from_json(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i)
            acc = IndexSet::set_union(acc, index_set_from_json(parts[i]));
        return acc;
    }
    unknown_key("index set kind", kind);
}

TreeOracle tree_from_json(const Json& j) {
    std::string name = j.is_string() ? j.get<std::string>() : j.at("tree").get<std::string>();
    if (name == "binary") return complete_tree(2);
    if (name == "madic") return complete_tree(j.at("m").get<int>());
    if (name == "example_5_5") return zero_ray_or_one_start_tree();
    if (name == "example_5_7") return forced_zero_odd_tree();
    unknown_key("tree", name);
}

TargetOracle target_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("set")) throw ConfigError("target needs a set");
    std::string name = j.at("set").get<std::string>();
    int arity = j.value("arity", 2);
    if (name == "F_M") return make_fm(index_set_from_json(j.at("M")), arity);
    if (name == "F_empty") return singleton_zero(arity);
    if (name == "full") {
        TreeOracle t = j.contains("tree") ? tree_from_json(j.at("tree")) : complete_tree(arity);
        return full_canopy(t);
    }
    if (name == "cylinder") {
        TreeOracle t = j.contains("tree") ? tree_from_json(j.at("tree")) : complete_tree(arity);
        Position q(j.at("prefix").get<std::vector<int>>(), t.arity);
        return cylinder_target(t, q);
    }
    if (name == "cantor_WC") return make_cantor_wc(j.value("max_digits", 64));
    if (name == "W_delta") {
        TargetOracle w = target_from_json(j.at("W"));
        WdeltaParams params;
        params.n_set = j.contains("N") ? index_set_from_json(j.at("N")) : default_wdelta_n();
        params.m_set = j.contains("M") ? index_set_from_json(j.at("M"))
                                       : default_wdelta_m(rat_from_json(j.at("delta")));
        return make_wdelta(w, params);
    }
    unknown_key("set", name);
}

SchmidtConfig schmidt_from_json(const Json& j) {
    std::string model = j.value("model", "madic");
    if (model == "madic") return madic_cube_config(j.value("m", 2), j.value("d", 1));
    if (model == "interval2") return interval_config(2);
    if (model == "interval4") return interval_config(4);
    if (model == "square") return madic_cube_config(2, 2);
    unknown_key("schmidt model", model);
}

Json ball_to_json(const Ball& b) {
    Json centers = Json::array();
    for (const auto& c : b.center) centers.push_back(rat_to_string(c));
    return Json{{"center", centers}, {"radius", rat_to_string(b.radius)}};
}

namespace {

PureStrategy player_one_from_name(const std::string& name, const TargetOracle& s,
                                  std::uint64_t seed) {
    if (name == "follow") return follow_strategy(s);
    if (name == "zero") return constant_strategy(Side::PlayerOne, 0);
    if (name == "one") return constant_strategy(Side::PlayerOne, 1);
    if (name == "seeded") return seeded_random_strategy(s.tree, Side::PlayerOne, seed);
    unknown_key("player one strategy", name);
}

SchmidtStrategy schmidt_strategy_from_name(const std::string& name, std::uint64_t seed,
                                           const BallRegion* region) {
    if (name == "first") return pick_first();
    if (name == "last") return pick_last();
    if (name == "seeded") return pick_seeded(seed);
    if (name == "follow" && region) return pick_follow_region(*region);
    if (name == "avoid" && region) return pick_avoid_region(*region);
    unknown_key("schmidt strategy", name);
}

Json results_estimate_dim(const Json& config) {
    TargetOracle s = target_from_json(config);
    auto depths = config.at("depths").get<std::vector<int>>();
    if (depths.size() != 2) throw ConfigError("depths must be [n_min, n_max]");
    DimensionEstimate est =
        dim_estimate(s, depths[0], depths[1], config.value("endpoints_only", false));
    Json counts = Json::array();
    for (auto c : est.counts) counts.push_back(c);
    return Json{{"counts", counts},
                {"slope", est.slope},
                {"residual", est.residual},
                {"n_min", est.n_min},
                {"n_max", est.n_max},
                {"monotone", est.counts_monotone},
                {"submultiplicative", est.submultiplicative}};
}

Json results_measure(const Json& config) {
    TargetOracle s = target_from_json(config);
    Rational delta = rat_from_json(config.at("delta"));
    int depth = config.at("depth").get<int>();
    PowerSum cost = measure_estimate(s, delta, depth);
    return Json{{"exact", cost.str()},
                {"float", cost.to_double()},
                {"is_rational", cost.is_rational()},
                {"depth", depth},
                {"delta", rat_to_string(delta)}};
}

Json results_solve(const Json& config) {
    TargetOracle s = target_from_json(config);
    TreeOracle tree = config.contains("tree") ? tree_from_json(config.at("tree")) : s.tree;
    std::string style_name = config.value("style", "closed");
    TargetStyle style = style_name == "open" ? TargetStyle::Open : TargetStyle::Closed;
    SolveResult r;
    bool iterative = config.value("iterative", false);
    if (iterative)
        r = solve_iterative(tree, s, config.value("cap", 32), style);
    else
        r = solve(tree, s, config.at("depth").get<int>(), style);
    bool verified = false;
    if (r.strategy) {
        if (r.winner == Winner::PlayerOne)
            verified = strategy_wins_truncation(tree, s, *r.strategy, r.depth, style);
        else if (r.winner == Winner::PlayerTwo)
            verified = strategy_defeats_truncation(tree, s, *r.strategy, r.depth, style);
    }
    return Json{{"winner", winner_name(r.winner)},
                {"depth", r.depth},
                {"style", style_name},
                {"iterative", iterative},
                {"strategy_verified", verified}};
}

Json results_dimgame(const Json& config, std::uint64_t seed) {
    std::string mode = config.value("mode", "run");
    std::size_t steps = config.value("steps", 1000);
    if (mode == "sandwich") {
        IndexSet m = index_set_from_json(config.at("M"));
        SandwichResult r = value_sandwich_fm(m, steps);
        return Json{{"lower", r.lower}, {"upper", r.upper}, {"gap", r.gap()}, {"steps", steps}};
    }
    TargetOracle s = target_from_json(config);
    std::string s1_name = config.value("strategy1", "sigma1");
    std::string s2_name = config.value("strategy2", "sigma2");
    OfferStrategy s1;
    if (s1_name == "sigma1")
        s1 = sigma1_fm(index_set_from_json(config.at("M")));
    else if (s1_name == "full")
        s1 = offer_full(config.value("k", 1), s.tree.arity);
    else
        unknown_key("player 1 strategy", s1_name);
    PickStrategy s2;
    if (s2_name == "sigma2")
        s2 = sigma2_avoid(s);
    else if (s2_name == "smallest")
        s2 = pick_smallest();
    else
        unknown_key("player 2 strategy", s2_name);
    (void)seed;
    DimGameTranscript t = run_dim_game(s1, s2, steps, s.tree.arity);
    PayoffRecord payoff = payoff_prefix(t, s, steps);
    return Json{{"k", t.block},
                {"steps", steps},
                {"payoff", payoff.value},
                {"last_average", payoff.last_average},
                {"running_min_average", payoff.running_min_average},
                {"escaped", payoff.escaped}};
}

Json results_schmidt(const Json& config, std::uint64_t seed) {
    SchmidtConfig cfg = schmidt_from_json(config);
    if (config.contains("alpha")) cfg.alpha = rat_from_json(config.at("alpha"));
    if (config.contains("beta")) cfg.beta = rat_from_json(config.at("beta"));
    int steps = config.value("steps", 10);
    std::string target_name = config.value("target", "none");
    BallRegion region;
    bool has_region = false;
    if (target_name == "cantor") {
        region = cantor_region();
        has_region = true;
    } else if (target_name != "none") {
        unknown_key("schmidt target", target_name);
    }
    SchmidtStrategy s1 = schmidt_strategy_from_name(config.value("strategyI", "first"), seed,
                                                    has_region ? &region : nullptr);
    SchmidtStrategy s2 = schmidt_strategy_from_name(config.value("strategyII", "first"),
                                                    seed + 1, has_region ? &region : nullptr);
    SchmidtTranscript t =
        play_schmidt(cfg, s1, s2, steps, has_region ? &region : nullptr);
    Json balls = Json::array();
    for (const Ball& b : t.balls) balls.push_back(ball_to_json(b));
    Json verdicts = Json::array();
    for (Verdict v : t.verdicts) verdicts.push_back(verdict_name(v));
    return Json{{"balls", balls}, {"verdicts", verdicts}, {"steps", steps},
                {"model", cfg.name}};
}

Json results_mc(const Json& config, std::uint64_t seed) {
    TargetOracle s = target_from_json(config);
    int depth = config.value("depth", 60);
    std::uint64_t trials = config.value("trials", (std::uint64_t)100000);
    if (config.contains("seed")) seed = config.at("seed").get<std::uint64_t>();
    PureStrategy s1 = player_one_from_name(config.value("strategyI", "follow"), s, seed);
    McCurve curve = mc_flipcoin(s, s1, depth, trials, seed);
    Json survival = Json::array();
    for (int d = 0; d <= depth; ++d) survival.push_back(curve.survival(d));
    return Json{{"survival", survival},
                {"final", curve.final_survival()},
                {"monotone", curve.monotone()},
                {"trials", trials},
                {"depth", depth},
                {"seed", seed}};
}

Json results_packing(const Json& config) {
    int d = config.at("d").get<int>();
    PackingLemmaReport rep = verify_packing_lemma(d);
    return Json{{"pack", rep.packed_in_triple},
                {"bound", rep.cube_bound},
                {"pass", rep.pass},
                {"doubling_witnessed", rep.doubling_witnessed}};
}

Json results_threshold(const Json& config) {
    Threshold t = threshold(rat_from_json(config.at("alpha")), rat_from_json(config.at("beta")),
                            config.at("m").get<std::uint64_t>());
    Json out{{"float", t.value}};
    out["exact"] = t.exact ? Json(rat_to_string(*t.exact)) : Json();
    return out;
}

}  // namespace

Json run_results(const Json& config, std::uint64_t seed) {
    if (!config.is_object() || !config.contains("cmd"))
        throw ConfigError("config needs a cmd");
    std::string cmd = config.at("cmd").get<std::string>();
    if (cmd == "estimate-dim") return results_estimate_dim(config);
    if (cmd == "measure") return results_measure(config);
    if (cmd == "solve") return results_solve(config);
    if (cmd == "dimgame") return results_dimgame(config, seed);
    if (cmd == "schmidt") return results_schmidt(config, seed);
    if (cmd == "mc") return results_mc(config, seed);
    if (cmd == "packing") return results_packing(config);
    if (cmd == "threshold") return results_threshold(config);
    unknown_key("cmd", cmd);
}

Json run_experiment(const Json& config, std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    Json results = run_results(config, seed);
    auto t1 = std::chrono::steady_clock::now();
    double wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    std::uint64_t h = seed;
    for (unsigned char c : config.dump()) {
        std::uint64_t st = h ^ (0x100000001B3ULL * (std::uint64_t)(c + 1));
        h = splitmix64(st);
    }
    char idbuf[32];
    std::snprintf(idbuf, sizeof(idbuf), "%016llx", (unsigned long long)h);
    return Json{{"id", idbuf},
                {"config", config},
                {"seed", seed},
                {"results", results},
                {"wall_ms", wall_ms},
                {"version", kLibraryVersion}};
}

}  // namespace canopy
