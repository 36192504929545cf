#include "canopy/acceptance.hpp"
#include "canopy/cantor.hpp"
#include "canopy/config.hpp"
#include "canopy/flipcoin.hpp"
#include "canopy/hausdorff.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using canopy::Json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIllegal = 3;

bool color_allowed() { return std::getenv("NO_COLOR") == nullptr; }

void emit(const Json& report, const std::string& out_path, bool json_only) {
    std::string text = report.dump(2);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << text << "\n";
        if (!json_only) std::cout << "report written to " << out_path << "\n";
        return;
    }
    std::cout << text << "\n";
}

Json parse_inline_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw canopy::ConfigError("bad " + what + ": " + e.what());
    }
}

int run_and_emit(const Json& config, std::uint64_t seed, const std::string& out_path,
                 bool json_only) {
    Json report = canopy::run_experiment(config, seed);
    emit(report, out_path, json_only);
    return kExitOk;
}

int interactive_play(const Json& set_json, const std::string& machine, int depth,
                     const std::string& out_path) {
    canopy::TargetOracle target = canopy::target_from_json(set_json);
    canopy::TreeOracle tree = target.tree;
    canopy::BehaviorStrategy coin = canopy::coin_flip_strategy(tree);
    canopy::PureStrategy avoid = canopy::avoid_strategy(target);
    canopy::Stream stream(canopy::derive_stream(20260809, 0));

    canopy::Position p = tree.root();
    Json transcript = Json::array();
    std::cout << "you are player one; enter the index of an available action\n";
    while ((int)p.len() < depth) {
        canopy::Verdict v = target.verdict(p);
        std::vector<int> acts = tree.actions(p);
        std::cout << "position " << p.str() << "  verdict " << canopy::verdict_name(v)
                  << "  actions:";
        for (std::size_t i = 0; i < acts.size(); ++i)
            std::cout << " [" << i << "]=" << acts[i];
        std::cout << "\n";
        int action;
        if (p.player_one_to_move()) {
            std::cout << "move> " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) break;  // EOF ends the session
            try {
                std::size_t idx = (std::size_t)std::stoul(line);
                if (idx >= acts.size()) throw std::out_of_range("index");
                action = acts[idx];
            } catch (...) {
                std::cout << "enter an index between 0 and " << acts.size() - 1 << "\n";
                continue;
            }
        } else {
            action = machine == "avoid" ? avoid(p) : coin.sample(tree, p, stream);
            std::cout << "machine plays " << action << "\n";
        }
        p.push(action);
        transcript.push_back(action);
    }
    canopy::Verdict final_v = target.verdict(p);
    std::cout << "final position " << p.str() << "  verdict " << canopy::verdict_name(final_v)
              << "\n";
    Json report{{"transcript", transcript},
                {"final_verdict", canopy::verdict_name(final_v)},
                {"set", set_json},
                {"machine", machine}};
    if (!out_path.empty()) emit(report, out_path, true);
    return kExitOk;
}

int interactive_schmidt(const Json& config, const std::string& out_path) {
    canopy::SchmidtConfig cfg = canopy::schmidt_from_json(config);
    std::string target_name = config.value("target", "none");
    canopy::BallRegion region;
    bool has_region = false;
    if (target_name == "cantor") {
        region = canopy::cantor_region();
        has_region = true;
    }
    std::string machine_name = config.value("strategyII", "first");
    canopy::SchmidtStrategy machine =
        machine_name == "last" ? canopy::pick_last()
        : (machine_name == "avoid" && has_region) ? canopy::pick_avoid_region(region)
                                                  : canopy::pick_first();
    int steps = config.value("steps", 10);

    std::vector<canopy::Ball> history{cfg.initial};
    std::cout << "you are player one; enter the index of an admissible ball\n";
    for (int n = 0; n < steps; ++n) {
        const canopy::Ball& cur = history.back();
        std::cout << "ball " << cur.str();
        if (has_region)
            std::cout << "  verdict " << canopy::verdict_name(region(cur));
        std::cout << "\n";
        std::vector<canopy::Ball> coll = cfg.admissible(history);
        std::size_t idx;
        if (n % 2 == 0) {
            for (std::size_t i = 0; i < coll.size(); ++i)
                std::cout << "  [" << i << "] " << coll[i].str() << "\n";
            std::cout << "move> " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) break;
            try {
                idx = (std::size_t)std::stoul(line);
                if (idx >= coll.size()) throw std::out_of_range("index");
            } catch (...) {
                std::cout << "enter an index between 0 and " << coll.size() - 1 << "\n";
                --n;
                continue;
            }
        } else {
            idx = machine.pick(history, coll);
            std::cout << "machine picks " << coll[idx].str() << "\n";
        }
        history.push_back(coll[idx]);
    }
    Json balls = Json::array();
    for (const auto& b : history) balls.push_back(canopy::ball_to_json(b));
    Json report{{"balls", balls}};
    if (has_region) {
        Json verdicts = Json::array();
        for (const auto& b : history) verdicts.push_back(canopy::verdict_name(region(b)));
        report["verdicts"] = verdicts;
    }
    if (!out_path.empty())
        emit(report, out_path, true);
    else
        std::cout << report.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-depth games on trees: dimension estimators, game solvers, "
                 "nested-ball engines"};
    app.require_subcommand(0, 1);

    std::string config_path, out_path, set_text, m_text, tree_text;
    std::uint64_t seed = 1;
    bool json_only = false;
    app.add_option("--config", config_path, "JSON config file with a cmd field");
    app.add_option("--seed", seed, "seed for stochastic runs");
    app.add_option("--out", out_path, "write the JSON report here");
    app.add_flag("--json", json_only, "print only the JSON report");

    auto add_set = [&](CLI::App* cmd) {
        cmd->add_option("--set", set_text, "target set as inline JSON")->required();
    };

    // estimate-dim
    auto* cmd_dim = app.add_subcommand("estimate-dim", "box counts and the fitted slope");
    std::vector<int> depths{8, 24};
    add_set(cmd_dim);
    cmd_dim->add_option("--depths", depths, "depth window [min max]")->expected(2);

    // measure
    auto* cmd_measure = app.add_subcommand("measure", "optimal cylinder-cover cost");
    std::string delta_text = "1/2";
    int measure_depth = 7;
    add_set(cmd_measure);
    cmd_measure->add_option("--delta", delta_text, "exponent as p/q");
    cmd_measure->add_option("--max-depth", measure_depth, "deepest cover leaves");

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "three-valued backward induction");
    std::string style = "closed";
    int solve_depth = 0, solve_cap = 32;
    add_set(cmd_solve);
    cmd_solve->add_option("--tree", tree_text, "tree as inline JSON or name");
    cmd_solve->add_option("--style", style, "closed or open");
    cmd_solve->add_option("--depth", solve_depth, "fixed solving depth");
    cmd_solve->add_option("--cap", solve_cap, "iterative deepening cap");

    // dimgame
    auto* cmd_dimgame = app.add_subcommand("dimgame", "block offer-and-pick dimension game");
    std::string dg_mode = "sandwich", dg_s1 = "sigma1", dg_s2 = "sigma2";
    std::size_t dg_steps = 3000;
    int dg_k = 1;
    cmd_dimgame->add_option("--set", set_text, "target set as inline JSON");
    cmd_dimgame->add_option("--M", m_text, "index set as inline JSON");
    cmd_dimgame->add_option("--mode", dg_mode, "sandwich or run");
    cmd_dimgame->add_option("--steps", dg_steps, "number of steps");
    cmd_dimgame->add_option("--k", dg_k, "block length for the full offerer");
    cmd_dimgame->add_option("--strategy1", dg_s1, "sigma1 or full");
    cmd_dimgame->add_option("--strategy2", dg_s2, "sigma2 or smallest");

    // schmidt
    auto* cmd_schmidt = app.add_subcommand("schmidt", "nested-ball games on lattice models");
    std::string sc_model = "madic", sc_target = "none", sc_s1 = "first", sc_s2 = "first";
    std::string alpha_text, beta_text;
    std::vector<int> madic{2, 1};
    int sc_steps = 10;
    bool sc_interactive = false;
    cmd_schmidt->add_option("--model", sc_model, "madic, interval2, interval4, square");
    cmd_schmidt->add_option("--madic", madic, "base and dimension")->expected(2);
    cmd_schmidt->add_option("--alpha", alpha_text, "player one shrink rate p/q");
    cmd_schmidt->add_option("--beta", beta_text, "player two shrink rate p/q");
    cmd_schmidt->add_option("--target", sc_target, "cantor or none");
    cmd_schmidt->add_option("--steps", sc_steps, "number of moves");
    cmd_schmidt->add_option("--strategyI", sc_s1, "first, last, seeded, follow, avoid");
    cmd_schmidt->add_option("--strategyII", sc_s2, "first, last, seeded, follow, avoid");
    cmd_schmidt->add_flag("--interactive", sc_interactive, "play by hand in the terminal");

    // mc
    auto* cmd_mc = app.add_subcommand("mc", "seeded survival sampling against the coin flipper");
    std::uint64_t mc_trials = 100000;
    int mc_depth = 60;
    std::string mc_s1 = "follow";
    add_set(cmd_mc);
    cmd_mc->add_option("--trials", mc_trials, "number of sampled plays");
    cmd_mc->add_option("--depth", mc_depth, "play length");
    cmd_mc->add_option("--strategyI", mc_s1, "follow, zero, one, seeded");

    // packing
    auto* cmd_packing = app.add_subcommand("packing", "packing bound report");
    int pack_d = 2;
    cmd_packing->add_option("--d", pack_d, "ambient dimension");

    // play
    auto* cmd_play = app.add_subcommand("play", "interactive alternating-move game");
    std::string play_machine = "coinflip";
    int play_depth = 20;
    add_set(cmd_play);
    cmd_play->add_option("--machine", play_machine, "coinflip or avoid");
    cmd_play->add_option("--depth", play_depth, "session length");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the acceptance matrix");
    std::string only;
    cmd_verify->add_option("--only", only, "run only rows whose key contains this text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw canopy::ConfigError("cannot open config file: " + config_path);
            Json config = Json::parse(f, nullptr, true, true);
            if (config.contains("seed")) seed = config.at("seed").get<std::uint64_t>();
            return run_and_emit(config, seed, out_path, json_only);
        }
        if (cmd_verify->parsed()) {
            canopy::MatrixResult matrix = canopy::run_acceptance(std::cout, only, color_allowed());
            std::cout << matrix.passed << " passed, " << matrix.failed << " failed\n";
            return matrix.all_pass() ? kExitOk : 1;
        }
        if (cmd_dim->parsed()) {
            Json config = parse_inline_json(set_text, "--set");
            config["cmd"] = "estimate-dim";
            config["depths"] = depths;
            return run_and_emit(config, seed, out_path, json_only);
        }
        if (cmd_measure->parsed()) {
            Json config = parse_inline_json(set_text, "--set");
            config["cmd"] = "measure";
            config["delta"] = delta_text;
            config["depth"] = measure_depth;
            return run_and_emit(config, seed, out_path, json_only);
        }
        if (cmd_solve->parsed()) {
            Json config = parse_inline_json(set_text, "--set");
            config["cmd"] = "solve";
            config["style"] = style;
            if (!tree_text.empty()) config["tree"] = parse_inline_json(tree_text, "--tree");
            if (solve_depth > 0)
                config["depth"] = solve_depth;
            else {
                config["iterative"] = true;
                config["cap"] = solve_cap;
            }
            return run_and_emit(config, seed, out_path, json_only);
        }
        if (cmd_dimgame->parsed()) {
            Json config{{"cmd", "dimgame"}, {"mode", dg_mode}, {"steps", dg_steps}};
            if (!m_text.empty()) config["M"] = parse_inline_json(m_text, "--M");
            if (!set_text.empty()) {
                Json set_json = parse_inline_json(set_text, "--set");
                config.update(set_json);
            }
            config["strategy1"] = dg_s1;
            config["strategy2"] = dg_s2;
            config["k"] = dg_k;
            return run_and_emit(config, seed, out_path, json_only);
        }
        if (cmd_schmidt->parsed()) {
            Json config{{"cmd", "schmidt"}, {"model", sc_model},   {"m", madic[0]},
                        {"d", madic[1]},    {"target", sc_target}, {"steps", sc_steps},
                        {"strategyI", sc_s1}, {"strategyII", sc_s2}};
            if (!alpha_text.empty()) config["alpha"] = alpha_text;
            if (!beta_text.empty()) config["beta"] = beta_text;
            if (sc_interactive) return interactive_schmidt(config, out_path);
            return run_and_emit(config, seed, out_path, json_only);
        }
        if (cmd_mc->parsed()) {
            Json config = parse_inline_json(set_text, "--set");
            config["cmd"] = "mc";
            config["trials"] = mc_trials;
            config["depth"] = mc_depth;
            config["strategyI"] = mc_s1;
            config["seed"] = seed;
            return run_and_emit(config, seed, out_path, json_only);
        }
        if (cmd_packing->parsed()) {
            Json config{{"cmd", "packing"}, {"d", pack_d}};
            return run_and_emit(config, seed, out_path, json_only);
        }
        if (cmd_play->parsed()) {
            Json set_json = parse_inline_json(set_text, "--set");
            return interactive_play(set_json, play_machine, play_depth, out_path);
        }
        std::cout << app.help() << "\n";
        return kExitOk;
    } catch (const canopy::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const canopy::IllegalMove& e) {
        std::cerr << "illegal move: " << e.what() << "\n";
        return kExitIllegal;
    } catch (const canopy::IllegalOffer& e) {
        std::cerr << "illegal offer: " << e.what() << "\n";
        return kExitIllegal;
    } catch (const canopy::IllegalBallMove& e) {
        std::cerr << "illegal ball move: " << e.what() << "\n";
        return kExitIllegal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
