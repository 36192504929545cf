#include "canopy/schmidt.hpp"

#include "canopy/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace canopy {

Ball coding_interval(const Position& p) {
    if (p.arity() != 2) throw std::invalid_argument("binary position required");
    BigInt v = 0;
    for (std::size_t i = 0; i < p.len(); ++i) v = 2 * v + p[i];
    BigInt den = pow_int(BigInt(2), p.len());
    return interval_ball(Rational(v, den), Rational(v + 1, den));
}

Ball coding_quaternary_interval(const Position& p) {
    if (p.arity() != 4) throw std::invalid_argument("quaternary position required");
    BigInt v = 0;
    for (std::size_t i = 0; i < p.len(); ++i) v = 4 * v + p[i];
    BigInt den = pow_int(BigInt(4), p.len());
    return interval_ball(Rational(v, den), Rational(v + 1, den));
}

Ball coding_square(const Position& p) {
    if (p.arity() != 4) throw std::invalid_argument("quaternary position required");
    BigInt x = 0, y = 0;
    for (std::size_t i = 0; i < p.len(); ++i) {
        x = 2 * x + (p[i] % 2);
        y = 2 * y + (p[i] / 2);
    }
    BigInt den = pow_int(BigInt(2), p.len());
    Rational r(1, 2 * den);
    return Ball{{Rational(2 * x + 1, 2 * den), Rational(2 * y + 1, 2 * den)}, r};
}

namespace {

std::vector<Ball> lattice_children(const Ball& b, int base) {
    int d = b.dim();
    Rational child_r = b.radius / base;
    std::vector<Ball> out;
    std::vector<int> idx((std::size_t)d, 0);
    while (true) {
        Ball c;
        c.radius = child_r;
        for (int i = 0; i < d; ++i) {
            Rational lo = b.axis_lo(i);
            c.center.push_back(lo + child_r * Rational(2 * idx[(std::size_t)i] + 1));
        }
        out.push_back(std::move(c));
        int axis = 0;
        while (axis < d) {
            if (++idx[(std::size_t)axis] < base) break;
            idx[(std::size_t)axis] = 0;
            ++axis;
        }
        if (axis == d) break;
    }
    return out;
}

}  // namespace

SchmidtConfig madic_cube_config(int base, int dim) {
    if (base < 2 || dim < 1) throw std::invalid_argument("need base >= 2 and dim >= 1");
    SchmidtConfig cfg;
    cfg.alpha = Rational(1, base);
    cfg.beta = Rational(1, base);
    cfg.cube_base = base;
    cfg.name = std::to_string(base) + "-adic cubes in dim " + std::to_string(dim);
    cfg.initial = unit_cube(base, dim).closure();
    cfg.admissible = [base](const std::vector<Ball>& history) {
        return lattice_children(history.back(), base);
    };
    return cfg;
}

SchmidtConfig interval_config(int base) { return madic_cube_config(base, 1); }

SchmidtStrategy pick_first() {
    return {[](const std::vector<Ball>&, const std::vector<Ball>&) { return std::size_t(0); },
            "first"};
}

SchmidtStrategy pick_last() {
    return {[](const std::vector<Ball>&, const std::vector<Ball>& coll) {
                return coll.size() - 1;
            },
            "last"};
}

SchmidtStrategy pick_seeded(std::uint64_t seed) {
    return {[seed](const std::vector<Ball>& history, const std::vector<Ball>& coll) {
                std::uint64_t st = derive_stream(seed, history.size());
                Stream stream(st);
                return (std::size_t)stream.below(coll.size());
            },
            "seeded_" + std::to_string(seed)};
}

BallRegion cantor_region(int max_digits) {
    return [max_digits](const Ball& b) {
        if (b.dim() != 1) throw std::invalid_argument("interval region expects dim 1");
        Rational lo = b.axis_lo(0), hi = b.axis_hi(0);
        if (lo < 0) lo = 0;
        if (hi > 1) hi = 1;
        if (lo > hi) return Verdict::Outside;
        return cantor_interval_oracle(lo, hi, max_digits);
    };
}

SchmidtStrategy pick_follow_region(BallRegion region) {
    return {[region](const std::vector<Ball>&, const std::vector<Ball>& coll) {
                for (std::size_t i = 0; i < coll.size(); ++i)
                    if (region(coll[i]) != Verdict::Outside) return i;
                return std::size_t(0);
            },
            "follow_region"};
}

SchmidtStrategy pick_avoid_region(BallRegion region) {
    return {[region](const std::vector<Ball>&, const std::vector<Ball>& coll) {
                for (std::size_t i = 0; i < coll.size(); ++i)
                    if (region(coll[i]) == Verdict::Outside) return i;
                return std::size_t(0);
            },
            "avoid_region"};
}

SchmidtTranscript play_schmidt(const SchmidtConfig& config, const SchmidtStrategy& s1,
                               const SchmidtStrategy& s2, int steps,
                               const BallRegion* region) {
    SchmidtTranscript t;
    t.balls.push_back(config.initial);
    if (region) t.verdicts.push_back((*region)(config.initial));
    for (int n = 0; n < steps; ++n) {
        std::vector<Ball> coll = config.admissible(t.balls);
        if (coll.empty()) throw DegenerateCollection();
        const SchmidtStrategy& mover = (n % 2 == 0) ? s1 : s2;
        std::size_t idx = mover.pick(t.balls, coll);
        if (idx >= coll.size()) throw IllegalBallMove("chosen index outside the collection");
        Ball chosen = coll[idx];
        const Ball& prev = t.balls.back();
        Rational rate = (n % 2 == 0) ? config.alpha : config.beta;
        if (chosen.radius != prev.radius * rate)
            throw IllegalBallMove("radius law violated: expected " +
                                  rat_to_string(prev.radius * rate) + ", got " +
                                  rat_to_string(chosen.radius));
        if (!chosen.inside(prev)) throw IllegalBallMove("containment violated at " + chosen.str());
        t.balls.push_back(std::move(chosen));
        if (region) t.verdicts.push_back((*region)(t.balls.back()));
    }
    return t;
}

PointEnclosure project_point(const std::vector<Ball>& balls) {
    if (balls.empty()) throw std::invalid_argument("empty ball sequence");
    for (std::size_t i = 1; i < balls.size(); ++i)
        if (!balls[i].inside(balls[i - 1]))
            throw std::invalid_argument("ball sequence is not nested");
    return {balls.back().center, balls.back().radius};
}

std::vector<CollapsedMove> CollapsedConfig::admissible_pairs(
    const std::vector<Ball>& flat) const {
    std::vector<CollapsedMove> out;
    std::vector<Ball> temps = base.admissible(flat);
    std::vector<Ball> extended = flat;
    for (const Ball& temp : temps) {
        extended.push_back(temp);
        for (Ball& fin : base.admissible(extended)) out.push_back({temp, std::move(fin)});
        extended.pop_back();
    }
    return out;
}

CollapsedConfig collapse_alphabeta(const SchmidtConfig& config) { return {config}; }

CollapsedTranscript play_collapsed(const CollapsedConfig& config, const CollapsedStrategy& s,
                                   int steps) {
    CollapsedTranscript t;
    t.initial = config.base.initial;
    std::vector<Ball> flat{t.initial};
    for (int n = 0; n < steps; ++n) {
        std::vector<CollapsedMove> pairs = config.admissible_pairs(flat);
        if (pairs.empty()) throw DegenerateCollection();
        std::size_t idx = s.pick(flat, pairs);
        if (idx >= pairs.size()) throw IllegalBallMove("chosen index outside the collection");
        CollapsedMove mv = pairs[idx];
        if (mv.final.radius != flat.back().radius * config.rate())
            throw IllegalBallMove("collapsed radius law violated");
        flat.push_back(mv.temp);
        flat.push_back(mv.final);
        t.moves.push_back(std::move(mv));
    }
    return t;
}

std::vector<Ball> unpack_transcript(const CollapsedTranscript& t) {
    std::vector<Ball> flat{t.initial};
    for (const CollapsedMove& mv : t.moves) {
        flat.push_back(mv.temp);
        flat.push_back(mv.final);
    }
    return flat;
}

CollapsedTranscript pack_transcript(const std::vector<Ball>& flat) {
    if (flat.empty() || flat.size() % 2 == 0)
        throw std::invalid_argument("flat transcript must hold the opening ball plus move pairs");
    CollapsedTranscript t;
    t.initial = flat.front();
    for (std::size_t i = 1; i + 1 < flat.size(); i += 2) t.moves.push_back({flat[i], flat[i + 1]});
    return t;
}

namespace {

std::map<long long, long long> factorize(BigInt n) {
    std::map<long long, long long> out;
    for (long long p = 2; BigInt(p) * p <= n; ++p) {
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
    }
    if (n > 1) out[n.convert_to<long long>()] += 1;
    return out;
}

}  // namespace

Threshold threshold(const Rational& alpha, const Rational& beta, std::uint64_t ball_count) {
    if (alpha <= 0 || alpha >= 1 || beta <= 0 || beta >= 1)
        throw std::invalid_argument("rates must lie in (0,1)");
    if (ball_count < 1) throw std::invalid_argument("ball count must be >= 1");
    Rational q = 1 / (alpha * beta);  // > 1
    Threshold out;
    out.value = std::log2((double)ball_count) / std::log2(canopy::to_double(q));
    if (ball_count == 1) {
        out.exact = Rational(0);
        out.value = 0.0;
        return out;
    }
    // exact iff the exponent vectors are proportional: m = q^e
    auto fm = factorize(BigInt(ball_count));
    auto fn = factorize(numerator(q));
    auto fd = factorize(denominator(q));
    std::map<long long, long long> dq;
    for (auto& [p, e] : fn) dq[p] += e;
    for (auto& [p, e] : fd) dq[p] -= e;
    std::optional<Rational> ratio;
    bool exact = true;
    std::map<long long, long long> all;
    for (auto& [p, e] : fm) all[p] += 0;
    for (auto& [p, e] : dq) all[p] += 0;
    for (auto& [p, unused] : all) {
        long long em = fm.count(p) ? fm[p] : 0;
        long long eq = dq.count(p) ? dq[p] : 0;
        if (eq == 0) {
            if (em != 0) exact = false;
            continue;
        }
        Rational r(em, eq);
        if (!ratio)
            ratio = r;
        else if (*ratio != r)
            exact = false;
    }
    if (exact && ratio && *ratio >= 0) {
        out.exact = *ratio;
        out.value = canopy::to_double(*ratio);
    }
    return out;
}

namespace {

// largest subfamily with pairwise disjoint interiors, exhaustive up to 16
// balls, greedy beyond
std::vector<std::size_t> max_disjoint_subset(const std::vector<Ball>& balls) {
    std::size_t n = balls.size();
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
    bool all_disjoint = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            ok[i][j] = ok[j][i] = balls[i].interior_disjoint(balls[j]);
            if (!ok[i][j]) all_disjoint = false;
        }
    if (all_disjoint) {
        std::vector<std::size_t> everything(n);
        for (std::size_t i = 0; i < n; ++i) everything[i] = i;
        return everything;
    }
    if (n <= 16) {
        std::vector<std::size_t> best;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::size_t> cur;
            bool good = true;
            for (std::size_t i = 0; i < n && good; ++i) {
                if (!(mask & (1u << i))) continue;
                for (std::size_t j : cur)
                    if (!ok[i][j]) {
                        good = false;
                        break;
                    }
                if (good) cur.push_back(i);
            }
            if (good && cur.size() > best.size()) best = cur;
        }
        return best;
    }
    std::vector<std::size_t> greedy;
    for (std::size_t i = 0; i < n; ++i) {
        bool fits = true;
        for (std::size_t j : greedy)
            if (!ok[i][j]) {
                fits = false;
                break;
            }
        if (fits) greedy.push_back(i);
    }
    return greedy;
}

}  // namespace

HypothesisReport check_m_balls_hypothesis(const SchmidtConfig& config,
                                          std::uint64_t ball_count, int depth,
                                          std::uint64_t budget, std::uint64_t seed) {
    HypothesisReport rep;
    std::uint64_t visited = 0;
    bool budget_hit = false;

    std::function<void(std::vector<Ball>&)> walk = [&](std::vector<Ball>& history) {
        if (!rep.ok) return;
        int moves = (int)history.size() - 1;
        if (moves >= depth) return;
        std::vector<Ball> coll = config.admissible(history);
        if (coll.empty()) throw DegenerateCollection();
        bool player_two_next = history.size() % 2 == 0;
        if (player_two_next) {
            ++rep.positions_checked;
            auto subset = max_disjoint_subset(coll);
            if (subset.size() < ball_count) {
                rep.ok = false;
                rep.failure = "only " + std::to_string(subset.size()) +
                              " disjoint balls after " + std::to_string(moves) + " moves";
                return;
            }
            if (rep.witness.empty())
                for (std::size_t i = 0; i < ball_count; ++i)
                    rep.witness.push_back(coll[subset[i]]);
        }
        if (visited >= budget) {
            budget_hit = true;
            // seeded sample of one continuation per exhausted branch
            Stream stream(derive_stream(seed, visited));
            history.push_back(coll[stream.below(coll.size())]);
            ++visited;
            walk(history);
            history.pop_back();
            return;
        }
        for (const Ball& b : coll) {
            ++visited;
            history.push_back(b);
            walk(history);
            history.pop_back();
            if (!rep.ok) return;
        }
    };

    std::vector<Ball> history{config.initial};
    walk(history);
    rep.exhaustive = !budget_hit;
    return rep;
}

StructuralReport structural_checks(const SchmidtConfig& config, int depth) {
    StructuralReport rep;
    int base = config.cube_base;
    int d = config.initial.dim();
    rep.colors = base == 2 ? (1 << (2 * d)) : (1 << d);  // 4^d or 2^d
    int modulus = base == 2 ? 4 : 2;

    rep.cover_witness = "countable family of level cubes: base " + std::to_string(base) +
                        ", one offset vector per cube";
    rep.countable_cover_ok = true;
    rep.l_colored_ok = true;

    Ball parent = config.initial;
    for (int level = 1; level <= depth; ++level) {
        std::vector<Ball> kids = lattice_children(parent, base);
        // exact partition of the parent per axis: consecutive closed
        // intervals sharing endpoints, spanning exactly the parent
        for (int axis = 0; axis < d; ++axis) {
            std::vector<Rational> los;
            for (const Ball& k : kids) los.push_back(k.axis_lo(axis));
            std::sort(los.begin(), los.end());
            los.erase(std::unique(los.begin(), los.end()), los.end());
            if ((int)los.size() != base || los.front() != parent.axis_lo(axis)) {
                rep.countable_cover_ok = false;
            } else {
                Rational side = kids.front().radius * 2;
                for (std::size_t i = 0; i + 1 < los.size(); ++i)
                    if (los[i] + side != los[i + 1]) rep.countable_cover_ok = false;
                if (los.back() + side != parent.axis_hi(axis)) rep.countable_cover_ok = false;
            }
        }
        // color classes by global offset mod the modulus, per axis
        Rational side = kids.front().radius * 2;
        auto color_of = [&](const Ball& b) {
            long long code = 0;
            for (int axis = 0; axis < d; ++axis) {
                Rational off = b.axis_lo(axis) / side;
                long long o = floor_rat(off).convert_to<long long>();
                code = code * modulus + ((o % modulus) + modulus) % modulus;
            }
            return code;
        };
        std::map<long long, std::vector<const Ball*>> classes;
        for (const Ball& k : kids) classes[color_of(k)].push_back(&k);
        if ((long long)classes.size() > rep.colors) rep.l_colored_ok = false;
        Rational separation = kids.front().radius;  // r_n of the separated variant
        for (auto& [code, members] : classes) {
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (!(members[i]->gap(*members[j]) > separation)) rep.l_colored_ok = false;
        }
        ++rep.levels_checked;
        parent = kids.front();
    }
    return rep;
}

AssociatedTranscript run_associated_game(const CollapsedConfig& config,
                                         const AssociatedOffer& s1, const AssociatedPick& s2,
                                         int steps, OfferLegality mode) {
    AssociatedTranscript t;
    t.initial_radius = config.base.initial.radius;
    t.step_rate = config.rate();
    std::vector<Ball> picks;
    Rational expected = t.initial_radius;
    for (int n = 0; n < steps; ++n) {
        expected *= t.step_rate;
        std::vector<Ball> offer = s1(picks);
        if (offer.empty()) throw IllegalOffer("empty offer at step " + std::to_string(n));
        for (const Ball& b : offer)
            if (b.radius != expected)
                throw IllegalOffer("offer radius breaks the shrinking law");
        BallOffer bo{offer, expected};
        if (!check_offer_legality(bo, mode))
            throw IllegalOffer(mode == OfferLegality::Disjoint
                                   ? "offer is not interior-disjoint"
                                   : "offer is not separated");
        std::size_t idx = s2(offer);
        if (idx >= offer.size()) throw IllegalOffer("pick outside the offer");
        picks.push_back(offer[idx]);
        t.steps.push_back({std::move(offer), idx});
    }
    return t;
}

AssociatedOffer associated_offer_from_strategy(const CollapsedConfig& config,
                                               const SchmidtStrategy& s1) {
    SchmidtConfig base = config.base;
    return [base, s1](const std::vector<Ball>& picks) {
        std::vector<Ball> flat{base.initial};
        for (const Ball& fin : picks) {
            std::vector<Ball> temps = base.admissible(flat);
            std::size_t idx = s1.pick(flat, temps);
            flat.push_back(temps[idx]);
            flat.push_back(fin);
        }
        std::vector<Ball> temps = base.admissible(flat);
        std::size_t idx = s1.pick(flat, temps);
        flat.push_back(temps[idx]);
        std::vector<Ball> replies = base.admissible(flat);
        auto keep = max_disjoint_subset(replies);
        std::vector<Ball> offer;
        for (std::size_t i : keep) offer.push_back(replies[i]);
        return offer;
    };
}

double associated_average_log(const AssociatedTranscript& t) {
    if (t.steps.empty()) return 0.0;
    double logq = -std::log2(canopy::to_double(t.step_rate));
    double sum = 0.0;
    for (const auto& st : t.steps) sum += std::log2((double)st.offer.size()) / logq;
    return sum / (double)t.steps.size();
}

}  // namespace canopy
