#include "canopy/dimgame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace canopy {

Position project_play(int block, const std::vector<Position>& picks) {
    int arity = picks.empty() ? 2 : picks.front().arity();
    Position out = Position::root(arity);
    for (const Position& b : picks) {
        if ((int)b.len() != block) throw std::invalid_argument("pick has wrong block length");
        out = out.concat(b);
    }
    return out;
}

Position DimGameTranscript::projected_prefix(std::size_t n_steps) const {
    std::vector<Position> picks;
    for (std::size_t i = 0; i < n_steps && i < steps.size(); ++i)
        picks.push_back(steps[i].pick);
    if (picks.empty()) return Position::root(arity);
    return project_play(block, picks);
}

PayoffRecord payoff_prefix(const DimGameTranscript& t, const TargetOracle& s,
                           std::size_t n_steps) {
    if (n_steps > t.steps.size()) throw std::invalid_argument("horizon exceeds transcript");
    PayoffRecord rec;
    double logmk = (double)t.block * std::log2((double)t.arity);
    double sum = 0.0;
    double running_min = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < n_steps; ++n) {
        double term = std::log2((double)t.steps[n].offer.size()) / logmk;
        rec.per_step_log.push_back(term);
        sum += term;
        double avg = sum / (double)(n + 1);
        running_min = std::min(running_min, avg);
    }
    rec.last_average = n_steps ? sum / (double)n_steps : 0.0;
    rec.running_min_average = n_steps ? running_min : 0.0;
    rec.escaped = s.verdict(t.projected_prefix(n_steps)) == Verdict::Outside;
    rec.value = rec.escaped ? -1.0 : rec.last_average;
    return rec;
}

OfferStrategy sigma1_fm(const IndexSet& m_set) {
    auto member = m_set.member;
    return [member](const DimGameTranscript& t) {
        std::uint64_t n = t.steps.size();
        std::vector<Position> offer;
        offer.push_back(Position({0}, 2));
        if (member(n)) offer.push_back(Position({1}, 2));
        return offer;
    };
}

PickStrategy sigma2_avoid(const TargetOracle& s, std::size_t probe_depth) {
    auto verdict = s.verdict;
    return [verdict, probe_depth](const DimGameTranscript& t,
                                  const std::vector<Position>& offer) {
        Position prefix = t.projected_prefix();
        for (const Position& b : offer) {
            Position probe = prefix.concat(b);
            std::size_t pad_to = std::max(probe_depth, probe.len());
            while (probe.len() < pad_to) probe.push(0);
            if (verdict(probe) == Verdict::Outside) return b;
        }
        return *std::min_element(offer.begin(), offer.end());
    };
}

PickStrategy pick_smallest() {
    return [](const DimGameTranscript&, const std::vector<Position>& offer) {
        return *std::min_element(offer.begin(), offer.end());
    };
}

OfferStrategy offer_full(int block, int arity) {
    return [block, arity](const DimGameTranscript&) {
        std::vector<Position> out;
        std::vector<int> word((std::size_t)block, 0);
        while (true) {
            out.push_back(Position(word, arity));
            int i = block - 1;
            while (i >= 0) {
                if (++word[(std::size_t)i] < arity) break;
                word[(std::size_t)i] = 0;
                --i;
            }
            if (i < 0) break;
        }
        return out;
    };
}

DimGameTranscript run_dim_game(const OfferStrategy& s1, const PickStrategy& s2,
                               std::size_t steps, int arity) {
    DimGameTranscript t;
    t.arity = arity;
    for (std::size_t n = 0; n < steps; ++n) {
        std::vector<Position> offer = s1(t);
        if (offer.empty()) throw IllegalOffer("empty offer at step " + std::to_string(n));
        int block = (int)offer.front().len();
        if (n == 0) {
            if (block < 1) throw IllegalOffer("block length must be >= 1");
            t.block = block;
        } else if (block != t.block) {
            throw IllegalOffer("block length changed after step 0");
        }
        for (const Position& w : offer) {
            if ((int)w.len() != t.block || w.arity() != arity)
                throw IllegalOffer("offer contains a word of wrong shape");
        }
        Position pick = s2(t, offer);
        if (std::find(offer.begin(), offer.end(), pick) == offer.end())
            throw IllegalOffer("pick outside the offer at step " + std::to_string(n));
        t.steps.push_back({std::move(offer), std::move(pick)});
    }
    return t;
}

SandwichResult value_sandwich_fm(const IndexSet& m_set, std::size_t steps) {
    TargetOracle fm = make_fm(m_set);
    PickStrategy escape = sigma2_avoid(fm);
    SandwichResult out;

    DimGameTranscript guaranteed = run_dim_game(sigma1_fm(m_set), escape, steps);
    out.lower = payoff_prefix(guaranteed, fm, steps).value;

    // adversarial Player 1 variants trying to beat the escaper
    std::vector<OfferStrategy> variants = {sigma1_fm(m_set), offer_full(1), offer_full(2)};
    out.upper = -1.0;
    for (const auto& v : variants) {
        DimGameTranscript t = run_dim_game(v, escape, steps);
        out.upper = std::max(out.upper, payoff_prefix(t, fm, steps).value);
    }
    out.upper = std::max(out.upper, out.lower);
    return out;
}

bool check_offer_legality(const BallOffer& offer, OfferLegality mode) {
    if (offer.balls.empty()) throw IllegalOffer("empty ball offer");
    const Rational& r0 = offer.balls.front().radius;
    for (const Ball& b : offer.balls)
        if (b.radius != r0) throw IllegalOffer("mixed radii in one offer");
    for (std::size_t i = 0; i < offer.balls.size(); ++i) {
        for (std::size_t j = i + 1; j < offer.balls.size(); ++j) {
            const Ball& a = offer.balls[i];
            const Ball& b = offer.balls[j];
            if (mode == OfferLegality::Disjoint) {
                if (!a.interior_disjoint(b)) return false;
            } else {
                Rational sep = offer.separation ? *offer.separation : r0;
                if (!(a.gap(b) > sep)) return false;
            }
        }
    }
    return true;
}

}  // namespace canopy
