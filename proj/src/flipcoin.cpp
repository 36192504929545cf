#include "canopy/flipcoin.hpp"

namespace canopy {

Position isometry_phi(const Position& x, const PureStrategy& s1) {
    std::vector<int> out(x.len(), 0);
    for (std::size_t i = 0; i < x.len(); ++i) {
        if (i % 2 == 0) {
            if (x[i] != s1(x.prefix(i))) throw NotInSubcanopy(x);
        } else {
            out[i] = x[i];
        }
    }
    return Position(out, x.arity());
}

Rational cylinder_probability(const Position& p, const PureStrategy& s1) {
    if (p.arity() != 2) throw std::invalid_argument("binary tree required");
    if (p.len() % 2 != 0) throw std::invalid_argument("even-length position required");
    for (std::size_t i = 0; i < p.len(); i += 2)
        if (p[i] != s1(p.prefix(i))) return Rational(0);
    return pow_rat(Rational(2), -(long long)(p.len() / 2));
}

Position enclosing_even_cylinder(const Position& x, const Position& y) {
    auto n = first_disagreement(x, y);
    if (!n) throw std::invalid_argument("indistinguishable prefixes");
    std::size_t cut = (*n % 2 == 0) ? *n : *n - 1;
    return x.prefix(cut);
}

McCurve mc_flipcoin(const TargetOracle& s, const PureStrategy& s1, int depth,
                    std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    McCurve curve;
    curve.trials = trials;
    curve.seed = seed;
    curve.depth = depth;
    curve.survivors.assign((std::size_t)depth + 1, 0);
    int hist_depth = depth >= 8 ? 8 : 0;
    if (hist_depth) curve.depth8_histogram.assign(1u << hist_depth, 0);

    for (std::uint64_t t = 0; t < trials; ++t) {
        Stream stream(derive_stream(seed, t));
        Position p = s.tree.root();
        for (int n = 0; n < depth; ++n) {
            int a;
            if (n % 2 == 0) {
                a = s1(p);
                if (!s.tree.contains(p.child(a))) throw IllegalMove(p, a);
            } else {
                std::vector<int> acts = s.tree.actions(p);
                a = acts[stream.below(acts.size())];
            }
            p.push(a);
        }
        if (hist_depth) {
            unsigned idx = 0;
            for (int i = 0; i < hist_depth; ++i) idx = (idx << 1) | (unsigned)p[(std::size_t)i];
            curve.depth8_histogram[idx] += 1;
        }
        // verdicts are refinement-monotone along the play, so the first
        // Outside depth can be found by bisection
        int lo = 0, hi = depth, first_out = depth + 1;
        if (s.verdict(p) == Verdict::Outside) {
            while (lo < hi) {
                int mid = (lo + hi) / 2;
                if (s.verdict(p.prefix((std::size_t)mid)) == Verdict::Outside)
                    hi = mid;
                else
                    lo = mid + 1;
            }
            first_out = lo;
        }
        for (int d = 0; d <= depth && d < first_out; ++d) curve.survivors[(std::size_t)d] += 1;
    }
    return curve;
}

}  // namespace canopy
