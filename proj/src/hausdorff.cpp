#include "canopy/hausdorff.hpp"

#include <cmath>
#include <stdexcept>

namespace canopy {

namespace {

void count_rec(const TargetOracle& s, Position& p, int max_depth,
               std::vector<std::uint64_t>& out) {
    out[p.len()] += 1;
    if ((int)p.len() >= max_depth) return;
    for (int a : s.tree.actions(p)) {
        p.push(a);
        if (s.verdict(p) != Verdict::Outside) count_rec(s, p, max_depth, out);
        p.pop();
    }
}

}  // namespace

std::vector<std::uint64_t> box_counts_range(const TargetOracle& s, int max_depth) {
    std::vector<std::uint64_t> out((std::size_t)max_depth + 1, 0);
    bool all_exact = true;
    if (s.survivor_count) {
        for (int n = 0; n <= max_depth; ++n) {
            auto c = s.survivor_count(n);
            if (!c) {
                all_exact = false;
                break;
            }
            out[(std::size_t)n] = *c;
        }
        if (all_exact) return out;
        std::fill(out.begin(), out.end(), 0);
    }
    Position p = s.tree.root();
    if (s.verdict(p) != Verdict::Outside) count_rec(s, p, max_depth, out);
    return out;
}

std::uint64_t box_count(const TargetOracle& s, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    if (s.survivor_count) {
        auto c = s.survivor_count(depth);
        if (c) return *c;
    }
    return box_counts_range(s, depth).back();
}

DimensionEstimate dim_estimate(const TargetOracle& s, int n_min, int n_max,
                               bool endpoints_only) {
    if (n_min >= n_max) throw std::invalid_argument("need n_min < n_max");
    auto all = box_counts_range(s, n_max);
    DimensionEstimate est;
    est.n_min = n_min;
    est.n_max = n_max;
    est.endpoints_only = endpoints_only;
    est.counts.assign(all.begin() + n_min, all.end());
    if (est.counts.front() == 0) throw EmptyTargetError();

    double logm = std::log2((double)s.tree.arity);
    std::vector<double> ys;
    for (std::uint64_t c : est.counts) ys.push_back(std::log2((double)c) / logm);

    for (std::size_t i = 0; i + 1 < est.counts.size(); ++i) {
        if (est.counts[i + 1] < est.counts[i]) est.counts_monotone = false;
        if (est.counts[i + 1] > est.counts[i] * (std::uint64_t)s.tree.arity)
            est.submultiplicative = false;
    }

    if (endpoints_only) {
        est.slope = (ys.back() - ys.front()) / (double)(n_max - n_min);
        est.residual = 0.0;
        return est;
    }
    double n = (double)ys.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        double x = (double)(n_min + (int)i);
        sx += x;
        sy += ys[i];
        sxx += x * x;
        sxy += x * ys[i];
    }
    double denom = n * sxx - sx * sx;
    est.slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - est.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        double x = (double)(n_min + (int)i);
        double r = ys[i] - (est.slope * x + intercept);
        ss += r * r;
    }
    est.residual = std::sqrt(ss / n);
    return est;
}

namespace {

PowerSum cover_cost(const TargetOracle& s, const PowerContext& ctx, Position& p,
                    int max_depth) {
    if (s.verdict(p) == Verdict::Outside) return PowerSum::zero(ctx);
    PowerSum own = PowerSum::diam_pow(ctx, (long long)p.len());
    if ((int)p.len() >= max_depth) return own;
    PowerSum children = PowerSum::zero(ctx);
    for (int a : s.tree.actions(p)) {
        p.push(a);
        children += cover_cost(s, ctx, p, max_depth);
        p.pop();
    }
    return min(own, children);
}

}  // namespace

PowerSum measure_estimate(const TargetOracle& s, const Rational& delta, int max_depth) {
    if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
    PowerContext ctx = PowerContext::make(s.tree.arity, delta);
    Position p = s.tree.root();
    return cover_cost(s, ctx, p, max_depth);
}

CylinderMeasure uniform_on(const TargetOracle& s) {
    CylinderMeasure mu;
    mu.name = "uniform[" + s.name + "]";
    auto verdict = s.verdict;
    auto tree = s.tree;
    mu.mass = [verdict, tree](const Position& p) -> Rational {
        Rational mass(1);
        Position q = tree.root();
        if (verdict(q) == Verdict::Outside) return Rational(0);
        for (std::size_t i = 0; i < p.len(); ++i) {
            std::uint64_t alive = 0;
            bool chosen_alive = false;
            for (int a : tree.actions(q)) {
                Position c = q.child(a);
                if (verdict(c) != Verdict::Outside) {
                    ++alive;
                    if (a == p[i]) chosen_alive = true;
                }
            }
            if (!chosen_alive || alive == 0) return Rational(0);
            mass /= (long long)alive;
            q.push(p[i]);
        }
        return mass;
    };
    return mu;
}

namespace {

bool mass_bound_rec(const CylinderMeasure& mu, const TargetOracle& s, Position& p,
                    const Rational& bound_pow, long long a_num,
                    unsigned long long b_den, int depth) {
    // check mass^b <= bound^b * diam^(a*b/b) = bound^b * m^(-len*a), exact
    Rational mass = mu.mass(p);
    if (mass < 0) return false;
    Rational lhs = pow_rat(mass, (long long)b_den);
    Rational rhs =
        bound_pow * pow_rat(Rational(p.arity()), -a_num * (long long)p.len());
    if (lhs > rhs) return false;
    if ((int)p.len() >= depth) return true;
    for (int a : s.tree.actions(p)) {
        p.push(a);
        if (s.verdict(p) != Verdict::Outside) {
            if (!mass_bound_rec(mu, s, p, bound_pow, a_num, b_den, depth)) return false;
        }
        p.pop();
    }
    return true;
}

}  // namespace

bool mass_bound_certificate(const CylinderMeasure& mu, const TargetOracle& s,
                            const Rational& delta, const Rational& bound, int depth) {
    if (bound <= 0) throw std::invalid_argument("bound must be positive");
    if (delta < 0) throw std::invalid_argument("exponent must be >= 0");
    long long a_num = numerator(delta).convert_to<long long>();
    unsigned long long b_den = denominator(delta).convert_to<unsigned long long>();
    Rational bound_pow = pow_rat(bound, (long long)b_den);
    Position p = s.tree.root();
    if (s.verdict(p) == Verdict::Outside) return true;
    return mass_bound_rec(mu, s, p, bound_pow, a_num, b_den, depth);
}

std::uint64_t packing_number_linf(int dim, const Rational& big_r, const Rational& r) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (r <= 0 || r > big_r) throw std::invalid_argument("need 0 < r <= R");
    BigInt q = floor_rat(big_r / r);
    BigInt res = pow_int(q, (unsigned long long)dim);
    if (res > UINT64_MAX) throw std::overflow_error("packing number exceeds 64 bits");
    return res.convert_to<std::uint64_t>();
}

namespace {

// A closed cube [-r, r]^d is covered by the 2^d cubes with centers at
// (+-r/2, ..., +-r/2) and radius r/2; per axis the two halves meet at 0.
bool half_radius_cover_exact(int dim, const Rational& r) {
    Rational half = r / 2;
    // axis check: [-r,0] union [0,r] = [-r,r]
    Rational left_lo = -half - half, left_hi = -half + half;
    Rational right_lo = half - half, right_hi = half + half;
    bool axis_ok = left_lo == -r && right_hi == r && left_hi >= right_lo;
    return axis_ok && dim >= 1;  // product of per-axis covers covers the product
}

}  // namespace

PackingLemmaReport verify_packing_lemma(int dim) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("dimension must be in {1,2,3}");
    PackingLemmaReport rep;
    rep.dim = dim;
    rep.packed_in_triple = packing_number_linf(dim, Rational(3), Rational(1));
    std::uint64_t doubling = 1ULL << dim;  // 2^d
    rep.cube_bound = doubling * doubling * doubling;
    rep.doubling_witnessed = half_radius_cover_exact(dim, Rational(1));
    rep.pass = rep.doubling_witnessed && rep.packed_in_triple <= rep.cube_bound;
    return rep;
}

}  // namespace canopy
