#include "canopy/target.hpp"

#include <stdexcept>
#include <vector>

namespace canopy {

void validate_splice_sets(const IndexSet& n_set, const IndexSet& m_set,
                          std::uint64_t horizon) {
    // pairing law: n_{2l} even and n_{2l+1} = n_{2l} + 1
    std::vector<std::uint64_t> listed;
    for (std::uint64_t i = 0; i < horizon; ++i)
        if (n_set(i)) listed.push_back(i);
    for (std::size_t k = 0; k + 1 < listed.size(); k += 2) {
        if (listed[k] % 2 != 0 || listed[k + 1] != listed[k] + 1)
            throw std::invalid_argument("splice index set fails the even/odd pairing law");
    }
    if (listed.size() % 2 == 1 && listed.back() % 2 != 0 && listed.back() + 1 < horizon)
        throw std::invalid_argument("splice index set fails the even/odd pairing law");
    for (std::uint64_t i = 0; i < horizon; ++i) {
        if (!m_set(i)) continue;
        if (i % 2 != 0) throw std::invalid_argument("free index set contains odd indices");
        if (n_set(i)) throw std::invalid_argument("free index set intersects the splice set");
    }
}

TargetOracle make_wdelta(TargetOracle w, const WdeltaParams& params) {
    validate_splice_sets(params.n_set, params.m_set, params.validate_horizon);

    TargetOracle s;
    s.tree = w.tree;
    s.name = "Wdelta[" + w.name + "]";
    auto n_member = params.n_set.member;
    auto m_member = params.m_set.member;
    auto w_verdict = w.verdict;
    int arity = w.tree.arity;
    s.verdict = [n_member, m_member, w_verdict, arity](const Position& p) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < p.len(); ++i) {
            bool in_n = n_member(i);
            if (i % 2 == 0 && !in_n && !m_member(i) && p[i] != 0) return Verdict::Outside;
            if (in_n) sub.push_back(p[i]);
        }
        Verdict wv = w_verdict(Position(sub, arity));
        if (wv == Verdict::Outside) return Verdict::Outside;
        // Inside would require certifying the zero constraints at every
        // future index, which no finite prefix can do here.
        return Verdict::Boundary;
    };
    return s;
}

IndexSet default_wdelta_n() { return paired_powers_set(4); }

IndexSet default_wdelta_m(const Rational& delta) {
    if (delta < Rational(1, 2) || delta > 1)
        throw std::invalid_argument("splice density must lie in [1/2, 1]");
    Rational d = delta - Rational(1, 2);
    IndexSet n = default_wdelta_n();
    IndexSet r;
    r.claimed_density = d;
    r.name = "wdelta_free_" + rat_to_string(delta);
    if (d == 0) {
        // {4^j + 2 : j >= 1}: infinite, density zero, disjoint from N.
        r.member = [](std::uint64_t i) {
            if (i < 6 || i % 2 != 0) return false;
            std::uint64_t p = 4;
            while (p + 2 <= i) {
                if (p + 2 == i) return true;
                if (p > UINT64_MAX / 4) break;
                p *= 4;
            }
            return false;
        };
        return r;
    }
    // Beatty-style staircase of even numbers with density d among the
    // naturals, thinned by N (which has density zero).
    Rational twod = 2 * d;
    auto n_member = n.member;
    r.member = [twod, n_member](std::uint64_t i) {
        if (i % 2 != 0 || n_member(i)) return false;
        std::uint64_t k = i / 2;
        return floor_rat(Rational((long long)(k + 1)) * twod) >
               floor_rat(Rational((long long)k) * twod);
    };
    return r;
}

}  // namespace canopy
