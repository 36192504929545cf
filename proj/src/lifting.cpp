#include "canopy/lifting.hpp"

#include <stdexcept>

namespace canopy {

namespace {

constexpr std::uint64_t kScanLimit = 1u << 20;

// n_k, the k-th member of N
std::uint64_t member_at(const IndexSet& n_set, std::size_t k) {
    std::size_t seen = 0;
    for (std::uint64_t i = 0; i < kScanLimit; ++i) {
        if (n_set(i)) {
            if (seen == k) return i;
            ++seen;
        }
    }
    throw std::invalid_argument("splice index set too sparse to enumerate");
}

}  // namespace

LiftMaps make_lift(IndexSet n_set, IndexSet m_set, std::uint64_t validate_horizon) {
    validate_splice_sets(n_set, m_set, validate_horizon);
    return LiftMaps{std::move(n_set), std::move(m_set)};
}

PureStrategy LiftMaps::expand(const PureStrategy& base) const {
    PureStrategy out;
    out.side = base.side;
    out.name = "expand[" + base.name + "]";
    auto n = n_set;
    out.choose = [n, base](const Position& p) -> int {
        std::uint64_t stage = p.len();
        if (!n(stage)) return 0;
        std::vector<int> sub;
        for (std::uint64_t i = 0; i < stage; ++i)
            if (n(i)) sub.push_back(p[(std::size_t)i]);
        return base(Position(sub, p.arity()));
    };
    return out;
}

PureStrategy LiftMaps::restrict_(const PureStrategy& spliced) const {
    PureStrategy out;
    out.side = spliced.side;
    out.name = "restrict[" + spliced.name + "]";
    auto n = n_set;
    out.choose = [n, spliced](const Position& q) -> int {
        std::size_t k = q.len();
        std::uint64_t stage = member_at(n, k);
        std::vector<int> full((std::size_t)stage, 0);
        for (std::size_t i = 0; i < k; ++i) full[(std::size_t)member_at(n, i)] = q[i];
        return spliced(Position(full, q.arity()));
    };
    return out;
}

}  // namespace canopy
