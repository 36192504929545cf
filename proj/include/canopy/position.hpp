#pragma once

#include "canopy/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace canopy {

/// A finite word over {0, ..., arity-1}: the universal currency for tree
/// positions, cylinders and game histories.
class Position {
  public:
    Position() = default;
    explicit Position(int arity) : arity_(check_arity(arity)) {}
    Position(std::vector<int> symbols, int arity = 2)
        : sym_(std::move(symbols)), arity_(check_arity(arity)) {
        for (int s : sym_)
            if (s < 0 || s >= arity_)
                throw std::invalid_argument("symbol out of alphabet range");
    }
    Position(std::initializer_list<int> symbols, int arity = 2)
        : Position(std::vector<int>(symbols), arity) {}

    static Position root(int arity = 2) { return Position(arity); }

    std::size_t len() const { return sym_.size(); }
    bool empty() const { return sym_.empty(); }
    int arity() const { return arity_; }
    int operator[](std::size_t i) const { return sym_[i]; }
    const std::vector<int>& symbols() const { return sym_; }

    bool player_one_to_move() const { return len() % 2 == 0; }

    Position child(int a) const {
        if (a < 0 || a >= arity_) throw std::invalid_argument("symbol out of alphabet range");
        Position q = *this;
        q.sym_.push_back(a);
        return q;
    }

    void push(int a) {
        if (a < 0 || a >= arity_) throw std::invalid_argument("symbol out of alphabet range");
        sym_.push_back(a);
    }
    void pop() { sym_.pop_back(); }

    Position concat(const Position& rhs) const {
        require_same_alphabet(rhs);
        Position q = *this;
        q.sym_.insert(q.sym_.end(), rhs.sym_.begin(), rhs.sym_.end());
        return q;
    }

    Position prefix(std::size_t n) const {
        if (n > len()) throw std::out_of_range("prefix longer than position");
        return Position(std::vector<int>(sym_.begin(), sym_.begin() + n), arity_);
    }

    /// *this <= rhs in the prefix order.
    bool prefix_of(const Position& rhs) const {
        require_same_alphabet(rhs);
        if (len() > rhs.len()) return false;
        for (std::size_t i = 0; i < len(); ++i)
            if (sym_[i] != rhs.sym_[i]) return false;
        return true;
    }

    bool operator==(const Position& rhs) const {
        return arity_ == rhs.arity_ && sym_ == rhs.sym_;
    }
    bool operator!=(const Position& rhs) const { return !(*this == rhs); }
    bool operator<(const Position& rhs) const {  // length-lex, for ordered containers
        if (len() != rhs.len()) return len() < rhs.len();
        return sym_ < rhs.sym_;
    }

    std::string str() const {
        std::string out = "<";
        for (std::size_t i = 0; i < sym_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(sym_[i]);
        }
        return out + ">";
    }

    void require_same_alphabet(const Position& rhs) const {
        if (arity_ != rhs.arity_) throw std::invalid_argument("mismatched alphabet sizes");
    }

  private:
    static int check_arity(int m) {
        if (m < 2) throw std::invalid_argument("alphabet size must be >= 2");
        return m;
    }

    std::vector<int> sym_;
    int arity_ = 2;
};

/// Index of the first symbol where x and y differ, if visible on the common
/// prefix length.
inline std::optional<std::size_t> first_disagreement(const Position& x, const Position& y) {
    x.require_same_alphabet(y);
    std::size_t n = std::min(x.len(), y.len());
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] != y[i]) return i;
    return std::nullopt;
}

/// d_m between the plays extending x and y: m^{-n} at the first disagreement
/// index n. Prefixes that agree on their common length are Indistinguishable
/// (nullopt) -- the caller must deepen before claiming a distance.
inline std::optional<Rational> metric_distance(const Position& x, const Position& y) {
    auto n = first_disagreement(x, y);
    if (!n) return std::nullopt;
    return pow_rat(Rational(x.arity()), -(long long)*n);
}

/// diam of the cylinder below p under d_m.
inline Rational cylinder_diameter(const Position& p) {
    return pow_rat(Rational(p.arity()), -(long long)p.len());
}

}  // namespace canopy
