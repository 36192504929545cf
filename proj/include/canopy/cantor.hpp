#pragma once

#include "canopy/rational.hpp"
#include "canopy/target.hpp"

namespace canopy {

/// Bracket for the smallest element of the digit-restricted base-5 set
/// (digits 1 and 3 only) that is >= a query point. exists == false means no
/// such element; lo == hi means the successor was resolved exactly.
struct CantorBracket {
    bool exists = false;
    Rational lo, hi;
    bool exact() const { return exists && lo == hi; }
};

/// min { x in C : x >= a }, resolved to at most max_digits base-5 digits.
/// Exact whenever the query falls below a gap or the residual orbit cycles
/// (which happens for every rational that lies in the set).
CantorBracket cantor_successor(const Rational& a, int max_digits = 64);

/// Exact membership for rationals, as far as max_digits can resolve it.
bool cantor_contains(const Rational& x, int max_digits = 64);

/// Classify the closed interval [lo, hi] against the set: Outside iff
/// certified disjoint, Inside only for a degenerate interval at a member
/// point, Boundary otherwise (including unresolved at the digit cap).
Verdict cantor_interval_oracle(const Rational& lo, const Rational& hi, int max_digits = 64);

/// The game target on the complete binary tree: a position p of length n is
/// read as the dyadic interval [k/2^n, (k+1)/2^n] and classified against the
/// set via the interval oracle.
TargetOracle make_cantor_wc(int max_digits = 64);

inline Rational cantor_min() { return Rational(1, 4); }
inline Rational cantor_max() { return Rational(3, 4); }

}  // namespace canopy
