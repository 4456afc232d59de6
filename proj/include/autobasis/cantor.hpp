#pragma once

// Exact-rational checks on Cantor sets C(u; y, z): the reals whose base-k
// expansion reads 0.u w1 w2 w3 ... with every block w_i in {y, z}.
//
// Digit words in this module are written most significant digit first, as
// they appear after the radix point.

#include "autobasis/automaton.hpp"
#include "autobasis/bignum.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace autobasis {

struct CantorParams {
    unsigned k = 3;
    Word u, y, z;  ///< y and z are swapped if needed so that Y < Z
    std::optional<Word> v;
    unsigned L = 0;  ///< |u|
    unsigned s = 0;  ///< |y| == |z|
    unsigned K = 0;  ///< |v|, 0 when absent
    BigRational Y, Z, U;
    BigRational alpha;  ///< Y / (1 - k^-s)
    BigRational beta;   ///< Z / (1 - k^-s)
    bool swapped = false;
};

CantorParams cantor_params(unsigned k, Word u, Word y, Word z, std::optional<Word> v = {});

struct Interval {
    BigRational lo, hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct DissectionSpec {
    BigRational ratio;  ///< in (0, 1/2]
    BigRational lo, hi;
    unsigned depth = 0;
};

inline constexpr unsigned kMaxLevelDepth = 20;

/// The 2^depth closed intervals of level `depth`, left to right.
std::vector<Interval> level_set(const DissectionSpec& spec);

/// Checks C'_{n+1} = S1(C'_n) ∪ S2(C'_n) for n < depth, where C' is the
/// central Cantor construction on [alpha, beta] with ratio k^-s and
/// S1(x) = k^-s x + Y, S2(x) = k^-s x + Z. Uses the stored fields as given.
bool check_selfsimilarity(const CantorParams& p, unsigned depth);

struct NotInterval {
    Interval gap;  ///< open gap of the m-fold sum
    unsigned depth = 0;
};

struct Inconclusive {
    unsigned searched_depth = 0;
};

using MfoldResult = std::variant<Interval, NotInterval, Inconclusive>;

/// The m-fold sum of C(u; y, z). For m >= k^s - 1 it is the interval
/// m[U + k^-L alpha, U + k^-L beta]; below that a gap is searched for in
/// the level sets up to depth 10.
MfoldResult mfold_interval(const CantorParams& p, unsigned m);

/// Least m >= 1 with (m+1)(U + k^-L alpha) <= m(U + k^-L beta).
BigNat overlap_threshold(const CantorParams& p);

/// k^(2L + 2s + t + 1).
BigNat summand_count_bound(const CantorParams& p, unsigned t);

/// Membership of a rational in C(u; y, z).
bool in_cantor_set(const CantorParams& p, const BigRational& x);

/// Writes gamma as a sum of at most max_terms elements of C(u; y, z) with
/// eventually periodic expansions. nullopt if no term count in range works.
std::optional<std::vector<BigRational>> realize_as_sum(const CantorParams& p,
                                                       const BigRational& gamma,
                                                       const BigNat& max_terms);

struct GridCheck {
    std::size_t points = 0;
    std::size_t realized = 0;
    std::size_t max_terms_used = 0;
};

/// Realizes every point of [k^(L+s+1), k^(L+s+1+t)] on a grid of the given
/// step within summand_count_bound(p, t) terms, verifying each decomposition.
GridCheck verify_hare_grid(const CantorParams& p, unsigned t, const BigRational& step);

}  // namespace autobasis
