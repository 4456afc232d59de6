#pragma once

// Automata for sums of automatic sets.
//
// Summands are simulated in parallel on zero-padded representations while an
// addition carry is threaded from the least significant digit up. Every
// machine returned here is canonical and minimal.

#include "autobasis/automaton.hpp"
#include "autobasis/bignum.hpp"

#include <vector>

namespace autobasis {

enum class SumMode {
    Exact,   ///< x_1 + ... + x_j
    AtMost,  ///< union over i = 1..j of x_1 + ... + x_i
};

struct SumSpec {
    std::vector<Dfa> summands;
    /// Admit only tuples of pairwise distinct values. Requires all summands
    /// to accept the same set.
    bool distinct = false;
    SumMode mode = SumMode::Exact;

    static SumSpec homogeneous(const Dfa& set, unsigned order, SumMode mode = SumMode::Exact,
                               bool distinct = false);
};

Dfa sum_automaton(const SumSpec& spec);

/// Exact sums s_1 + ... + s_i of growing prefixes, computed on demand. Each
/// prefix is built from already minimized shorter prefixes or directly from
/// the summands, whichever gives the smaller parallel product.
class PrefixSums {
public:
    explicit PrefixSums(std::vector<Dfa> summands);
    std::size_t size() const { return summands_.size(); }
    /// 1 <= i <= size().
    const Dfa& exact(std::size_t i);

private:
    std::vector<Dfa> summands_;
    std::vector<Dfa> done_;
    bool homogeneous_ = true;
};

/// {x + y : x in A, y in B}.
Dfa sum_pair(const Dfa& a, const Dfa& b);

/// {n + c : n in S}.
Dfa add_constant(const Dfa& a, const BigNat& c);

/// {n : n + c in T}.
Dfa shift_preimage(const Dfa& t, const BigNat& c);

/// {d n : n in S}, d >= 1.
Dfa scale_by_constant(const Dfa& a, std::uint32_t d);

/// Number of ordered tuples (x_1, ..., x_j), x_i in S_i, summing to n.
/// Exact mode only.
BigNat count_representations(const BigNat& n, const SumSpec& spec);

/// Reachable states of the parallel j-summand simulation (no subset
/// construction), for inspecting the carry range.
struct ProductStats {
    std::size_t reachable = 0;
    unsigned max_carry = 0;
};
ProductStats product_stats(const SumSpec& spec);

}  // namespace autobasis
