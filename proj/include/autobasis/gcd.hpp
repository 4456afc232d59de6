#pragma once

// gcd of an automatic set, decided with divisibility automata.

#include "autobasis/automaton.hpp"
#include "autobasis/bignum.hpp"

#include <vector>

namespace autobasis {

struct GcdReport {
    BigNat g;
    BigNat smallest_member;
    /// Distinct members below k^(2m+2) with gcd 1; empty unless g == 1.
    std::vector<BigNat> witnesses;
    /// States of the minimal canonical machine.
    std::size_t state_count = 0;
};

/// Least nonzero member. Throws PreconditionError when the set is a subset of {0}.
BigNat smallest_member(const Dfa& a);

/// Canonical representations of the multiples of d.
Dfa divisibility_automaton(unsigned base, std::uint32_t d);

/// Whether every member of the set is a multiple of d.
bool divides_all(const Dfa& a, std::uint32_t d);

GcdReport gcd_of_set(const Dfa& a);

/// Greedy certificate: members taken in increasing order, each kept when it
/// lowers the running gcd, until the gcd reaches 1.
std::vector<BigNat> gcd_witnesses(const Dfa& a);

}  // namespace autobasis
