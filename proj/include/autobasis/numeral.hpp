#pragma once

// Base-k numerals and representation languages.
//
// A Dfa denotes the set of values of the words it accepts. Most number
// theoretic operations first bring a machine into canonical form: the minimal
// Dfa accepting exactly the canonical expansions (no trailing zero digit in
// LSD order, and the empty word for 0).

#include "autobasis/automaton.hpp"
#include "autobasis/bignum.hpp"

#include <functional>
#include <vector>

namespace autobasis {

/// Canonical LSD-first expansion; the empty word for 0.
Word encode(const BigNat& n, unsigned base);

/// Value of an LSD-first word; trailing zeros are ignored.
BigNat decode(std::span<const Digit> word, unsigned base);

bool is_canonical(std::span<const Digit> word);

/// Accepts exactly the canonical words of base k.
Dfa canonical_language(unsigned base);

/// Accepts {w 0^j : w in L(a), j >= 0}.
Dfa zero_closure(const Dfa& a);

/// Minimal machine for the canonical expansions of the values a accepts.
Dfa canonicalize(const Dfa& a);

/// Minimal machine accepting every word whose value a accepts
/// (all zero paddings of every member).
Dfa value_closure(const Dfa& a);

bool contains(const Dfa& a, const BigNat& n);

/// Members n <= bound in increasing order, duplicates removed.
std::vector<BigNat> set_members(const Dfa& a, const BigNat& bound);

/// Visits members in increasing order until `visit` returns false or the
/// set is exhausted. Does not terminate on infinite sets unless stopped.
void for_each_member(const Dfa& a, const std::function<bool(const BigNat&)>& visit);

}  // namespace autobasis
