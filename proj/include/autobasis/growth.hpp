#pragma once

// Polynomial versus exponential growth of regular languages.

#include "autobasis/automaton.hpp"

#include <cstddef>
#include <variant>

namespace autobasis {

/// Words with |t| == |u|, t != u and s{t,u}*v contained in the language.
struct ExpWitness {
    Word s, t, u, v;
};

struct PolynomialGrowth {
    unsigned degree = 0;
};

struct ExponentialGrowth {
    ExpWitness witness;
};

struct GrowthReport {
    std::variant<PolynomialGrowth, ExponentialGrowth> verdict;
    /// States of the trimmed machine that was analyzed.
    std::size_t state_count = 0;

    bool polynomial() const { return std::holds_alternative<PolynomialGrowth>(verdict); }
};

/// Linear in the size of a Dfa. An Nfa is determinized first: with
/// nondeterminism, two cycles through one state may carry the same label.
GrowthReport classify(const Dfa& a);
GrowthReport classify(const Nfa& a);

/// d such that h_L(n) = Theta(n^d). Throws PreconditionError on
/// exponential growth. The empty language reports 0.
unsigned degree(const Dfa& a);

/// Witness with |s|, |v| < m and |t|, |u| < 3m for the m-state trimmed
/// machine. Throws PreconditionError on polynomial growth.
ExpWitness exp_witness(const Dfa& a);
ExpWitness exp_witness(const Nfa& a);

/// True when the set's canonical representation language grows
/// polynomially.
bool is_sparse(const Dfa& set_automaton);

}  // namespace autobasis
