#pragma once

// Finite automata over the digit alphabet {0, ..., k-1}.
//
// Words are read least significant digit first throughout the library. A Dfa
// is always complete; an Nfa may be partial and carries sets of initial
// states. Both are values: every operation below returns a fresh machine.

#include "autobasis/bignum.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace autobasis {

using State = std::uint32_t;
using Digit = std::uint32_t;

/// A word over the digit alphabet, least significant digit first.
using Word = std::vector<Digit>;

class Dfa {
public:
    /// `delta[q * base + d]` is the successor of `q` on digit `d`.
    Dfa(unsigned base, std::vector<State> delta, State initial, std::vector<bool> finals);

    /// Machine accepting the empty language (one non-final sink state).
    static Dfa empty_language(unsigned base);
    /// Machine accepting every word (one final state).
    static Dfa all_words(unsigned base);

    unsigned base() const noexcept { return base_; }
    std::size_t size() const noexcept { return finals_.size(); }
    State initial() const noexcept { return initial_; }
    State next(State q, Digit d) const noexcept { return delta_[std::size_t(q) * base_ + d]; }
    bool is_final(State q) const noexcept { return finals_[q]; }

    /// Runs `word` from the initial state. Digits must be < base.
    State run(std::span<const Digit> word) const;
    State run_from(State q, std::span<const Digit> word) const;
    bool accepts(std::span<const Digit> word) const { return is_final(run(word)); }

    std::span<const State> transitions() const noexcept { return delta_; }
    const std::vector<bool>& finals() const noexcept { return finals_; }

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    unsigned base_;
    std::vector<State> delta_;
    State initial_;
    std::vector<bool> finals_;
};

class Nfa {
public:
    Nfa(unsigned base, std::size_t states);

    unsigned base() const noexcept { return base_; }
    std::size_t size() const noexcept { return finals_.size(); }

    State add_state(bool final = false);
    void add_transition(State from, Digit d, State to);
    void set_initial(State q, bool initial = true);
    void set_final(State q, bool final = true);

    const std::vector<State>& successors(State q, Digit d) const {
        return delta_[std::size_t(q) * base_ + d];
    }
    bool is_initial(State q) const { return initials_[q]; }
    bool is_final(State q) const { return finals_[q]; }
    std::vector<State> initial_states() const;

    bool accepts(std::span<const Digit> word) const;

    static Nfa from_dfa(const Dfa& a);
    /// Reverses every edge and swaps initial and final states.
    Nfa reversed() const;

private:
    void check_state(State q) const;

    unsigned base_;
    std::vector<std::vector<State>> delta_;
    std::vector<bool> initials_;
    std::vector<bool> finals_;
};

/// Upper bound on subset states created by any determinization. Reads
/// AUTOBASIS_MAX_STATES on first use; defaults to 2'000'000.
std::size_t max_subset_states();
void set_max_subset_states(std::size_t limit);

/// Subset construction over reachable subsets; canonical (sorted) subsets
/// make the result a pure function of the input.
Dfa determinize(const Nfa& a);

/// Minimal complete Dfa for L(a), states renumbered in BFS order.
Dfa minimize(const Dfa& a);

Dfa complement(const Dfa& a);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);

/// Keeps only states that are reachable and co-reachable.
Nfa trim(const Nfa& a);

bool is_empty(const Dfa& a);
bool is_finite(const Dfa& a);
bool equivalent(const Dfa& a, const Dfa& b);

/// Accepted words of length <= max_len, ordered by length, then
/// lexicographically on the digit sequence.
std::vector<Word> enumerate(const Dfa& a, std::size_t max_len);

/// |L(a) ∩ Σ^n|.
BigNat count_words_of_length(const Dfa& a, std::size_t n);

/// A shortest accepted word, ties broken lexicographically.
std::optional<Word> shortest_word(const Dfa& a);

}  // namespace autobasis
