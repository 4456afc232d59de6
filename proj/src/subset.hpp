#pragma once

// Generic on-the-fly subset construction. NFA states are opaque 64-bit codes
// produced by a successor callback, so product machines (sums, shifts,
// reversals) are determinized without materializing the NFA first.

#include "autobasis/automaton.hpp"
#include "autobasis/error.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

namespace autobasis::detail {

using Code = std::uint64_t;
using CodeSet = std::vector<Code>;

struct CodeSetHash {
    std::size_t operator()(const CodeSet& s) const noexcept {
        return boost::hash_range(s.begin(), s.end());
    }
};

inline void normalize(CodeSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

/// `successors(code, digit, out)` appends the successor codes of `code`;
/// `accepting(code)` tells whether a single NFA state is final.
template <class Successors, class Accepting>
Dfa subset_construct(unsigned base, CodeSet initial, Successors&& successors,
                     Accepting&& accepting) {
    const std::size_t limit = max_subset_states();
    normalize(initial);

    std::unordered_map<CodeSet, State, CodeSetHash> index;
    std::deque<CodeSet> pending;
    std::vector<State> delta;
    std::vector<bool> finals;

    auto intern = [&](CodeSet&& s) -> State {
        auto it = index.find(s);
        if (it != index.end())
            return it->second;
        if (index.size() >= limit)
            throw ResourceError("determinization exceeded " + std::to_string(limit) +
                                " subset states (raise AUTOBASIS_MAX_STATES)");
        const auto id = static_cast<State>(index.size());
        bool fin = std::any_of(s.begin(), s.end(), [&](Code c) { return accepting(c); });
        finals.push_back(fin);
        delta.resize(delta.size() + base);
        pending.push_back(s);
        index.emplace(std::move(s), id);
        return id;
    };

    intern(std::move(initial));
    CodeSet next;
    for (State current = 0; !pending.empty(); ++current) {
        CodeSet subset = std::move(pending.front());
        pending.pop_front();
        for (Digit d = 0; d < base; ++d) {
            next.clear();
            for (Code c : subset)
                successors(c, d, next);
            normalize(next);
            State target = intern(CodeSet(next));
            delta[std::size_t(current) * base + d] = target;
        }
    }
    return Dfa(base, std::move(delta), 0, std::move(finals));
}

}  // namespace autobasis::detail
