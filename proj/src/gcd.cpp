#include "autobasis/gcd.hpp"

#include "autobasis/error.hpp"
#include "autobasis/numeral.hpp"
#include "subset.hpp"

#include <boost/integer/common_factor.hpp>

#include <limits>

namespace autobasis {

namespace {

BigNat gcd(const BigNat& a, const BigNat& b) { return boost::multiprecision::gcd(a, b); }

// Least nonzero member of a canonical machine: shortest nonempty accepted
// word, then the smallest most significant digits.
BigNat least_nonzero(const Dfa& canon) {
    const std::size_t n = canon.size();
    std::vector<std::vector<bool>> layers;
    std::vector<bool> current(n, false);
    current[canon.initial()] = true;
    layers.push_back(current);
    // A nonempty canonical word of minimal length is shorter than n + 1.
    for (std::size_t len = 1; len <= n + 1; ++len) {
        std::vector<bool> next(n, false);
        for (State q = 0; q < n; ++q)
            if (current[q])
                for (Digit d = 0; d < canon.base(); ++d)
                    next[canon.next(q, d)] = true;
        layers.push_back(next);
        current = next;
        bool accepted = false;
        for (State q = 0; q < n && !accepted; ++q)
            accepted = current[q] && canon.is_final(q);
        if (!accepted)
            continue;
        // Pick digits from the most significant end.
        std::vector<bool> targets = canon.finals();
        Word word(len);
        for (std::size_t pos = len; pos-- > 0;) {
            for (Digit d = 0; d < canon.base(); ++d) {
                std::vector<bool> sources(n, false);
                bool any = false;
                for (State q = 0; q < n; ++q)
                    if (layers[pos][q] && targets[canon.next(q, d)]) {
                        sources[q] = true;
                        any = true;
                    }
                if (any) {
                    word[pos] = d;
                    targets = std::move(sources);
                    break;
                }
            }
        }
        return decode(word, canon.base());
    }
    throw PreconditionError("the set has no nonzero member");
}

std::uint32_t narrow_modulus(const BigNat& g) {
    if (g > std::numeric_limits<std::uint32_t>::max())
        throw ResourceError("gcd candidate " + g.str() + " is too large for a divisibility automaton");
    return static_cast<std::uint32_t>(g);
}

}  // namespace

BigNat smallest_member(const Dfa& a) { return least_nonzero(canonicalize(a)); }

Dfa divisibility_automaton(unsigned base, std::uint32_t d) {
    if (d == 0)
        throw InputError("divisor must be positive");
    const std::uint64_t mod = d;
    // Code: value mod d, times d, plus k^position mod d.
    Dfa raw = detail::subset_construct(
        base, {1 % mod},
        [&](detail::Code c, Digit x, detail::CodeSet& out) {
            std::uint64_t r = c / mod, p = c % mod;
            std::uint64_t r2 = (r + x * p) % mod, p2 = (p * base) % mod;
            out.push_back(r2 * mod + p2);
        },
        [&](detail::Code c) { return c / mod == 0; });
    return minimize(intersect(raw, canonical_language(base)));
}

bool divides_all(const Dfa& a, std::uint32_t d) {
    return is_empty(difference(canonicalize(a), divisibility_automaton(a.base(), d)));
}

GcdReport gcd_of_set(const Dfa& a) {
    const Dfa canon = canonicalize(a);
    GcdReport report;
    report.state_count = canon.size();
    report.smallest_member = least_nonzero(canon);

    // gcd(S) divides the least member; each counterexample to S ⊆ gℕ at
    // least halves the candidate.
    BigNat g = report.smallest_member;
    while (g > 1) {
        Dfa outside = difference(canon, divisibility_automaton(canon.base(), narrow_modulus(g)));
        auto word = shortest_word(outside);
        if (!word)
            break;
        g = gcd(g, decode(*word, canon.base()));
    }
    report.g = g;
    if (g == 1)
        report.witnesses = gcd_witnesses(canon);
    return report;
}

std::vector<BigNat> gcd_witnesses(const Dfa& a) {
    const Dfa canon = canonicalize(a);
    const BigNat bound = pow_nat(canon.base(), static_cast<unsigned>(2 * canon.size() + 2));
    std::vector<BigNat> picked;
    BigNat running = 0;
    for_each_member(canon, [&](const BigNat& x) {
        if (x == 0)
            return true;
        if (x >= bound)
            return false;
        BigNat next = gcd(running, x);
        if (running == 0 || next < running) {
            picked.push_back(x);
            running = next;
        }
        return running != 1;
    });
    if (running != 1)
        throw PreconditionError("gcd_witnesses: the gcd of the set is not 1");
    return picked;
}

}  // namespace autobasis
