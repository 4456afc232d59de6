#include "autobasis/numeral.hpp"

#include "autobasis/error.hpp"

#include <algorithm>
#include <cctype>

namespace autobasis {

BigNat parse_nat(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; }))
        throw InputError("not a natural number: '" + text + "'");
    return BigNat(text);
}

Word encode(const BigNat& n, unsigned base) {
    if (base < 2)
        throw InputError("base must be at least 2");
    if (n < 0)
        throw InputError("cannot encode a negative number");
    Word w;
    BigNat rest = n;
    while (rest != 0) {
        w.push_back(static_cast<Digit>(rest % base));
        rest /= base;
    }
    return w;
}

BigNat decode(std::span<const Digit> word, unsigned base) {
    BigNat value = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it >= base)
            throw InputError("digit " + std::to_string(*it) + " out of range for base " +
                             std::to_string(base));
        value = value * base + *it;
    }
    return value;
}

bool is_canonical(std::span<const Digit> word) { return word.empty() || word.back() != 0; }

Dfa canonical_language(unsigned base) {
    // 0: last digit nonzero (or empty), 1: last digit zero.
    std::vector<State> delta(2 * base, 0);
    delta[0] = 1;
    delta[base] = 1;
    return Dfa(base, std::move(delta), 0, {true, false});
}

Dfa zero_closure(const Dfa& a) {
    Nfa n = Nfa::from_dfa(a);
    State pad = n.add_state(true);
    n.add_transition(pad, 0, pad);
    for (State q = 0; q < a.size(); ++q)
        if (a.is_final(q))
            n.add_transition(q, 0, pad);
    return minimize(determinize(n));
}

Dfa canonicalize(const Dfa& a) {
    // A state becomes final if some run of zeros reaches a final state; the
    // canonical words of the result then carry exactly the values of L(a).
    std::vector<bool> finals(a.size());
    for (State q = 0; q < a.size(); ++q) {
        State r = q;
        bool hit = false;
        for (std::size_t i = 0; i <= a.size() && !hit; ++i) {
            hit = a.is_final(r);
            r = a.next(r, 0);
        }
        finals[q] = hit;
    }
    Dfa saturated(a.base(), std::vector<State>(a.transitions().begin(), a.transitions().end()),
                  a.initial(), std::move(finals));
    return minimize(intersect(saturated, canonical_language(a.base())));
}

Dfa value_closure(const Dfa& a) { return zero_closure(canonicalize(a)); }

bool contains(const Dfa& a, const BigNat& n) {
    // Padding with zeros covers machines that accept non-canonical words.
    Word w = encode(n, a.base());
    State q = a.run(w);
    for (std::size_t i = 0; i <= a.size(); ++i) {
        if (a.is_final(q))
            return true;
        q = a.next(q, 0);
    }
    return false;
}

void for_each_member(const Dfa& a, const std::function<bool(const BigNat&)>& visit) {
    // Members of one length are produced in numeric order by walking the
    // reversed (most significant digit first) machine in digit order.
    const Dfa canon = canonicalize(a);
    const Dfa msd = minimize(determinize(Nfa::from_dfa(canon).reversed()));
    const unsigned k = msd.base();
    const std::size_t n = msd.size();

    std::vector<std::vector<bool>> feasible{std::vector<bool>(n)};
    for (State q = 0; q < n; ++q)
        feasible[0][q] = msd.is_final(q);
    const bool finite = is_finite(canon);

    for (std::size_t len = 0;; ++len) {
        while (feasible.size() <= len) {
            std::vector<bool> row(n, false);
            for (State q = 0; q < n; ++q)
                for (Digit d = 0; d < k && !row[q]; ++d)
                    row[q] = feasible.back()[msd.next(q, d)];
            feasible.push_back(std::move(row));
        }
        if (finite && len > canon.size())
            return;
        if (!feasible[len][msd.initial()])
            continue;
        std::vector<State> path{msd.initial()};
        std::vector<Digit> next_digit{0};
        std::vector<BigNat> values{0};
        while (!path.empty()) {
            const std::size_t depth = path.size() - 1;
            if (depth == len) {
                if (!visit(values.back()))
                    return;
                path.pop_back();
                next_digit.pop_back();
                values.pop_back();
                continue;
            }
            Digit& d = next_digit.back();
            const std::size_t remaining = len - depth - 1;
            while (d < k && !feasible[remaining][msd.next(path.back(), d)])
                ++d;
            if (d == k) {
                path.pop_back();
                next_digit.pop_back();
                values.pop_back();
                continue;
            }
            values.push_back(values.back() * k + d);
            path.push_back(msd.next(path.back(), d));
            ++d;
            next_digit.push_back(0);
        }
    }
}

std::vector<BigNat> set_members(const Dfa& a, const BigNat& bound) {
    std::vector<BigNat> out;
    if (bound < 0)
        return out;
    for_each_member(a, [&](const BigNat& v) {
        if (v > bound)
            return false;
        out.push_back(v);
        return true;
    });
    return out;
}

}  // namespace autobasis
