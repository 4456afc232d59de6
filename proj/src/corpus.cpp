#include "autobasis/corpus.hpp"

#include "autobasis/basis.hpp"
#include "autobasis/error.hpp"
#include "autobasis/numeral.hpp"
#include "autobasis/sumset.hpp"

#include <charconv>
#include <stdexcept>

namespace autobasis {

namespace {

// One accepting state looping on allowed digits, everything else dead.
Dfa digit_set(unsigned k, std::initializer_list<Digit> allowed) {
    std::vector<State> delta(2 * k, 1);
    for (Digit d : allowed)
        delta[d] = 0;
    return Dfa(k, std::move(delta), 0, {true, false});
}

Dfa evil() {
    // state = parity of 1 digits
    return Dfa(2, {0, 1, 1, 0}, 0, {true, false});
}

Dfa rudin_shapiro() {
    // state = 2 * parity + last digit
    std::vector<State> delta(8);
    for (State parity = 0; parity < 2; ++parity)
        for (State last = 0; last < 2; ++last)
            for (Digit b = 0; b < 2; ++b) {
                State p = parity ^ ((last == 1 && b == 1) ? 1u : 0u);
                delta[(2 * parity + last) * 2 + b] = 2 * p + b;
            }
    return Dfa(2, std::move(delta), 0, {false, false, true, true});
}

bool parse_hard(std::string_view name, unsigned& k, unsigned& m) {
    if (!name.starts_with("hard(") || !name.ends_with(")"))
        return false;
    std::string_view body = name.substr(5, name.size() - 6);
    auto comma = body.find(',');
    if (comma == std::string_view::npos)
        return false;
    auto number = [](std::string_view s, unsigned& out) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    };
    return number(body.substr(0, comma), k) && number(body.substr(comma + 1), m);
}

}  // namespace

std::vector<std::string> corpus_names() {
    return {"cantor3", "evil2", "rudinshapiro2", "digits01base4", "digits02base4", "hard(k,m)"};
}

CorpusEntry corpus_entry(std::string_view name) {
    if (name == "cantor3")
        return {"cantor3", "base 3, digits in {0, 2}", canonicalize(digit_set(3, {0, 2}))};
    if (name == "evil2")
        return {"evil2", "base 2, even number of 1 digits", canonicalize(evil())};
    if (name == "rudinshapiro2")
        return {"rudinshapiro2", "base 2, odd number of \"11\" blocks",
                canonicalize(rudin_shapiro())};
    if (name == "digits01base4")
        return {"digits01base4", "base 4, digits in {0, 1}", canonicalize(digit_set(4, {0, 1}))};
    if (name == "digits02base4") {
        Dfa scaled = scale_by_constant(canonicalize(digit_set(4, {0, 1})), 2);
        if (!equivalent(scaled, canonicalize(digit_set(4, {0, 2}))))
            throw std::logic_error("digits02base4: scaled machine disagrees with digit machine");
        return {"digits02base4", "base 4, digits in {0, 2}", scaled};
    }
    unsigned k = 0, m = 0;
    if (parse_hard(name, k, m)) {
        if (k < 2 || k > 64 || m < 2 || m > 64)
            throw InputError("hard(k,m) needs 2 <= k <= 64 and 2 <= m <= 64");
        return {std::string(name),
                "base " + std::to_string(k) + ", digit count congruent to -1 mod " +
                    std::to_string(m),
                hard_family(k, m, 1).first};
    }
    throw InputError("unknown corpus entry '" + std::string(name) + "'");
}

}  // namespace autobasis
