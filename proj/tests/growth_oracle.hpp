#pragma once

// Word-count growth oracle: W(n) = number of accepted words with length in
// (n, 2n], computed by a forward count over the transition table in long
// double. Polynomial degree d gives W(2n)/W(n) -> 2^(d+1); exponential growth
// gives an astronomically large ratio.

#include "autobasis/automaton.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace oracle {

inline std::vector<long double> length_counts(const autobasis::Dfa& a, unsigned max_len) {
    const unsigned k = a.base();
    std::vector<long double> cur(a.size(), 0), out;
    cur[a.initial()] = 1;
    for (unsigned len = 0; len <= max_len; ++len) {
        long double total = 0;
        for (std::size_t q = 0; q < a.size(); ++q)
            if (a.finals()[q])
                total += cur[q];
        out.push_back(total);
        std::vector<long double> next(a.size(), 0);
        for (std::size_t q = 0; q < a.size(); ++q)
            if (cur[q] != 0)
                for (unsigned d = 0; d < k; ++d)
                    next[a.transitions()[q * k + d]] += cur[q];
        cur = std::move(next);
    }
    return out;
}

struct GrowthEstimate {
    bool exponential = false;
    int degree = 0;  ///< meaningful when not exponential
};

inline GrowthEstimate estimate_growth(const autobasis::Dfa& a, unsigned n = 1000) {
    auto g = length_counts(a, 4 * n);
    auto window = [&](unsigned lo) {
        long double s = 0;
        for (unsigned i = lo + 1; i <= 2 * lo; ++i)
            s += g[i];
        return s;
    };
    const long double w1 = window(n), w2 = window(2 * n);
    GrowthEstimate e;
    if (w1 == 0) {
        e.degree = 0;
        return e;
    }
    const long double ratio = w2 / w1;
    if (ratio > 1e6L) {
        e.exponential = true;
        return e;
    }
    e.degree = static_cast<int>(std::lround(std::log2(static_cast<double>(ratio)))) - 1;
    return e;
}

}  // namespace oracle
