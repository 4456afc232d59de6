#include "autobasis/basis.hpp"

#include "autobasis/error.hpp"
#include "autobasis/gcd.hpp"
#include "autobasis/growth.hpp"
#include "autobasis/numeral.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace autobasis {

namespace {

std::vector<BigNat> finite_values(const Dfa& canon) {
    std::vector<BigNat> values;
    for (const Word& w : enumerate(canon, canon.size()))
        values.push_back(decode(w, canon.base()));
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace

Word InfiniteWitness::pumped_word(unsigned i) const {
    Word w = prefix;
    for (unsigned r = 0; r < i; ++r)
        w.insert(w.end(), cycle.begin(), cycle.end());
    w.insert(w.end(), suffix.begin(), suffix.end());
    return w;
}

BigNat InfiniteWitness::pumped(unsigned i) const { return decode(pumped_word(i), base); }

std::optional<InfiniteWitness> infinite_witness(const Dfa& a) {
    if (is_finite(a))
        return std::nullopt;
    const Nfa t = trim(Nfa::from_dfa(a));
    const std::size_t n = t.size();
    const unsigned k = a.base();
    auto step = [&](State q, Digit d) -> std::optional<State> {
        const auto& s = t.successors(q, d);
        if (s.empty())
            return std::nullopt;
        return s.front();
    };
    // BFS from the initial state; the first state lying on a cycle wins.
    const std::size_t inf = std::numeric_limits<std::size_t>::max();
    State init = t.initial_states().front();
    std::vector<std::size_t> depth(n, inf);
    std::vector<State> parent(n, 0);
    std::vector<Digit> via(n, 0);
    std::vector<State> order{init};
    depth[init] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (Digit d = 0; d < k; ++d)
            if (auto r = step(order[head], d); r && depth[*r] == inf) {
                depth[*r] = depth[order[head]] + 1;
                parent[*r] = order[head];
                via[*r] = d;
                order.push_back(*r);
            }
    // Shortest cycle through q: BFS from q's successors back to q.
    auto shortest_cycle = [&](State q) -> std::optional<Word> {
        std::vector<std::size_t> dist(n, inf);
        std::vector<State> from(n, 0);
        std::vector<Digit> label(n, 0);
        std::queue<State> queue;
        for (Digit d = 0; d < k; ++d)
            if (auto r = step(q, d)) {
                if (*r == q)
                    return Word{d};
                if (dist[*r] == inf) {
                    dist[*r] = 1;
                    from[*r] = q;
                    label[*r] = d;
                    queue.push(*r);
                }
            }
        while (!queue.empty()) {
            State p = queue.front();
            queue.pop();
            for (Digit d = 0; d < k; ++d) {
                auto r = step(p, d);
                if (!r)
                    continue;
                if (*r == q) {
                    Word w{d};
                    for (State x = p; x != q; x = from[x])
                        w.push_back(label[x]);
                    std::reverse(w.begin(), w.end());
                    return w;
                }
                if (dist[*r] == inf) {
                    dist[*r] = dist[p] + 1;
                    from[*r] = p;
                    label[*r] = d;
                    queue.push(*r);
                }
            }
        }
        return std::nullopt;
    };
    for (State q : order) {
        auto cycle = shortest_cycle(q);
        if (!cycle)
            continue;
        InfiniteWitness w;
        w.base = k;
        for (State x = q; x != init; x = parent[x])
            w.prefix.push_back(via[x]);
        std::reverse(w.prefix.begin(), w.prefix.end());
        w.cycle = *cycle;
        // Shortest continuation to a final state.
        std::vector<std::size_t> dist(n, inf);
        std::vector<State> next_state(n, 0);
        std::vector<Digit> next_digit(n, 0);
        std::queue<State> queue;
        queue.push(q);
        dist[q] = 0;
        State reached = q;
        while (!queue.empty()) {
            State p = queue.front();
            queue.pop();
            if (t.is_final(p)) {
                reached = p;
                break;
            }
            for (Digit d = 0; d < k; ++d)
                if (auto r = step(p, d); r && dist[*r] == inf) {
                    dist[*r] = dist[p] + 1;
                    next_state[*r] = p;
                    next_digit[*r] = d;
                    queue.push(*r);
                }
        }
        for (State x = reached; x != q; x = next_state[x])
            w.suffix.push_back(next_digit[x]);
        std::reverse(w.suffix.begin(), w.suffix.end());
        return w;
    }
    return std::nullopt;
}

ExceptionResult exceptions_relative(const Dfa& sum, const Dfa& target, bool require_finite) {
    if (sum.base() != target.base())
        throw InputError("base mismatch between sum and target");
    const Dfa missing = minimize(difference(canonicalize(target), canonicalize(sum)));
    if (auto witness = infinite_witness(missing)) {
        if (require_finite)
            throw PreconditionError("the exception set is infinite");
        return *witness;
    }
    return finite_values(missing);
}

BasisReport decide_basis(const Dfa& a, unsigned max_order, bool asymptotic) {
    BasisOptions options;
    options.max_order = max_order;
    options.kind = asymptotic ? BasisKind::Asymptotic : BasisKind::Exact;
    return decide_basis(a, options);
}

BasisReport decide_basis(const Dfa& a, const BasisOptions& options) {
    if (options.max_order == 0)
        throw InputError("max_order must be at least 1");
    const Dfa canon = canonicalize(a);
    const unsigned k = canon.base();

    BasisReport report;
    report.kind = options.kind;
    report.sum_mode = options.sum_mode;
    report.state_count = canon.size();
    std::tie(report.theoretical_order, report.theoretical_threshold) =
        theoretical_bounds(k, static_cast<unsigned>(canon.size()));
    report.contains_one = contains(canon, 1);

    report.sparse = classify(canon).polynomial();
    if (report.sparse) {
        report.reason = BasisReason::NonSparseFailed;
        return report;
    }
    report.gcd = gcd_of_set(canon).g;
    report.asymptotic_basis = report.gcd == 1;
    report.exact_basis = report.asymptotic_basis && report.contains_one;
    if (!report.asymptotic_basis) {
        report.reason = BasisReason::GcdFailed;
        return report;
    }
    if (options.kind == BasisKind::Exact && !report.contains_one) {
        report.reason = BasisReason::OneNotInS;
        return report;
    }

    const Dfa everything = canonical_language(k);
    PrefixSums tower(std::vector<Dfa>(options.max_order, canon));
    Dfa at_most = canon;
    for (unsigned j = 1; j <= options.max_order; ++j) {
        const Dfa& exact_sum = tower.exact(j);
        if (j > 1)
            at_most = minimize(unite(at_most, exact_sum));
        report.searched_up_to = j;
        const Dfa& sums = options.sum_mode == SumMode::AtMost ? at_most : exact_sum;
        const Dfa missing = minimize(difference(everything, sums));
        if (!is_finite(missing))
            continue;
        std::vector<BigNat> values = finite_values(missing);
        const bool zero_missing = !values.empty() && values.front() == 0;
        if (options.kind == BasisKind::Exact && values.size() > (zero_missing ? 1u : 0u))
            continue;
        report.minimal_order = j;
        report.zero_by_empty_sum = zero_missing;
        report.threshold = values.empty() ? BigNat(0) : BigNat(values.back() + 1);
        report.exceptions = std::move(values);
        if (options.sum_mode == SumMode::Exact) {
            report.exact_exceptions = report.exceptions;
        } else {
            const Dfa exact_missing = minimize(difference(everything, exact_sum));
            if (is_finite(exact_missing))
                report.exact_exceptions = finite_values(exact_missing);
        }
        return report;
    }
    report.inconclusive = true;
    return report;
}

SyndeticReport check_syndetic(const Dfa& t, unsigned c, const BigNat& violation_bound) {
    if (c == 0)
        throw InputError("syndeticity gap must be at least 1");
    const Dfa canon = canonicalize(t);
    Dfa followed = shift_preimage(canon, 1);
    for (unsigned i = 2; i <= c; ++i)
        followed = minimize(unite(followed, shift_preimage(canon, i)));
    const Dfa violating = minimize(difference(canon, followed));
    SyndeticReport report;
    report.c = c;
    report.holds = is_empty(violating);
    report.violations = set_members(violating, violation_bound);
    return report;
}

std::optional<BigNat> find_consecutive_run(const Dfa& u, unsigned c) {
    const Dfa canon = canonicalize(u);
    Dfa run = canon;
    for (unsigned i = 1; i <= c; ++i)
        run = minimize(intersect(run, shift_preimage(canon, i)));
    if (is_empty(run))
        return std::nullopt;
    if (run.is_final(run.initial()))
        return BigNat(0);
    return smallest_member(run);
}

std::pair<BigNat, BigNat> theoretical_bounds(unsigned k, unsigned m) {
    if (k < 2 || m < 1)
        throw InputError("theoretical_bounds needs k >= 2 and m >= 1");
    return {5 * pow_nat(k, 16 * m + 3), 3 * pow_nat(k, 16 * m + 5)};
}

std::pair<Dfa, BigNat> hard_family(unsigned k, unsigned m, unsigned d) {
    if (k < 2 || m < 2 || d < 1)
        throw InputError("hard_family needs k >= 2, m >= 2, d >= 1");
    // State (length mod m, last digit nonzero); the empty word counts as canonical.
    std::vector<State> delta(2 * m * k);
    std::vector<bool> finals(2 * m, false);
    for (unsigned len = 0; len < m; ++len)
        for (unsigned nonzero = 0; nonzero < 2; ++nonzero) {
            const State q = len * 2 + nonzero;
            finals[q] = len == m - 1 && nonzero == 1;
            for (Digit x = 0; x < k; ++x)
                delta[std::size_t(q) * k + x] = ((len + 1) % m) * 2 + (x != 0 ? 1 : 0);
        }
    Dfa machine = minimize(Dfa(k, std::move(delta), 1, std::move(finals)));
    return {machine, pow_nat(k, m * d - 2) - 1};
}

}  // namespace autobasis
