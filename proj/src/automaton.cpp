#include "autobasis/automaton.hpp"

#include "autobasis/error.hpp"
#include "subset.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace autobasis {

namespace {

void require_same_base(const Dfa& a, const Dfa& b) {
    if (a.base() != b.base())
        throw InputError("base mismatch: " + std::to_string(a.base()) + " vs " +
                         std::to_string(b.base()));
}

std::size_t limit_from_environment() {
    if (const char* env = std::getenv("AUTOBASIS_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 2'000'000;
}

std::atomic<std::size_t>& subset_limit() {
    static std::atomic<std::size_t> limit{limit_from_environment()};
    return limit;
}

std::vector<bool> reachable_states(const Dfa& a) {
    std::vector<bool> seen(a.size(), false);
    std::vector<State> stack{a.initial()};
    seen[a.initial()] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (Digit d = 0; d < a.base(); ++d) {
            State r = a.next(q, d);
            if (!seen[r]) {
                seen[r] = true;
                stack.push_back(r);
            }
        }
    }
    return seen;
}

// States from which some final state is reachable.
std::vector<bool> coreachable_states(const Dfa& a) {
    std::vector<std::vector<State>> preds(a.size());
    for (State q = 0; q < a.size(); ++q)
        for (Digit d = 0; d < a.base(); ++d)
            preds[a.next(q, d)].push_back(q);
    std::vector<bool> live(a.size(), false);
    std::vector<State> stack;
    for (State q = 0; q < a.size(); ++q)
        if (a.is_final(q)) {
            live[q] = true;
            stack.push_back(q);
        }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : preds[q])
            if (!live[p]) {
                live[p] = true;
                stack.push_back(p);
            }
    }
    return live;
}

template <class Combine>
Dfa product(const Dfa& a, const Dfa& b, Combine&& combine) {
    require_same_base(a, b);
    const unsigned k = a.base();
    const std::uint64_t nb = b.size();
    return detail::subset_construct(
        k, {std::uint64_t(a.initial()) * nb + b.initial()},
        [&](detail::Code c, Digit d, detail::CodeSet& out) {
            State p = static_cast<State>(c / nb), q = static_cast<State>(c % nb);
            out.push_back(std::uint64_t(a.next(p, d)) * nb + b.next(q, d));
        },
        [&](detail::Code c) {
            return combine(a.is_final(static_cast<State>(c / nb)),
                           b.is_final(static_cast<State>(c % nb)));
        });
}

}  // namespace

// ---------------------------------------------------------------------------

Dfa::Dfa(unsigned base, std::vector<State> delta, State initial, std::vector<bool> finals)
    : base_(base), delta_(std::move(delta)), initial_(initial), finals_(std::move(finals)) {
    if (base_ < 2)
        throw InputError("base must be at least 2");
    if (finals_.empty())
        throw InputError("a Dfa needs at least one state");
    if (delta_.size() != finals_.size() * base_)
        throw InputError("transition table is not total: expected " +
                         std::to_string(finals_.size() * base_) + " entries, got " +
                         std::to_string(delta_.size()));
    if (initial_ >= finals_.size())
        throw InputError("initial state out of range");
    for (State t : delta_)
        if (t >= finals_.size())
            throw InputError("transition target " + std::to_string(t) + " out of range");
}

Dfa Dfa::empty_language(unsigned base) {
    return Dfa(base, std::vector<State>(base, 0), 0, {false});
}

Dfa Dfa::all_words(unsigned base) {
    return Dfa(base, std::vector<State>(base, 0), 0, {true});
}

State Dfa::run_from(State q, std::span<const Digit> word) const {
    for (Digit d : word) {
        if (d >= base_)
            throw InputError("digit " + std::to_string(d) + " out of range for base " +
                             std::to_string(base_));
        q = next(q, d);
    }
    return q;
}

State Dfa::run(std::span<const Digit> word) const { return run_from(initial_, word); }

// ---------------------------------------------------------------------------

Nfa::Nfa(unsigned base, std::size_t states)
    : base_(base), delta_(states * base), initials_(states, false), finals_(states, false) {
    if (base_ < 2)
        throw InputError("base must be at least 2");
}

void Nfa::check_state(State q) const {
    if (q >= size())
        throw InputError("state " + std::to_string(q) + " out of range");
}

State Nfa::add_state(bool final) {
    delta_.resize(delta_.size() + base_);
    initials_.push_back(false);
    finals_.push_back(final);
    return static_cast<State>(finals_.size() - 1);
}

void Nfa::add_transition(State from, Digit d, State to) {
    check_state(from);
    check_state(to);
    if (d >= base_)
        throw InputError("digit " + std::to_string(d) + " out of range for base " +
                         std::to_string(base_));
    auto& targets = delta_[std::size_t(from) * base_ + d];
    auto it = std::lower_bound(targets.begin(), targets.end(), to);
    if (it == targets.end() || *it != to)
        targets.insert(it, to);
}

void Nfa::set_initial(State q, bool initial) {
    check_state(q);
    initials_[q] = initial;
}

void Nfa::set_final(State q, bool final) {
    check_state(q);
    finals_[q] = final;
}

std::vector<State> Nfa::initial_states() const {
    std::vector<State> out;
    for (State q = 0; q < size(); ++q)
        if (initials_[q])
            out.push_back(q);
    return out;
}

bool Nfa::accepts(std::span<const Digit> word) const {
    std::vector<bool> current = initials_;
    for (Digit d : word) {
        if (d >= base_)
            throw InputError("digit out of range");
        std::vector<bool> next(size(), false);
        for (State q = 0; q < size(); ++q)
            if (current[q])
                for (State r : successors(q, d))
                    next[r] = true;
        current = std::move(next);
    }
    for (State q = 0; q < size(); ++q)
        if (current[q] && finals_[q])
            return true;
    return false;
}

Nfa Nfa::from_dfa(const Dfa& a) {
    Nfa n(a.base(), a.size());
    for (State q = 0; q < a.size(); ++q) {
        for (Digit d = 0; d < a.base(); ++d)
            n.delta_[std::size_t(q) * a.base() + d].push_back(a.next(q, d));
        n.finals_[q] = a.is_final(q);
    }
    n.initials_[a.initial()] = true;
    return n;
}

Nfa Nfa::reversed() const {
    Nfa r(base_, size());
    for (State q = 0; q < size(); ++q)
        for (Digit d = 0; d < base_; ++d)
            for (State t : successors(q, d))
                r.delta_[std::size_t(t) * base_ + d].push_back(q);
    for (auto& targets : r.delta_)
        std::sort(targets.begin(), targets.end());
    r.initials_ = finals_;
    r.finals_ = initials_;
    return r;
}

// ---------------------------------------------------------------------------

std::size_t max_subset_states() { return subset_limit().load(); }

void set_max_subset_states(std::size_t limit) { subset_limit().store(limit); }

Dfa determinize(const Nfa& a) {
    detail::CodeSet init;
    for (State q : a.initial_states())
        init.push_back(q);
    return detail::subset_construct(
        a.base(), std::move(init),
        [&](detail::Code c, Digit d, detail::CodeSet& out) {
            const auto& succ = a.successors(static_cast<State>(c), d);
            out.insert(out.end(), succ.begin(), succ.end());
        },
        [&](detail::Code c) { return a.is_final(static_cast<State>(c)); });
}

Dfa minimize(const Dfa& a) {
    const unsigned k = a.base();
    // Restrict to reachable states.
    std::vector<bool> reach = reachable_states(a);
    std::vector<State> old_of;
    std::vector<State> new_of(a.size(), 0);
    for (State q = 0; q < a.size(); ++q)
        if (reach[q]) {
            new_of[q] = static_cast<State>(old_of.size());
            old_of.push_back(q);
        }
    const std::size_t n = old_of.size();

    // Moore refinement: split blocks by the blocks of their successors.
    std::vector<std::uint32_t> block(n);
    std::size_t blocks = 0;
    {
        bool any_final = false, any_nonfinal = false;
        for (std::size_t i = 0; i < n; ++i) {
            block[i] = a.is_final(old_of[i]) ? 1 : 0;
            (block[i] ? any_final : any_nonfinal) = true;
        }
        if (!(any_final && any_nonfinal))
            std::fill(block.begin(), block.end(), 0);
        blocks = (any_final && any_nonfinal) ? 2 : 1;
    }
    std::vector<std::uint32_t> signature(n * (k + 1));
    std::vector<std::size_t> order(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) {
            signature[i * (k + 1)] = block[i];
            for (Digit d = 0; d < k; ++d)
                signature[i * (k + 1) + 1 + d] = block[new_of[a.next(old_of[i], d)]];
        }
        std::iota(order.begin(), order.end(), 0);
        auto sig_less = [&](std::size_t x, std::size_t y) {
            return std::lexicographical_compare(
                signature.begin() + x * (k + 1), signature.begin() + (x + 1) * (k + 1),
                signature.begin() + y * (k + 1), signature.begin() + (y + 1) * (k + 1));
        };
        std::sort(order.begin(), order.end(), sig_less);
        std::vector<std::uint32_t> refined(n);
        std::uint32_t next_id = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sig_less(order[i - 1], order[i]))
                ++next_id;
            refined[order[i]] = next_id;
        }
        const std::size_t new_blocks = n == 0 ? 0 : next_id + 1;
        block = std::move(refined);
        if (new_blocks == blocks)
            break;
        blocks = new_blocks;
    }

    // Quotient, renumbered in BFS order from the initial block.
    const std::uint32_t none = std::uint32_t(-1);
    std::vector<std::uint32_t> rep(blocks, none);
    for (std::size_t i = 0; i < n; ++i)
        if (rep[block[i]] == none)
            rep[block[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> bfs_id(blocks, none);
    std::vector<std::uint32_t> queue{block[new_of[a.initial()]]};
    bfs_id[queue[0]] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t b = queue[head];
        for (Digit d = 0; d < k; ++d) {
            std::uint32_t t = block[new_of[a.next(old_of[rep[b]], d)]];
            if (bfs_id[t] == none) {
                bfs_id[t] = static_cast<std::uint32_t>(queue.size());
                queue.push_back(t);
            }
        }
    }
    std::vector<State> delta(queue.size() * k);
    std::vector<bool> finals(queue.size());
    for (std::size_t id = 0; id < queue.size(); ++id) {
        State q = old_of[rep[queue[id]]];
        finals[id] = a.is_final(q);
        for (Digit d = 0; d < k; ++d)
            delta[id * k + d] = bfs_id[block[new_of[a.next(q, d)]]];
    }
    return Dfa(k, std::move(delta), 0, std::move(finals));
}

Dfa complement(const Dfa& a) {
    std::vector<bool> finals(a.size());
    for (State q = 0; q < a.size(); ++q)
        finals[q] = !a.is_final(q);
    return Dfa(a.base(), std::vector<State>(a.transitions().begin(), a.transitions().end()),
               a.initial(), std::move(finals));
}

Dfa intersect(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa unite(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x || y; });
}

Dfa difference(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && !y; });
}

Nfa trim(const Nfa& a) {
    const std::size_t n = a.size();
    const unsigned k = a.base();
    std::vector<bool> fwd(n, false), bwd(n, false);
    std::vector<State> stack;
    for (State q : a.initial_states()) {
        fwd[q] = true;
        stack.push_back(q);
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (Digit d = 0; d < k; ++d)
            for (State r : a.successors(q, d))
                if (!fwd[r]) {
                    fwd[r] = true;
                    stack.push_back(r);
                }
    }
    std::vector<std::vector<State>> preds(n);
    for (State q = 0; q < n; ++q)
        for (Digit d = 0; d < k; ++d)
            for (State r : a.successors(q, d))
                preds[r].push_back(q);
    for (State q = 0; q < n; ++q)
        if (a.is_final(q)) {
            bwd[q] = true;
            stack.push_back(q);
        }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : preds[q])
            if (!bwd[p]) {
                bwd[p] = true;
                stack.push_back(p);
            }
    }

    std::vector<State> new_of(n, 0);
    std::size_t kept = 0;
    for (State q = 0; q < n; ++q)
        if (fwd[q] && bwd[q])
            new_of[q] = static_cast<State>(kept++);
    Nfa out(k, kept);
    for (State q = 0; q < n; ++q) {
        if (!(fwd[q] && bwd[q]))
            continue;
        out.set_initial(new_of[q], a.is_initial(q));
        out.set_final(new_of[q], a.is_final(q));
        for (Digit d = 0; d < k; ++d)
            for (State r : a.successors(q, d))
                if (fwd[r] && bwd[r])
                    out.add_transition(new_of[q], d, new_of[r]);
    }
    return out;
}

bool is_empty(const Dfa& a) {
    std::vector<bool> reach = reachable_states(a);
    for (State q = 0; q < a.size(); ++q)
        if (reach[q] && a.is_final(q))
            return false;
    return true;
}

bool is_finite(const Dfa& a) {
    std::vector<bool> reach = reachable_states(a);
    std::vector<bool> live = coreachable_states(a);
    const std::size_t n = a.size();
    std::vector<std::size_t> indegree(n, 0);
    auto useful = [&](State q) { return reach[q] && live[q]; };
    std::size_t useful_count = 0;
    for (State q = 0; q < n; ++q) {
        if (!useful(q))
            continue;
        ++useful_count;
        for (Digit d = 0; d < a.base(); ++d)
            if (useful(a.next(q, d)))
                ++indegree[a.next(q, d)];
    }
    std::vector<State> ready;
    for (State q = 0; q < n; ++q)
        if (useful(q) && indegree[q] == 0)
            ready.push_back(q);
    std::size_t removed = 0;
    while (!ready.empty()) {
        State q = ready.back();
        ready.pop_back();
        ++removed;
        for (Digit d = 0; d < a.base(); ++d) {
            State r = a.next(q, d);
            if (useful(r) && --indegree[r] == 0)
                ready.push_back(r);
        }
    }
    return removed == useful_count;
}

bool equivalent(const Dfa& a, const Dfa& b) {
    require_same_base(a, b);
    return is_empty(product(a, b, [](bool x, bool y) { return x != y; }));
}

std::vector<Word> enumerate(const Dfa& a, std::size_t max_len) {
    const std::size_t n = a.size();
    const unsigned k = a.base();
    // feasible[r][q]: some word of length exactly r leads from q to a final state.
    std::vector<std::vector<bool>> feasible(max_len + 1, std::vector<bool>(n, false));
    for (State q = 0; q < n; ++q)
        feasible[0][q] = a.is_final(q);
    for (std::size_t r = 1; r <= max_len; ++r)
        for (State q = 0; q < n; ++q)
            for (Digit d = 0; d < k && !feasible[r][q]; ++d)
                feasible[r][q] = feasible[r - 1][a.next(q, d)];

    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (!feasible[len][a.initial()])
            continue;
        // Iterative DFS in lexicographic order.
        Word word;
        std::vector<State> path{a.initial()};
        std::vector<Digit> next_digit{0};
        while (!path.empty()) {
            if (word.size() == len) {
                out.push_back(word);
                path.pop_back();
                next_digit.pop_back();
                if (!word.empty())
                    word.pop_back();
                continue;
            }
            Digit& d = next_digit.back();
            const std::size_t remaining = len - word.size() - 1;
            while (d < k && !feasible[remaining][a.next(path.back(), d)])
                ++d;
            if (d == k) {
                path.pop_back();
                next_digit.pop_back();
                if (!word.empty())
                    word.pop_back();
                continue;
            }
            word.push_back(d);
            path.push_back(a.next(path[path.size() - 1], d));
            ++d;
            next_digit.push_back(0);
        }
    }
    return out;
}

BigNat count_words_of_length(const Dfa& a, std::size_t n) {
    std::vector<BigNat> ways(a.size(), 0), next(a.size());
    ways[a.initial()] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), BigNat(0));
        for (State q = 0; q < a.size(); ++q) {
            if (ways[q] == 0)
                continue;
            for (Digit d = 0; d < a.base(); ++d)
                next[a.next(q, d)] += ways[q];
        }
        std::swap(ways, next);
    }
    BigNat total = 0;
    for (State q = 0; q < a.size(); ++q)
        if (a.is_final(q))
            total += ways[q];
    return total;
}

std::optional<Word> shortest_word(const Dfa& a) {
    const std::size_t n = a.size();
    const std::size_t unreachable = std::size_t(-1);
    std::vector<std::vector<State>> preds(n);
    for (State q = 0; q < n; ++q)
        for (Digit d = 0; d < a.base(); ++d)
            preds[a.next(q, d)].push_back(q);
    std::vector<std::size_t> dist(n, unreachable);
    std::queue<State> queue;
    for (State q = 0; q < n; ++q)
        if (a.is_final(q)) {
            dist[q] = 0;
            queue.push(q);
        }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop();
        for (State p : preds[q])
            if (dist[p] == unreachable) {
                dist[p] = dist[q] + 1;
                queue.push(p);
            }
    }
    if (dist[a.initial()] == unreachable)
        return std::nullopt;
    Word w;
    State q = a.initial();
    while (dist[q] > 0) {
        for (Digit d = 0; d < a.base(); ++d)
            if (dist[a.next(q, d)] + 1 == dist[q]) {
                w.push_back(d);
                q = a.next(q, d);
                break;
            }
    }
    return w;
}

}  // namespace autobasis
