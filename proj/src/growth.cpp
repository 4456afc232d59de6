#include "autobasis/growth.hpp"

#include "autobasis/error.hpp"
#include "autobasis/numeral.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace autobasis {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// Trimmed machine as a partial deterministic graph.
struct TrimmedGraph {
    unsigned base = 2;
    std::size_t size = 0;
    State initial = 0;
    std::vector<State> next;  // size * base, kNone when undefined
    std::vector<bool> finals;

    static constexpr State kNone = std::numeric_limits<State>::max();

    State step(State q, Digit d) const { return next[std::size_t(q) * base + d]; }
};

TrimmedGraph trimmed_graph(const Dfa& a) {
    Nfa t = trim(Nfa::from_dfa(a));
    TrimmedGraph g;
    g.base = a.base();
    g.size = t.size();
    g.next.assign(g.size * g.base, TrimmedGraph::kNone);
    g.finals.resize(g.size);
    for (State q = 0; q < g.size; ++q) {
        if (t.is_initial(q))
            g.initial = q;
        g.finals[q] = t.is_final(q);
        for (Digit d = 0; d < g.base; ++d)
            if (!t.successors(q, d).empty())
                g.next[std::size_t(q) * g.base + d] = t.successors(q, d).front();
    }
    return g;
}

struct Components {
    std::vector<std::uint32_t> of;  // component index per state
    std::size_t count = 0;          // indices are in reverse topological order
};

// Iterative Tarjan.
Components strongly_connected(const TrimmedGraph& g) {
    const std::size_t n = g.size;
    const std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, unset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    Components c;
    c.of.assign(n, unset);
    std::uint32_t counter = 0;

    struct Frame {
        State q;
        Digit d;
    };
    std::vector<Frame> call;
    for (State root = 0; root < n; ++root) {
        if (index[root] != unset)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.d < g.base) {
                State r = g.step(f.q, f.d++);
                if (r == TrimmedGraph::kNone)
                    continue;
                if (index[r] == unset) {
                    index[r] = low[r] = counter++;
                    stack.push_back(r);
                    on_stack[r] = true;
                    call.push_back({r, 0});
                } else if (on_stack[r]) {
                    low[f.q] = std::min(low[f.q], index[r]);
                }
                continue;
            }
            State q = f.q;
            call.pop_back();
            if (!call.empty())
                low[call.back().q] = std::min(low[call.back().q], low[q]);
            if (low[q] == index[q]) {
                State w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    c.of[w] = static_cast<std::uint32_t>(c.count);
                } while (w != q);
                ++c.count;
            }
        }
    }
    return c;
}

struct SccSummary {
    std::vector<bool> cyclic;       // component carries at least one cycle
    std::vector<bool> exponential;  // some state has two edges inside it
};

SccSummary summarize(const TrimmedGraph& g, const Components& c) {
    SccSummary s{std::vector<bool>(c.count, false), std::vector<bool>(c.count, false)};
    for (State q = 0; q < g.size; ++q) {
        unsigned inside = 0;
        for (Digit d = 0; d < g.base; ++d) {
            State r = g.step(q, d);
            if (r != TrimmedGraph::kNone && c.of[r] == c.of[q])
                ++inside;
        }
        if (inside >= 1)
            s.cyclic[c.of[q]] = true;
        if (inside >= 2)
            s.exponential[c.of[q]] = true;
    }
    return s;
}

// Distances to `targets` along edges, by reverse BFS.
std::vector<std::size_t> distances_to(const TrimmedGraph& g, const std::vector<bool>& targets) {
    std::vector<std::vector<State>> preds(g.size);
    for (State q = 0; q < g.size; ++q)
        for (Digit d = 0; d < g.base; ++d)
            if (State r = g.step(q, d); r != TrimmedGraph::kNone)
                preds[r].push_back(q);
    std::vector<std::size_t> dist(g.size, kInf);
    std::queue<State> queue;
    for (State q = 0; q < g.size; ++q)
        if (targets[q]) {
            dist[q] = 0;
            queue.push(q);
        }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop();
        for (State p : preds[q])
            if (dist[p] == kInf) {
                dist[p] = dist[q] + 1;
                queue.push(p);
            }
    }
    return dist;
}

// Lexicographically least among the shortest paths, following `dist` down.
Word descend(const TrimmedGraph& g, State q, const std::vector<std::size_t>& dist) {
    Word w;
    while (dist[q] > 0) {
        for (Digit d = 0; d < g.base; ++d) {
            State r = g.step(q, d);
            if (r != TrimmedGraph::kNone && dist[r] != kInf && dist[r] + 1 == dist[q]) {
                w.push_back(d);
                q = r;
                break;
            }
        }
    }
    return w;
}

Word primitive_root(const Word& w) {
    for (std::size_t p = 1; p <= w.size(); ++p) {
        if (w.size() % p != 0)
            continue;
        bool periodic = true;
        for (std::size_t i = p; i < w.size() && periodic; ++i)
            periodic = w[i] == w[i - p];
        if (periodic)
            return Word(w.begin(), w.begin() + p);
    }
    return w;
}

ExpWitness witness_in(const TrimmedGraph& g, const Components& c, const SccSummary& s) {
    if (g.size == 0)
        throw PreconditionError("exp_witness: empty language");
    // s: lexicographically least shortest access word to the first state of
    // an exponential component in BFS order.
    std::vector<std::size_t> depth(g.size, kInf);
    std::vector<State> parent(g.size, 0);
    std::vector<Digit> via(g.size, 0);
    std::vector<State> order{g.initial};
    depth[g.initial] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        State q = order[head];
        for (Digit d = 0; d < g.base; ++d) {
            State r = g.step(q, d);
            if (r != TrimmedGraph::kNone && depth[r] == kInf) {
                depth[r] = depth[q] + 1;
                parent[r] = q;
                via[r] = d;
                order.push_back(r);
            }
        }
    }
    State pivot = TrimmedGraph::kNone;
    for (State q : order)
        if (s.exponential[c.of[q]]) {
            pivot = q;
            break;
        }
    if (pivot == TrimmedGraph::kNone)
        throw PreconditionError("exp_witness: language has polynomial growth");

    ExpWitness w;
    for (State q = pivot; q != g.initial; q = parent[q])
        w.s.push_back(via[q]);
    std::reverse(w.s.begin(), w.s.end());

    w.v = descend(g, pivot, distances_to(g, g.finals));

    // x0: shortest nonempty cycle at the pivot.
    std::vector<bool> at_pivot(g.size, false);
    at_pivot[pivot] = true;
    auto back = distances_to(g, at_pivot);
    std::size_t best = kInf;
    Digit first = 0;
    for (Digit d = 0; d < g.base; ++d) {
        State r = g.step(pivot, d);
        if (r != TrimmedGraph::kNone && back[r] != kInf && back[r] + 1 < best) {
            best = back[r] + 1;
            first = d;
        }
    }
    Word x0{first};
    {
        Word rest = descend(g, g.step(pivot, first), back);
        x0.insert(x0.end(), rest.begin(), rest.end());
    }

    // x1: shortest cycle at the pivot outside root(x0)*, on the product of
    // the graph with the automaton for root(x0)*.
    const Word root = primitive_root(x0);
    const std::size_t period = root.size();
    const std::size_t dead = period;
    const std::size_t width = period + 1;
    TrimmedGraph prod;
    prod.base = g.base;
    prod.size = g.size * width;
    prod.next.assign(prod.size * g.base, TrimmedGraph::kNone);
    prod.finals.assign(prod.size, false);
    for (State q = 0; q < g.size; ++q)
        for (std::size_t pos = 0; pos < width; ++pos) {
            const State code = static_cast<State>(q * width + pos);
            for (Digit d = 0; d < g.base; ++d) {
                State r = g.step(q, d);
                if (r == TrimmedGraph::kNone)
                    continue;
                std::size_t npos = (pos != dead && root[pos] == d) ? (pos + 1) % period : dead;
                prod.next[std::size_t(code) * g.base + d] = static_cast<State>(r * width + npos);
            }
        }
    for (std::size_t pos = 1; pos < width; ++pos)
        prod.finals[pivot * width + pos] = true;
    auto to_target = distances_to(prod, prod.finals);
    const State start = static_cast<State>(pivot * width);
    Word x1 = descend(prod, start, to_target);

    w.t = x0;
    w.t.insert(w.t.end(), x1.begin(), x1.end());
    w.u = x1;
    w.u.insert(w.u.end(), x0.begin(), x0.end());
    return w;
}

}  // namespace

GrowthReport classify(const Dfa& a) {
    TrimmedGraph g = trimmed_graph(a);
    Components c = strongly_connected(g);
    SccSummary s = summarize(g, c);
    GrowthReport report;
    report.state_count = g.size;
    if (std::find(s.exponential.begin(), s.exponential.end(), true) != s.exponential.end()) {
        report.verdict = ExponentialGrowth{witness_in(g, c, s)};
        return report;
    }
    report.verdict = PolynomialGrowth{degree(a)};
    return report;
}

GrowthReport classify(const Nfa& a) { return classify(determinize(a)); }

unsigned degree(const Dfa& a) {
    TrimmedGraph g = trimmed_graph(a);
    if (g.size == 0)
        return 0;
    Components c = strongly_connected(g);
    SccSummary s = summarize(g, c);
    if (std::find(s.exponential.begin(), s.exponential.end(), true) != s.exponential.end())
        throw PreconditionError("degree: language has exponential growth");

    // Components come out sinks first, so successors are finished before use.
    std::vector<std::vector<State>> members(c.count);
    for (State q = 0; q < g.size; ++q)
        members[c.of[q]].push_back(q);
    std::vector<unsigned> longest(c.count, 0);
    for (std::size_t comp = 0; comp < c.count; ++comp) {
        unsigned best = 0;
        for (State q : members[comp])
            for (Digit d = 0; d < g.base; ++d)
                if (State r = g.step(q, d); r != TrimmedGraph::kNone && c.of[r] != comp)
                    best = std::max(best, longest[c.of[r]]);
        longest[comp] = best + (s.cyclic[comp] ? 1 : 0);
    }
    unsigned cycles = longest[c.of[g.initial]];
    return cycles == 0 ? 0 : cycles - 1;
}

ExpWitness exp_witness(const Dfa& a) {
    TrimmedGraph g = trimmed_graph(a);
    Components c = strongly_connected(g);
    SccSummary s = summarize(g, c);
    return witness_in(g, c, s);
}

ExpWitness exp_witness(const Nfa& a) { return exp_witness(determinize(a)); }

bool is_sparse(const Dfa& set_automaton) {
    return classify(canonicalize(set_automaton)).polynomial();
}

}  // namespace autobasis
