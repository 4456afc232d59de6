// One line per acceptance criterion: PASS or FAIL, elapsed time, detail.
// Exit status is nonzero when any criterion fails.

#include "autobasis/basis.hpp"
#include "autobasis/cantor.hpp"
#include "autobasis/cli.hpp"
#include "autobasis/corpus.hpp"
#include "autobasis/gcd.hpp"
#include "autobasis/growth.hpp"
#include "autobasis/numeral.hpp"
#include "autobasis/report.hpp"
#include "autobasis/sumset.hpp"

#include "../growth_oracle.hpp"
#include "../oracles.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace autobasis;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::map<std::string, std::string> cli(std::vector<std::string> args, int* code = nullptr) {
    args.push_back("--kv");
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    if (code)
        *code = rc;
    std::map<std::string, std::string> m;
    for (auto& [k, v] : parse_report(out.str()))
        m[k] = v;
    return m;
}

std::string list(const std::vector<std::uint64_t>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + std::to_string(xs[i]);
    return s + "]";
}

// Sums of at most j members (j >= 1), as a bitset on [0, bound].
class Bits {
public:
    explicit Bits(std::size_t n) : n_(n), w_((n + 64) / 64, 0) {}
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    void or_shifted(const Bits& src, std::size_t s) {
        const std::size_t ws = s / 64, bs = s % 64;
        for (std::size_t i = w_.size(); i-- > ws;) {
            std::uint64_t v = src.w_[i - ws] << bs;
            if (bs && i - ws >= 1)
                v |= src.w_[i - ws - 1] >> (64 - bs);
            w_[i] |= v;
        }
        trim();
    }
    void or_with(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
    }

private:
    void trim() {
        const std::size_t extra = w_.size() * 64 - (n_ + 1);
        if (extra)
            w_.back() &= ~std::uint64_t(0) >> extra;
    }
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

Bits at_most_sums(const std::vector<std::uint64_t>& members, unsigned j, std::size_t bound) {
    Bits single(bound), acc(bound), cur(bound);
    for (auto x : members)
        if (x <= bound)
            single.set(x);
    cur = single;
    acc = single;
    for (unsigned step = 1; step < j; ++step) {
        Bits next(bound);
        for (auto x : members)
            if (x <= bound)
                next.or_shifted(cur, x);
        cur = next;
        acc.or_with(cur);
    }
    return acc;
}

// pi_S(k^n - 1): canonical words of length <= n whose end state can reach a
// final state through zeros.
long double count_below_power(const Dfa& a, unsigned n) {
    const unsigned k = a.base();
    const std::size_t m = a.size();
    std::vector<bool> good(m, false);
    for (std::size_t q = 0; q < m; ++q) {
        State p = static_cast<State>(q);
        for (std::size_t i = 0; i <= m; ++i) {
            if (a.finals()[p]) {
                good[q] = true;
                break;
            }
            p = a.transitions()[std::size_t(p) * k];
        }
    }
    std::vector<long double> all(m, 0);
    all[a.initial()] = 1;
    long double total = good[a.initial()] ? 1 : 0;
    for (unsigned len = 1; len <= n; ++len) {
        std::vector<long double> next(m, 0), nonzero_end(m, 0);
        for (std::size_t q = 0; q < m; ++q)
            if (all[q] != 0)
                for (unsigned d = 0; d < k; ++d) {
                    State r = a.transitions()[q * k + d];
                    next[r] += all[q];
                    if (d != 0)
                        nonzero_end[r] += all[q];
                }
        for (std::size_t q = 0; q < m; ++q)
            if (good[q])
                total += nonzero_end[q];
        all = std::move(next);
    }
    return total;
}

bool sparse_oracle(const Dfa& a) {
    const long double h1 = count_below_power(a, 1000), h2 = count_below_power(a, 2000);
    if (h1 == 0)
        return true;
    return h2 / h1 < 1e6L;
}

bool is_two_four_pow_minus_one(std::uint64_t v) {
    for (std::uint64_t p = 1; 2 * p - 1 <= v; p *= 4)
        if (2 * p - 1 == v)
            return true;
    return false;
}

// --------------------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    int code = -1;
    auto r = cli({"exceptions", "corpus:cantor3", "--order", "2", "--mode", "exact-sum",
                  "--target", "even"},
                 &code);
    o.require(code == kExitDecided, "exit code " + std::to_string(code));
    o.require(r["finite"] == "true" && r["exceptions"] == "[]",
              "cli exceptions " + r["exceptions"]);
    const Dfa cantor = corpus_entry("cantor3").machine;
    const Dfa two = sum_automaton(SumSpec::homogeneous(cantor, 2));
    o.require(is_empty(difference(divisibility_automaton(3, 2), two)),
              "even numbers minus 2-fold sums is nonempty");
    auto members = oracle::members(cantor, 10000);
    auto sums = oracle::sumset({members, members}, 10000);
    for (std::uint64_t n = 0; n <= 10000; n += 2)
        o.require(sums[n], "brute force: " + std::to_string(n) + " is not a sum of two");
    if (o.pass)
        o.detail = "exceptions [] ; all even n <= 10^4 confirmed by brute force";
    return o;
}

Outcome criterion2() {
    Outcome o;
    int code = -1;
    auto b = cli({"basis", "corpus:evil2", "--asymptotic"}, &code);
    o.require(code == kExitDecided, "basis exit code " + std::to_string(code));
    o.require(b["order"] == "3", "order " + b["order"]);
    o.require(b["exceptions"] == "[1, 2, 4, 7]", "basis exceptions " + b["exceptions"]);
    o.require(b["threshold"] == "8", "threshold " + b["threshold"]);

    auto e = cli({"exceptions", "corpus:evil2", "--order", "2"}, &code);
    o.require(e["finite"] == "false", "order-2 exceptions reported finite");
    const std::string expected = "[2, 4, 7, 31, 127, 511, 2047, 8191]";

    // Witness pumping must stay in the exception set with the 2*4^i-1 shape.
    const Dfa evil = corpus_entry("evil2").machine;
    auto ev = oracle::members(evil, 10000);
    auto sums = oracle::sumset({ev, ev}, 10000);
    std::vector<std::uint64_t> brute;
    for (std::uint64_t n = 0; n <= 10000; ++n)
        if (!sums[n])
            brute.push_back(n);
    auto result = exceptions_relative(sum_automaton(SumSpec::homogeneous(evil, 2)),
                                      canonical_language(2));
    o.require(std::holds_alternative<InfiniteWitness>(result), "no infinite witness");
    if (auto* w = std::get_if<InfiniteWitness>(&result))
        for (unsigned i = 0; i < 7; ++i) {
            BigNat v = w->pumped(i);
            if (v > 10000)
                break;
            const auto x = static_cast<std::uint64_t>(v);
            o.require(!sums[x] && is_two_four_pow_minus_one(x),
                      "pumped value " + v.str() + " outside the pattern");
        }
    o.require(e["exceptions_upto_bound"] == list(brute),
              "cli list " + e["exceptions_upto_bound"] + " differs from brute force " + list(brute));
    o.require(e["exceptions_upto_bound"] == expected,
              "exceptions <= 10^4 are " + e["exceptions_upto_bound"] + ", expected " + expected +
                  " (brute force: 1 is not a sum of two evil numbers)");
    if (o.pass)
        o.detail = "j = 3, {1,2,4,7}, M = 8 ; order-2 list " + expected;
    return o;
}

Outcome criterion3() {
    Outcome o;
    int code = -1;
    auto b = cli({"basis", "corpus:rudinshapiro2", "--asymptotic"}, &code);
    const std::string expected = "[0, 1, 2, 3, 4, 5, 7, 8, 10, 11, 13, 20]";
    o.require(code == kExitDecided, "exit code " + std::to_string(code));
    o.require(b["order"] == "2", "order " + b["order"]);
    o.require(b["exceptions"] == expected, "exceptions " + b["exceptions"]);
    o.require(b["threshold"] == "21", "threshold " + b["threshold"]);
    // Brute force: n <= 10^4 that are not a sum of two members.
    auto rs = oracle::members(corpus_entry("rudinshapiro2").machine, 10000);
    auto sums = oracle::sumset({rs, rs}, 10000);
    std::vector<std::uint64_t> brute;
    for (std::uint64_t n = 0; n <= 10000; ++n)
        if (!sums[n])
            brute.push_back(n);
    o.require(list(brute) == expected, "brute force gives " + list(brute));
    if (o.pass)
        o.detail = "j = 2, exceptions " + expected + ", M = 21";
    return o;
}

Outcome criterion4() {
    Outcome o;
    int code = -1;
    auto e = cli({"exceptions", "corpus:digits01base4", "--order", "3"}, &code);
    o.require(code == kExitDecided && e["finite"] == "true" && e["exceptions"] == "[]",
              "order-3 exceptions " + e["exceptions"]);
    auto b = cli({"basis", "corpus:digits01base4", "--exact"}, &code);
    o.require(b["order"] == "3" && b["exceptions"] == "[]", "basis order " + b["order"]);
    auto d = oracle::members(corpus_entry("digits01base4").machine, 10000);
    auto sums = oracle::sumset({d, d, d}, 10000);
    for (std::uint64_t n = 0; n <= 10000; ++n)
        o.require(sums[n], "brute force: " + std::to_string(n) + " not a sum of three");
    for (unsigned n = 0; n <= 1000 && o.pass; ++n) {
        auto c = cli({"count", "--summands", "digits01base4,digits02base4", "--order", "2", "--n",
                      std::to_string(n)},
                     &code);
        o.require(code == kExitDecided && c["representations"] == "1",
                  "n = " + std::to_string(n) + " has " + c["representations"] + " representations");
    }
    if (o.pass)
        o.detail = "order-3 exceptions [] ; unique D + 2D representation for n <= 1000";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(20261019);
    unsigned ok = 0, found = 0, tested = 0;
    while (tested < 200) {
        const unsigned k = 2 + rng() % 2;
        const unsigned states = 1 + rng() % 4;
        Dfa a = minimize(oracle::random_dfa(rng, k, states, 0.5));
        if (a.size() > 4)
            continue;
        ++tested;
        auto members = oracle::members(a, 10000);
        const bool sparse = sparse_oracle(a);
        const std::uint64_t g = oracle::gcd_of(members);
        const bool expect_ok = !sparse && g == 1;

        BasisOptions options;
        options.max_order = 6;
        BasisReport r = decide_basis(a, options);
        const bool got_ok = r.reason == BasisReason::Ok;
        std::ostringstream tag;
        tag << "machine " << tested << " (k=" << k << ", m=" << a.size() << ")";
        o.require(got_ok == expect_ok, tag.str() + ": verdict mismatch, oracle sparse=" +
                                           std::to_string(sparse) + " gcd=" + std::to_string(g));
        ok += got_ok;
        if (!r.minimal_order)
            continue;
        ++found;
        const unsigned j = *r.minimal_order;
        const auto M = static_cast<std::size_t>(r.threshold);
        const std::size_t bound = M + 500;
        Bits sums = at_most_sums(oracle::members(a, bound), j, bound);
        for (std::size_t n = M; n <= bound; ++n)
            o.require(sums.test(n), tag.str() + ": " + std::to_string(n) + " not a sum of at most " +
                                        std::to_string(j));
        if (M > 0)
            o.require(!sums.test(M - 1), tag.str() + ": M-1 is representable");
    }
    if (o.pass)
        o.detail = "200 machines, " + std::to_string(ok) + " bases, " + std::to_string(found) +
                   " with j found, zero mismatches";
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(6);
    unsigned exponential = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned k = 2 + trial % 2;
        const unsigned states = 1 + rng() % 5;
        Dfa a = oracle::random_dfa(rng, k, states, 0.35);
        const std::string tag = "machine " + std::to_string(trial);
        for (unsigned n = 0; n <= (k == 2 ? 14u : 9u); ++n)
            o.require(count_words_of_length(a, n) == oracle::words_of_length(a, n),
                      tag + ": word count mismatch at n = " + std::to_string(n));
        auto est = oracle::estimate_growth(a, 1000);
        GrowthReport r = classify(a);
        o.require(r.polynomial() == !est.exponential, tag + ": growth verdict mismatch");
        if (r.polynomial()) {
            o.require(int(std::get<PolynomialGrowth>(r.verdict).degree) == est.degree,
                      tag + ": degree mismatch");
            continue;
        }
        ++exponential;
        const ExpWitness& w = std::get<ExponentialGrowth>(r.verdict).witness;
        const std::size_t m = trim(Nfa::from_dfa(a)).size();
        o.require(w.t.size() == w.u.size() && w.t != w.u, tag + ": t, u malformed");
        o.require(w.s.size() < m && w.v.size() < m && w.t.size() < 3 * m && w.u.size() < 3 * m,
                  tag + ": witness length bound");
        for (unsigned len = 0; len <= 4; ++len)
            for (unsigned mask = 0; mask < (1u << len); ++mask) {
                Word x = w.s;
                for (unsigned i = 0; i < len; ++i) {
                    const Word& piece = (mask >> i) & 1 ? w.u : w.t;
                    x.insert(x.end(), piece.begin(), piece.end());
                }
                x.insert(x.end(), w.v.begin(), w.v.end());
                o.require(oracle::run_accepts(a, x), tag + ": s{t,u}^<=4 v not accepted");
            }
    }
    for (unsigned n : {3u, 4u, 5u}) {
        std::vector<State> delta((n + 1) * 2, n);
        for (State q = 0; q < n; ++q)
            delta[q * 2] = (q + 1) % n;
        delta[(n - 1) * 2 + 1] = 1;
        std::vector<bool> finals(n + 1, false);
        finals[0] = true;
        ExpWitness w = exp_witness(Dfa(2, delta, 0, finals));
        o.require(w.t.size() == 3 * n - 1 && w.u.size() == 3 * n - 1,
                  "chord cycle n = " + std::to_string(n) + ": |t| = " + std::to_string(w.t.size()));
    }
    o.require(theoretical_bounds(2, 1).first == 2621440, "theoretical N(2,1)");
    if (o.pass)
        o.detail = "500 machines (" + std::to_string(exponential) +
                   " exponential) ; |t| = 3n-1 for n = 3,4,5 ; N(2,1) = 2621440";
    return o;
}

Outcome criterion7() {
    Outcome o;
    using Q = BigRational;
    std::mt19937_64 rng(7);
    auto word = [&](unsigned k, unsigned len) {
        Word w(len);
        for (auto& d : w)
            d = rng() % k;
        return w;
    };
    auto value = [](const Word& w, unsigned k) {
        Q v = 0, place = 1;
        for (Digit d : w) {
            place /= k;
            v += place * d;
        }
        return v;
    };
    unsigned sets = 0;
    while (sets < 100) {
        const unsigned k = 2 + rng() % 4, s = 1 + rng() % 3, L = rng() % 3;
        Word u = word(k, L), y = word(k, s), z = word(k, s);
        if (y == z)
            continue;
        ++sets;
        CantorParams p = cantor_params(k, u, y, z);
        const Q ks = boost::multiprecision::pow(BigNat(k), s);
        const Q lo = std::min(value(y, k), value(z, k)), hi = std::max(value(y, k), value(z, k));
        o.require(p.alpha == lo / (1 - 1 / ks) && p.beta == hi / (1 - 1 / ks), "alpha/beta identity");
        const BigNat bound = boost::multiprecision::pow(BigNat(k), L + s) + boost::multiprecision::pow(BigNat(k), s);
        o.require(overlap_threshold(p) <= bound, "overlap threshold above k^(L+s)+k^s");
        const unsigned t = 1 + rng() % 3;
        o.require(summand_count_bound(p, t) == boost::multiprecision::pow(BigNat(k), 2 * L + 2 * s + t + 1),
                  "summand bound formula");
    }
    CantorParams c = cantor_params(3, {}, {0}, {2});
    o.require(check_selfsimilarity(c, 8), "self-similarity at depth 8");
    auto two = mfold_interval(c, 2);
    o.require(std::holds_alternative<Interval>(two) && std::get<Interval>(two) == Interval{0, 2},
              "classical 2-fold sum is not [0, 2]");
    if (o.pass)
        o.detail = "100 random parameter sets ; depth-8 self-similarity ; C + C = [0, 2]";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(8);
    const std::uint64_t bound = 1000;
    for (int trial = 0; trial < 36; ++trial) {
        const unsigned k = 2 + trial % 2;
        Dfa a = oracle::random_dfa(rng, k, 1 + rng() % 4);
        const unsigned j = 1 + trial % 3;
        auto ms = oracle::members(a, bound);
        std::vector<std::vector<std::uint64_t>> same(j, ms);
        const std::string tag = "machine " + std::to_string(trial) + " j=" + std::to_string(j);
        auto check = [&](const Dfa& sum, const std::vector<bool>& expected, const char* mode) {
            for (std::uint64_t n = 0; n <= bound; ++n)
                if (oracle::run_accepts(sum, oracle::digits_lsd(n, k)) != expected[n]) {
                    o.require(false, tag + " " + mode + ": mismatch at " + std::to_string(n));
                    return;
                }
        };
        check(sum_automaton(SumSpec::homogeneous(a, j)), oracle::sumset(same, bound), "exact");
        std::vector<bool> at_most(bound + 1, false);
        for (unsigned i = 1; i <= j; ++i) {
            auto part = oracle::sumset(std::vector<std::vector<std::uint64_t>>(i, ms), bound);
            for (std::uint64_t n = 0; n <= bound; ++n)
                at_most[n] = at_most[n] || part[n];
        }
        check(sum_automaton(SumSpec::homogeneous(a, j, SumMode::AtMost)), at_most, "atmost");
        check(sum_automaton(SumSpec::homogeneous(a, j, SumMode::Exact, true)),
              oracle::sumset(same, bound, true), "distinct");
        if (j >= 2) {
            const std::uint64_t count_bound = j == 2 ? 300 : 120;
            for (std::uint64_t n = 0; n <= count_bound; ++n) {
                o.require(count_representations(n, SumSpec::homogeneous(a, j)) ==
                              oracle::count_tuples(same, n),
                          tag + ": count mismatch at " + std::to_string(n));
                o.require(count_representations(n, SumSpec::homogeneous(a, j, SumMode::Exact, true)) ==
                              oracle::count_tuples(same, n, true),
                          tag + ": distinct count mismatch at " + std::to_string(n));
            }
        }
    }
    if (o.pass)
        o.detail = "36 machines, exact / atmost / distinct on [0, 1000], counts match brute force";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0 = no runtime bound
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "cantor3 pair sums cover the even numbers", 5, criterion1},
        {2, "evil numbers: order 3 and the order-2 exceptions", 30, criterion2},
        {3, "rudin-shapiro numbers: order 2 exceptions", 30, criterion3},
        {4, "base-4 digits {0,1}: order 3 and unique D + 2D", 60, criterion4},
        {5, "basis verdicts on 200 random machines", 0, criterion5},
        {6, "growth classification on 500 random machines", 0, criterion6},
        {7, "cantor set identities", 10, criterion7},
        {8, "sumset automata against brute force", 0, criterion8},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs > c.limit_s && o.pass) {
            o.pass = false;
            o.detail = "runtime limit " + std::to_string(c.limit_s) + " s exceeded";
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " ("
                  << std::fixed << std::setprecision(2) << secs << " s) " << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
