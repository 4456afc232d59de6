#include "autobasis/error.hpp"
#include "autobasis/numeral.hpp"
#include "autobasis/sumset.hpp"

#include "../oracles.hpp"

#include <doctest.h>

using namespace autobasis;

namespace {

Dfa evil() { return Dfa(2, {0, 1, 1, 0}, 0, {true, false}); }
Dfa cantor() { return Dfa(3, {0, 1, 0, 1, 1, 1}, 0, {true, false}); }
Dfa digits(unsigned k, std::initializer_list<Digit> allowed) {
    std::vector<State> delta(2 * k, 1);
    for (Digit d : allowed)
        delta[d] = 0;
    return Dfa(k, delta, 0, {true, false});
}

std::vector<bool> decoded(const Dfa& a, std::uint64_t bound) {
    std::vector<bool> out(bound + 1);
    for (std::uint64_t n = 0; n <= bound; ++n)
        out[n] = oracle::run_accepts(a, oracle::digits_lsd(n, a.base()));
    return out;
}

}  // namespace

TEST_SUITE("sumset") {
    TEST_CASE("exact pair sums of cantor numbers") {
        auto ms = oracle::members(cantor(), 200);
        Dfa two = sum_automaton(SumSpec::homogeneous(canonicalize(cantor()), 2));
        CHECK(decoded(two, 200) == oracle::sumset({ms, ms}, 200));
        Dfa one = sum_automaton(SumSpec::homogeneous(cantor(), 1));
        CHECK(equivalent(one, canonicalize(cantor())));
    }

    TEST_CASE("exact pair sums of evil numbers miss 1, 2, 4, 7, 31") {
        Dfa two = sum_automaton(SumSpec::homogeneous(evil(), 2));
        std::vector<std::uint64_t> missing;
        auto got = decoded(two, 100);
        for (std::uint64_t n = 0; n <= 100; ++n)
            if (!got[n])
                missing.push_back(n);
        CHECK(missing == std::vector<std::uint64_t>{1, 2, 4, 7, 31});
    }

    TEST_CASE("random sums against brute force") {
        std::mt19937_64 rng(53);
        const std::uint64_t bound = 400;
        for (int trial = 0; trial < 40; ++trial) {
            unsigned k = 2 + trial % 2;
            Dfa a = oracle::random_dfa(rng, k, 1 + trial % 4);
            Dfa b = oracle::random_dfa(rng, k, 1 + (trial / 4) % 4);
            auto ma = oracle::members(a, bound), mb = oracle::members(b, bound);
            const unsigned j = 1 + trial % 3;
            std::vector<std::vector<std::uint64_t>> same(j, ma);

            Dfa exact = sum_automaton(SumSpec::homogeneous(a, j, SumMode::Exact));
            REQUIRE(decoded(exact, bound) == oracle::sumset(same, bound));

            Dfa at_most = sum_automaton(SumSpec::homogeneous(a, j, SumMode::AtMost));
            std::vector<bool> expected(bound + 1, false);
            for (unsigned i = 1; i <= j; ++i) {
                auto part = oracle::sumset(std::vector<std::vector<std::uint64_t>>(i, ma), bound);
                for (std::uint64_t n = 0; n <= bound; ++n)
                    expected[n] = expected[n] || part[n];
            }
            REQUIRE(decoded(at_most, bound) == expected);

            Dfa distinct = sum_automaton(SumSpec::homogeneous(a, j, SumMode::Exact, true));
            REQUIRE(decoded(distinct, bound) == oracle::sumset(same, bound, true));

            REQUIRE(decoded(sum_pair(a, b), bound) == oracle::sumset({ma, mb}, bound));
        }
    }

    TEST_CASE("prefix sums up to six summands") {
        // Pairwise folding of this machine produces a 92-state intermediate.
        Dfa a(3, {1, 1, 2, 2, 1, 0, 2, 2, 1}, 0, {true, false, false});
        Dfa b = digits(3, {0, 2});
        const std::uint64_t bound = 300;
        auto ma = oracle::members(a, bound), mb = oracle::members(b, bound);
        PrefixSums same(std::vector<Dfa>(6, a));
        PrefixSums mixed({a, b, a, b});
        for (unsigned i = 1; i <= 6; ++i) {
            REQUIRE(decoded(same.exact(i), bound) ==
                    oracle::sumset(std::vector<std::vector<std::uint64_t>>(i, ma), bound));
            if (i <= 4) {
                std::vector<std::vector<std::uint64_t>> sets;
                for (unsigned t = 0; t < i; ++t)
                    sets.push_back(t % 2 ? mb : ma);
                REQUIRE(decoded(mixed.exact(i), bound) == oracle::sumset(sets, bound));
            }
        }
        CHECK_THROWS_AS(same.exact(7), InputError);
    }

    TEST_CASE("distinct sums need identical summand sets") {
        SumSpec spec;
        spec.summands = {evil(), cantor()};
        spec.distinct = true;
        CHECK_THROWS_AS(sum_automaton(spec), InputError);
    }

    TEST_CASE("add_constant") {
        CHECK(equivalent(add_constant(evil(), 0), canonicalize(evil())));
        Dfa zero(2, {1, 1, 1, 1}, 0, {true, false});
        CHECK(set_members(add_constant(zero, 5), 1000) == std::vector<BigNat>{5});
        std::mt19937_64 rng(59);
        for (int trial = 0; trial < 20; ++trial) {
            Dfa a = oracle::random_dfa(rng, 2 + trial % 2, 4);
            auto got = decoded(add_constant(a, 7), 1000);
            auto in = oracle::indicator(a, 1000);
            for (std::uint64_t n = 0; n <= 1000; ++n)
                REQUIRE(got[n] == (n >= 7 && in[n - 7]));
        }
    }

    TEST_CASE("shift_preimage") {
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 20; ++trial) {
            Dfa a = oracle::random_dfa(rng, 2 + trial % 2, 4);
            auto got = decoded(shift_preimage(a, 9), 900);
            auto in = oracle::indicator(a, 909);
            for (std::uint64_t n = 0; n <= 900; ++n)
                REQUIRE(got[n] == in[n + 9]);
        }
    }

    TEST_CASE("scale_by_constant") {
        CHECK(equivalent(scale_by_constant(evil(), 1), canonicalize(evil())));
        Dfa d01 = digits(4, {0, 1});
        CHECK(equivalent(scale_by_constant(d01, 2), canonicalize(digits(4, {0, 2}))));
        CHECK(set_members(scale_by_constant(d01, 2), 10000) ==
              set_members(digits(4, {0, 2}), 10000));
        Dfa one(2, {2, 1, 2, 2, 2, 2}, 0, {false, true, false});
        Dfa scaled = scale_by_constant(one, 2);
        CHECK(scaled.accepts(Word{0, 1}));
        CHECK(set_members(scaled, 100) == std::vector<BigNat>{2});
        std::mt19937_64 rng(67);
        for (int trial = 0; trial < 20; ++trial) {
            Dfa a = oracle::random_dfa(rng, 3, 3);
            const unsigned d = 2 + trial % 5;
            auto got = decoded(scale_by_constant(a, d), 900);
            auto in = oracle::indicator(a, 900);
            for (std::uint64_t n = 0; n <= 900; ++n)
                REQUIRE(got[n] == (n % d == 0 && in[n / d]));
        }
    }

    TEST_CASE("count_representations") {
        Dfa d01 = digits(4, {0, 1}), d02 = digits(4, {0, 2});
        SumSpec pair;
        pair.summands = {d01, d02};
        for (unsigned n = 0; n <= 1000; ++n)
            REQUIRE(count_representations(n, pair) == 1);

        auto ev = oracle::members(evil(), 300);
        for (unsigned n = 0; n <= 300; ++n) {
            REQUIRE(count_representations(n, SumSpec::homogeneous(evil(), 1)) ==
                    (oracle::member(evil(), n) ? 1 : 0));
            REQUIRE(count_representations(n, SumSpec::homogeneous(evil(), 2)) ==
                    oracle::count_tuples({ev, ev}, n));
        }
        CHECK_THROWS_AS(
            count_representations(5, SumSpec::homogeneous(evil(), 2, SumMode::AtMost)),
            InputError);

        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 12; ++trial) {
            Dfa a = oracle::random_dfa(rng, 2, 3);
            auto ms = oracle::members(a, 120);
            for (unsigned n = 0; n <= 120; n += 3) {
                REQUIRE(count_representations(n, SumSpec::homogeneous(a, 3)) ==
                        oracle::count_tuples({ms, ms, ms}, n));
                REQUIRE(count_representations(n, SumSpec::homogeneous(a, 3, SumMode::Exact, true)) ==
                        oracle::count_tuples({ms, ms, ms}, n, true));
            }
        }
    }

    TEST_CASE("product carries stay below the summand count") {
        for (unsigned j = 1; j <= 4; ++j) {
            ProductStats st = product_stats(SumSpec::homogeneous(evil(), j));
            CHECK(st.max_carry < j);
            CHECK(st.reachable > 0);
        }
    }
}
