#include "autobasis/cantor.hpp"

#include "autobasis/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace autobasis {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigNat integer_value(const Word& msd, unsigned k) {
    BigNat v = 0;
    for (Digit d : msd)
        v = v * k + d;
    return v;
}

// 0.w in base k.
BigRational fraction_value(const Word& msd, unsigned k) {
    return BigRational(integer_value(msd, k), pow_nat(k, static_cast<unsigned>(msd.size())));
}

BigNat ceil_div(const BigRational& q) {
    BigNat n = numerator(q), d = denominator(q);
    BigNat r = n / d;
    if (r * d < n)
        ++r;
    return r;
}

BigNat floor_of(const BigRational& q) {
    BigNat n = numerator(q), d = denominator(q);
    BigNat r = n / d;
    if (r * d > n)
        --r;
    return r;
}

void check_digits(const Word& w, unsigned k, const char* name) {
    for (Digit d : w)
        if (d >= k)
            throw InputError(std::string("digit out of range in ") + name);
}

struct Blocks {
    BigNat K;       // k^s
    BigNat y_int;   // [y]_k
    BigNat delta;   // [z]_k - [y]_k
    BigRational a;  // U + k^-L alpha
    BigRational b;  // U + k^-L beta
    BigRational scale;  // k^-L
};

Blocks blocks_of(const CantorParams& p) {
    Blocks b;
    b.K = pow_nat(p.k, p.s);
    b.y_int = integer_value(p.y, p.k);
    b.delta = integer_value(p.z, p.k) - b.y_int;
    b.scale = inverse_power(p.k, p.L);
    b.a = p.U + b.scale * p.alpha;
    b.b = p.U + b.scale * p.beta;
    return b;
}

}  // namespace

CantorParams cantor_params(unsigned k, Word u, Word y, Word z, std::optional<Word> v) {
    if (k < 2)
        throw InputError("base must be at least 2");
    if (y.size() != z.size())
        throw InputError("blocks y and z must have equal length");
    if (y.empty())
        throw InputError("blocks y and z must be nonempty");
    if (y == z)
        throw InputError("blocks y and z must differ");
    check_digits(u, k, "u");
    check_digits(y, k, "y");
    check_digits(z, k, "z");
    if (v)
        check_digits(*v, k, "v");

    CantorParams p;
    p.k = k;
    p.L = static_cast<unsigned>(u.size());
    p.s = static_cast<unsigned>(y.size());
    p.K = v ? static_cast<unsigned>(v->size()) : 0;
    p.Y = fraction_value(y, k);
    p.Z = fraction_value(z, k);
    if (p.Y > p.Z) {
        std::swap(y, z);
        std::swap(p.Y, p.Z);
        p.swapped = true;
    }
    p.U = fraction_value(u, k);
    p.u = std::move(u);
    p.y = std::move(y);
    p.z = std::move(z);
    p.v = std::move(v);
    const BigRational factor = 1 / (1 - inverse_power(k, p.s));
    p.alpha = factor * p.Y;
    p.beta = factor * p.Z;
    return p;
}

std::vector<Interval> level_set(const DissectionSpec& spec) {
    if (spec.ratio <= 0 || spec.ratio > BigRational(1, 2))
        throw InputError("dissection ratio must lie in (0, 1/2]");
    if (!(spec.lo < spec.hi))
        throw InputError("initial interval must have lo < hi");
    if (spec.depth > kMaxLevelDepth)
        throw ResourceError("level_set depth " + std::to_string(spec.depth) + " exceeds " +
                            std::to_string(kMaxLevelDepth));
    std::vector<Interval> level{{spec.lo, spec.hi}};
    for (unsigned n = 0; n < spec.depth; ++n) {
        std::vector<Interval> next;
        next.reserve(level.size() * 2);
        for (const Interval& iv : level) {
            const BigRational len = spec.ratio * (iv.hi - iv.lo);
            next.push_back({iv.lo, iv.lo + len});
            next.push_back({iv.hi - len, iv.hi});
        }
        level = std::move(next);
    }
    return level;
}

bool check_selfsimilarity(const CantorParams& p, unsigned depth) {
    if (depth > 12)
        throw ResourceError("self-similarity depth is limited to 12");
    if (!(p.alpha < p.beta))
        return false;
    const BigRational r = inverse_power(p.k, p.s);
    auto by_position = [](const Interval& x, const Interval& y) {
        return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
    };
    for (unsigned n = 0; n < depth; ++n) {
        std::vector<Interval> current = level_set({r, p.alpha, p.beta, n});
        std::vector<Interval> expected = level_set({r, p.alpha, p.beta, n + 1});
        std::vector<Interval> images;
        for (const BigRational* shift : {&p.Y, &p.Z})
            for (const Interval& iv : current)
                images.push_back({r * iv.lo + *shift, r * iv.hi + *shift});
        std::sort(images.begin(), images.end(), by_position);
        std::sort(expected.begin(), expected.end(), by_position);
        if (images != expected)
            return false;
    }
    return true;
}

MfoldResult mfold_interval(const CantorParams& p, unsigned m) {
    if (m == 0)
        throw InputError("m must be at least 1");
    const Blocks b = blocks_of(p);
    if (BigNat(m) + 1 >= b.K)
        return Interval{m * b.a, m * b.b};

    // Level n of the m-fold sum: left endpoints m alpha + w N, where N runs
    // over n-digit base-K numbers with digits 0..m and w is the level unit;
    // every piece has length w m / (K - 1).
    constexpr std::size_t kMaxCells = 50'000'000;
    const auto K = static_cast<std::uint64_t>(b.K);
    const BigRational r = BigRational(1) / BigRational(b.K);
    std::vector<char> reachable{1};
    unsigned n = 1;
    for (; n <= 10; ++n) {
        const std::size_t width = (reachable.size() - 1) * K + m + 1;
        if (width > kMaxCells)
            break;
        std::vector<char> next(width, 0);
        for (std::size_t v = 0; v < reachable.size(); ++v)
            if (reachable[v])
                for (unsigned c = 0; c <= m; ++c)
                    next[v * K + c] = 1;
        reachable = std::move(next);

        std::size_t previous = 0;
        for (std::size_t v = 1; v < reachable.size(); ++v) {
            if (!reachable[v])
                continue;
            if ((v - previous) * (K - 1) > m) {
                BigRational unit = (p.beta - p.alpha) * (1 - r);
                for (unsigned i = 1; i < n; ++i)
                    unit *= r;
                const BigRational left = m * p.alpha + (previous + BigRational(m, K - 1)) * unit;
                const BigRational right = m * p.alpha + BigRational(v) * unit;
                return NotInterval{{m * p.U + b.scale * left, m * p.U + b.scale * right}, n};
            }
            previous = v;
        }
    }
    return Inconclusive{n - 1};
}

BigNat overlap_threshold(const CantorParams& p) {
    const Blocks b = blocks_of(p);
    if (!(b.a < b.b))
        throw std::logic_error("overlap_threshold: degenerate interval");
    BigNat m = ceil_div(b.a / (b.b - b.a));
    if (m < 1)
        m = 1;
    const BigNat proof_bound = pow_nat(p.k, p.L + p.s) + pow_nat(p.k, p.s);
    if (m > proof_bound)
        throw std::logic_error("overlap_threshold exceeded k^(L+s) + k^s");
    return m;
}

BigNat summand_count_bound(const CantorParams& p, unsigned t) {
    if (t < 1)
        throw InputError("t must be at least 1");
    return pow_nat(p.k, 2 * p.L + 2 * p.s + t + 1);
}

bool in_cantor_set(const CantorParams& p, const BigRational& x) {
    const Blocks b = blocks_of(p);
    const BigRational c = (x - p.U) * pow_nat(p.k, p.L);
    const BigRational z_int = b.y_int + b.delta;
    auto inside = [&](const BigRational& v) { return p.alpha <= v && v <= p.beta; };
    if (!inside(c))
        return false;
    // Remainders under x -> Kx - [y] or Kx - [z] stay in a finite set; x is
    // a member iff an infinite path exists from it.
    std::map<BigRational, std::vector<BigRational>> graph;
    std::vector<BigRational> stack{c};
    while (!stack.empty()) {
        BigRational v = stack.back();
        stack.pop_back();
        if (graph.count(v))
            continue;
        auto& succ = graph[v];
        for (const BigRational& digit : {BigRational(b.y_int), z_int}) {
            BigRational w = BigRational(b.K) * v - digit;
            if (inside(w)) {
                succ.push_back(w);
                stack.push_back(w);
            }
        }
        if (graph.size() > 1'000'000)
            throw ResourceError("membership search exceeded its budget");
    }
    // Drop nodes without successors until stable.
    std::set<BigRational> dead;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [v, succ] : graph) {
            if (dead.count(v))
                continue;
            bool alive = std::any_of(succ.begin(), succ.end(),
                                     [&](const BigRational& w) { return !dead.count(w); });
            if (!alive) {
                dead.insert(v);
                changed = true;
            }
        }
    }
    return !dead.count(c);
}

std::optional<std::vector<BigRational>> realize_as_sum(const CantorParams& p,
                                                       const BigRational& gamma,
                                                       const BigNat& max_terms) {
    const Blocks b = blocks_of(p);
    const BigRational Kq(b.K);
    BigNat m = b.K - 1;
    if (m < 1)
        m = 1;
    if (BigNat needed = ceil_div(gamma / b.b); needed > m)
        m = needed;
    for (; m <= max_terms; ++m) {
        if (m * b.a > gamma)
            return std::nullopt;
        if (m * b.b < gamma)
            continue;
        const BigRational lo = m * p.alpha, hi = m * p.beta;
        BigRational x = (gamma - m * p.U) * pow_nat(p.k, p.L);

        // Greedy expansion x = sum a_i K^-i with a_i = m [y] + c_i ([z] - [y]).
        std::map<BigRational, std::size_t> seen;
        std::vector<BigNat> counts;
        bool failed = false;
        while (!seen.count(x)) {
            seen.emplace(x, counts.size());
            BigRational room = (Kq * x - m * b.y_int - lo) / BigRational(b.delta);
            BigNat c = floor_of(room);
            if (c > m)
                c = m;
            BigRational next = Kq * x - m * b.y_int - c * b.delta;
            if (c < 0 || next > hi) {
                failed = true;
                break;
            }
            counts.push_back(c);
            x = next;
            if (seen.size() > 1'000'000)
                throw ResourceError("expansion did not become periodic within budget");
        }
        if (failed)
            continue;
        const std::size_t pre = seen.at(x);
        const std::size_t period = counts.size() - pre;

        const auto terms = static_cast<std::size_t>(m);
        std::vector<BigRational> summands(terms);
        for (std::size_t r = 0; r < terms; ++r) {
            BigRational head = 0, cycle = 0, weight = 1;
            for (std::size_t i = 0; i < counts.size(); ++i) {
                weight /= Kq;
                const BigNat block = BigNat(r) < counts[i] ? b.y_int + b.delta : b.y_int;
                (i < pre ? head : cycle) += block * weight;
            }
            // cycle currently carries the factor K^-pre; close the geometric series.
            const BigRational closed = cycle / (1 - BigRational(1) / boost::multiprecision::pow(b.K, static_cast<unsigned>(period)));
            summands[r] = p.U + b.scale * (head + closed);
        }
        return summands;
    }
    return std::nullopt;
}

GridCheck verify_hare_grid(const CantorParams& p, unsigned t, const BigRational& step) {
    if (step <= 0)
        throw InputError("grid step must be positive");
    const BigNat bound = summand_count_bound(p, t);
    const BigRational lo(pow_nat(p.k, p.L + p.s + 1));
    const BigRational hi(pow_nat(p.k, p.L + p.s + 1 + t));
    GridCheck check;
    for (BigRational gamma = lo; gamma <= hi; gamma += step) {
        ++check.points;
        auto terms = realize_as_sum(p, gamma, bound);
        if (!terms)
            continue;
        BigRational total = 0;
        bool members = true;
        for (const BigRational& e : *terms) {
            total += e;
            members = members && in_cantor_set(p, e);
        }
        if (total == gamma && members && BigNat(terms->size()) <= bound) {
            ++check.realized;
            check.max_terms_used = std::max(check.max_terms_used, terms->size());
        }
    }
    return check;
}

}  // namespace autobasis
