#include "autobasis/sumset.hpp"

#include "autobasis/error.hpp"
#include "autobasis/numeral.hpp"
#include "subset.hpp"

#include <limits>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace autobasis {

namespace {

unsigned common_base(const std::vector<Dfa>& summands) {
    if (summands.empty())
        throw InputError("a sum needs at least one summand");
    unsigned k = summands.front().base();
    for (const Dfa& s : summands)
        if (s.base() != k)
            throw InputError("summands must share one base");
    return k;
}

// Parallel simulation of j zero-closed summand machines with a carry and,
// optionally, one "differs so far" bit per pair of summands.
class SumProduct {
public:
    SumProduct(const std::vector<Dfa>& summands, bool distinct)
        : base_(common_base(summands)), distinct_(distinct) {
        for (const Dfa& s : summands)
            padded_.push_back(value_closure(s));
        const std::size_t j = padded_.size();
        pairs_ = distinct_ ? j * (j - 1) / 2 : 0;
        radix_.reserve(j);
        long double capacity = 1;
        for (const Dfa& s : padded_) {
            radix_.push_back(s.size());
            capacity *= static_cast<long double>(s.size());
        }
        capacity *= static_cast<long double>(j);
        capacity *= static_cast<long double>(std::uint64_t(1) << std::min<std::size_t>(pairs_, 62));
        if (pairs_ >= 62 || capacity > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
            throw ResourceError("sum product state space does not fit in 64-bit codes");
    }

    unsigned base() const { return base_; }
    std::size_t arity() const { return padded_.size(); }

    struct Unpacked {
        std::vector<State> states;
        unsigned carry = 0;
        std::uint64_t flags = 0;
    };

    detail::Code pack(const Unpacked& u) const {
        detail::Code code = u.flags;
        code = code * arity() + u.carry;
        for (std::size_t i = arity(); i-- > 0;)
            code = code * radix_[i] + u.states[i];
        return code;
    }

    Unpacked unpack(detail::Code code) const {
        Unpacked u;
        u.states.resize(arity());
        for (std::size_t i = 0; i < arity(); ++i) {
            u.states[i] = static_cast<State>(code % radix_[i]);
            code /= radix_[i];
        }
        u.carry = static_cast<unsigned>(code % arity());
        u.flags = code / arity();
        return u;
    }

    detail::Code initial() const {
        Unpacked u;
        for (const Dfa& s : padded_)
            u.states.push_back(s.initial());
        return pack(u);
    }

    bool accepting(detail::Code code) const {
        Unpacked u = unpack(code);
        if (u.carry != 0)
            return false;
        if (distinct_ && u.flags != (std::uint64_t(1) << pairs_) - 1)
            return false;
        for (std::size_t i = 0; i < arity(); ++i)
            if (!padded_[i].is_final(u.states[i]))
                return false;
        return true;
    }

    /// Calls visit(successor) once per digit tuple producing output digit o.
    template <class Visit>
    void successors(detail::Code code, Digit o, Visit&& visit) const {
        const Unpacked u = unpack(code);
        const std::size_t j = arity();
        std::vector<Digit> digits(j, 0);
        Unpacked v;
        v.states.resize(j);
        // Odometer over the first j-1 digits; the last one is forced.
        while (true) {
            unsigned partial = u.carry;
            for (std::size_t i = 0; i + 1 < j; ++i)
                partial += digits[i];
            Digit last = static_cast<Digit>((o + base_ * (partial / base_ + 1) - partial) % base_);
            digits[j - 1] = last;
            const unsigned total = partial + last;
            for (std::size_t i = 0; i < j; ++i)
                v.states[i] = padded_[i].next(u.states[i], digits[i]);
            v.carry = total / base_;
            v.flags = u.flags;
            if (distinct_) {
                std::size_t bit = 0;
                for (std::size_t a = 0; a < j; ++a)
                    for (std::size_t b = a + 1; b < j; ++b, ++bit)
                        if (digits[a] != digits[b])
                            v.flags |= std::uint64_t(1) << bit;
            }
            visit(pack(v));

            std::size_t i = 0;
            while (i + 1 < j && ++digits[i] == base_)
                digits[i++] = 0;
            if (i + 1 >= j)
                break;
        }
    }

    Dfa determinize() const {
        Dfa raw = detail::subset_construct(
            base_, {initial()},
            [&](detail::Code c, Digit o, detail::CodeSet& out) {
                successors(c, o, [&](detail::Code next) { out.push_back(next); });
            },
            [&](detail::Code c) { return accepting(c); });
        return minimize(intersect(raw, canonical_language(base_)));
    }

private:
    unsigned base_;
    bool distinct_;
    std::size_t pairs_ = 0;
    std::vector<Dfa> padded_;
    std::vector<std::uint64_t> radix_;
};

void check_distinct(const std::vector<Dfa>& summands) {
    const Dfa first = canonicalize(summands.front());
    for (std::size_t i = 1; i < summands.size(); ++i)
        if (!equivalent(first, canonicalize(summands[i])))
            throw InputError("distinct sums require all summands to accept the same set");
}

}  // namespace

SumSpec SumSpec::homogeneous(const Dfa& set, unsigned order, SumMode mode, bool distinct) {
    if (order == 0)
        throw InputError("sum order must be at least 1");
    return SumSpec{std::vector<Dfa>(order, set), distinct, mode};
}

Dfa sum_pair(const Dfa& a, const Dfa& b) { return SumProduct({a, b}, false).determinize(); }

Dfa sum_automaton(const SumSpec& spec) {
    common_base(spec.summands);
    if (spec.distinct) {
        check_distinct(spec.summands);
        if (spec.mode == SumMode::Exact)
            return SumProduct(spec.summands, true).determinize();
        Dfa acc = canonicalize(spec.summands.front());
        for (std::size_t i = 2; i <= spec.summands.size(); ++i) {
            std::vector<Dfa> prefix(spec.summands.begin(), spec.summands.begin() + i);
            acc = minimize(unite(acc, SumProduct(prefix, true).determinize()));
        }
        return acc;
    }
    PrefixSums prefixes(spec.summands);
    if (spec.mode == SumMode::Exact)
        return prefixes.exact(prefixes.size());
    Dfa any_prefix = prefixes.exact(1);
    for (std::size_t i = 2; i <= prefixes.size(); ++i)
        any_prefix = minimize(unite(any_prefix, prefixes.exact(i)));
    return any_prefix;
}

PrefixSums::PrefixSums(std::vector<Dfa> summands) : summands_(std::move(summands)) {
    common_base(summands_);
    for (Dfa& s : summands_)
        s = canonicalize(s);
    for (std::size_t i = 1; i < summands_.size() && homogeneous_; ++i)
        homogeneous_ = equivalent(summands_[0], summands_[i]);
}

const Dfa& PrefixSums::exact(std::size_t i) {
    if (i == 0 || i > summands_.size())
        throw InputError("prefix length out of range");
    while (done_.size() < i) {
        const std::size_t n = done_.size() + 1;
        if (n == 1) {
            done_.push_back(summands_[0]);
            continue;
        }
        // Product sizes, ignoring the carry factor shared by binary splits.
        long double direct = static_cast<long double>(n);
        for (std::size_t t = 0; t < n; ++t)
            direct *= static_cast<long double>(summands_[t].size());
        long double best = 2.0L * done_[n - 2].size() * summands_[n - 1].size();
        std::size_t split = n - 1;
        if (homogeneous_)
            for (std::size_t a = 1; a <= n / 2; ++a) {
                long double cost = 2.0L * done_[a - 1].size() * done_[n - a - 1].size();
                if (cost < best) {
                    best = cost;
                    split = a;
                }
            }
        if (direct <= best) {
            std::vector<Dfa> prefix(summands_.begin(), summands_.begin() + n);
            done_.push_back(SumProduct(prefix, false).determinize());
        } else if (split == n - 1) {
            done_.push_back(sum_pair(done_[n - 2], summands_[n - 1]));
        } else {
            done_.push_back(sum_pair(done_[split - 1], done_[n - split - 1]));
        }
    }
    return done_[i - 1];
}

Dfa add_constant(const Dfa& a, const BigNat& c) {
    const unsigned k = a.base();
    const Dfa z = value_closure(a);
    const Word cd = encode(c, k);
    const std::uint64_t len = cd.size();
    // Code: ((q * (len + 1)) + pos) * 2 + carry.
    auto unpack = [&](detail::Code code) {
        return std::tuple<State, std::uint64_t, unsigned>(
            static_cast<State>(code / 2 / (len + 1)), (code / 2) % (len + 1), code % 2);
    };
    auto pack = [&](State q, std::uint64_t pos, unsigned carry) {
        return (std::uint64_t(q) * (len + 1) + pos) * 2 + carry;
    };
    Dfa raw = detail::subset_construct(
        k, {pack(z.initial(), 0, 0)},
        [&](detail::Code code, Digit o, detail::CodeSet& out) {
            auto [q, pos, carry] = unpack(code);
            const Digit cdig = pos < len ? cd[pos] : 0;
            const Digit x = static_cast<Digit>((o + 2 * k - cdig - carry) % k);
            const unsigned total = x + cdig + carry;
            out.push_back(pack(z.next(q, x), std::min(pos + 1, len), total / k));
        },
        [&](detail::Code code) {
            auto [q, pos, carry] = unpack(code);
            return z.is_final(q) && pos == len && carry == 0;
        });
    return minimize(intersect(raw, canonical_language(k)));
}

Dfa shift_preimage(const Dfa& t, const BigNat& c) {
    const unsigned k = t.base();
    const Dfa z = value_closure(t);
    const Word cd = encode(c, k);
    const std::uint64_t len = cd.size();
    auto unpack = [&](detail::Code code) {
        return std::tuple<State, std::uint64_t, unsigned>(
            static_cast<State>(code / 2 / (len + 1)), (code / 2) % (len + 1), code % 2);
    };
    auto pack = [&](State q, std::uint64_t pos, unsigned carry) {
        return (std::uint64_t(q) * (len + 1) + pos) * 2 + carry;
    };
    auto step = [&](State q, std::uint64_t pos, unsigned carry, Digit x) {
        const Digit cdig = pos < len ? cd[pos] : 0;
        const unsigned total = x + cdig + carry;
        return pack(z.next(q, total % k), std::min(pos + 1, len), total / k);
    };
    Dfa raw = detail::subset_construct(
        k, {pack(z.initial(), 0, 0)},
        [&](detail::Code code, Digit x, detail::CodeSet& out) {
            auto [q, pos, carry] = unpack(code);
            out.push_back(step(q, pos, carry, x));
        },
        [&](detail::Code code) {
            // Flush the remaining digits of c and the carry with zero input.
            auto [q, pos, carry] = unpack(code);
            while (pos < len || carry != 0)
                std::tie(q, pos, carry) = unpack(step(q, pos, carry, 0));
            return z.is_final(q);
        });
    return minimize(intersect(raw, canonical_language(k)));
}

Dfa scale_by_constant(const Dfa& a, std::uint32_t d) {
    if (d == 0)
        throw InputError("scale factor must be at least 1");
    const unsigned k = a.base();
    const Dfa z = value_closure(a);
    const std::uint64_t carries = d;
    Dfa raw = detail::subset_construct(
        k, {std::uint64_t(z.initial()) * carries},
        [&](detail::Code code, Digit o, detail::CodeSet& out) {
            const State q = static_cast<State>(code / carries);
            const std::uint64_t carry = code % carries;
            for (Digit x = 0; x < k; ++x) {
                const std::uint64_t total = std::uint64_t(d) * x + carry;
                if (total % k == o)
                    out.push_back(std::uint64_t(z.next(q, x)) * carries + total / k);
            }
        },
        [&](detail::Code code) {
            return code % carries == 0 && z.is_final(static_cast<State>(code / carries));
        });
    return minimize(intersect(raw, canonical_language(k)));
}

BigNat count_representations(const BigNat& n, const SumSpec& spec) {
    if (spec.mode != SumMode::Exact)
        throw InputError("representation counts are defined for exact sums only");
    if (spec.distinct)
        check_distinct(spec.summands);
    const SumProduct product(spec.summands, spec.distinct);
    const Word digits = encode(n, product.base());
    std::unordered_map<detail::Code, BigNat> ways{{product.initial(), BigNat(1)}};
    for (Digit o : digits) {
        std::unordered_map<detail::Code, BigNat> next;
        for (const auto& [code, count] : ways)
            product.successors(code, o, [&](detail::Code succ) { next[succ] += count; });
        ways = std::move(next);
    }
    BigNat total = 0;
    for (const auto& [code, count] : ways)
        if (product.accepting(code))
            total += count;
    return total;
}

ProductStats product_stats(const SumSpec& spec) {
    const SumProduct product(spec.summands, spec.distinct);
    std::unordered_set<detail::Code> seen{product.initial()};
    std::vector<detail::Code> stack{product.initial()};
    ProductStats stats;
    while (!stack.empty()) {
        detail::Code code = stack.back();
        stack.pop_back();
        stats.max_carry = std::max(stats.max_carry, product.unpack(code).carry);
        for (Digit o = 0; o < product.base(); ++o)
            product.successors(code, o, [&](detail::Code next) {
                if (seen.insert(next).second)
                    stack.push_back(next);
            });
    }
    stats.reachable = seen.size();
    return stats;
}

}  // namespace autobasis
