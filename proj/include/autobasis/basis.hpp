#pragma once

// Deciding whether an automatic set is an (asymptotic) additive basis.

#include "autobasis/automaton.hpp"
#include "autobasis/bignum.hpp"
#include "autobasis/sumset.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace autobasis {

enum class BasisKind { Asymptotic, Exact };

enum class BasisReason {
    Ok,
    NonSparseFailed,  ///< the set is sparse
    GcdFailed,        ///< gcd of the set exceeds 1
    OneNotInS,        ///< exact basis requested but 1 is not a member
};

struct BasisOptions {
    unsigned max_order = 8;
    BasisKind kind = BasisKind::Asymptotic;
    /// AtMost: sums of at most j members. Exact: sums of exactly j members.
    SumMode sum_mode = SumMode::AtMost;
};

struct BasisReport {
    BasisKind kind = BasisKind::Asymptotic;
    SumMode sum_mode = SumMode::AtMost;
    BasisReason reason = BasisReason::Ok;

    bool sparse = false;
    BigNat gcd = 0;  ///< 0 when not computed (sparse sets)
    bool contains_one = false;
    /// Non-sparse with gcd 1.
    bool asymptotic_basis = false;
    /// Additionally 1 is a member.
    bool exact_basis = false;

    /// Set once the search found an order; unset when inconclusive or gated.
    std::optional<unsigned> minimal_order;
    bool inconclusive = false;
    unsigned searched_up_to = 0;
    /// Numbers that are not a sum of one to j members (0 included when it is
    /// not such a sum), sorted.
    std::vector<BigNat> exceptions;
    /// 0 is listed above but counts as the empty sum.
    bool zero_by_empty_sum = false;
    /// 1 + max(exceptions), or 0 when there are none.
    BigNat threshold = 0;
    /// Numbers that are not a sum of exactly minimal_order members, when
    /// that set is finite. Equals `exceptions` in Exact mode.
    std::optional<std::vector<BigNat>> exact_exceptions;

    std::size_t state_count = 0;
    BigNat theoretical_order;      ///< 5 k^(16m+3)
    BigNat theoretical_threshold;  ///< 3 k^(16m+5)
};

BasisReport decide_basis(const Dfa& a, const BasisOptions& options);
BasisReport decide_basis(const Dfa& a, unsigned max_order, bool asymptotic);

/// p c^i s is accepted for every i >= 0.
struct InfiniteWitness {
    Word prefix, cycle, suffix;
    unsigned base = 2;

    Word pumped_word(unsigned i) const;
    BigNat pumped(unsigned i) const;
};

using ExceptionResult = std::variant<std::vector<BigNat>, InfiniteWitness>;

/// Values of target that are not values of sum. With require_finite, an
/// infinite difference raises PreconditionError instead of a witness.
ExceptionResult exceptions_relative(const Dfa& sum, const Dfa& target, bool require_finite = false);

/// A cycle on an accepting path of an infinite language, nullopt if finite.
std::optional<InfiniteWitness> infinite_witness(const Dfa& a);

struct SyndeticReport {
    unsigned c = 1;
    bool holds = false;
    /// Members n <= bound of T with no n + i in T for i in 1..c.
    std::vector<BigNat> violations;
};

SyndeticReport check_syndetic(const Dfa& t, unsigned c, const BigNat& violation_bound = 10000);

/// Least N with {N, ..., N + c} inside U, or nullopt when no such run exists.
std::optional<BigNat> find_consecutive_run(const Dfa& u, unsigned c);

/// (5 k^(16m+3), 3 k^(16m+5)).
std::pair<BigNat, BigNat> theoretical_bounds(unsigned k, unsigned m);

/// Numbers whose base-k expansion has a digit count congruent to -1 mod m,
/// together with k^(md-2) - 1, which needs at least k^(m-2) summands.
std::pair<Dfa, BigNat> hard_family(unsigned k, unsigned m, unsigned d);

}  // namespace autobasis
