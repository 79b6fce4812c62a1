#pragma once

// Closed-form counts of generalized necklaces over a prime field F_q:
//
//   count_classic  N_q(n)  -- plain rotation classes
//   count_cat1     b(n,q)  -- rotation + nonzero scalar multiples
//   count_cat2     d(n,q)  -- constacyclic shift by a fixed lambda
//   count_cat3     e(n,q)  -- constacyclic shift + nonzero scalar multiples
//
// count_cat3 is available under three strategies that produce the identical
// count but different operation ledgers: a naive evaluation that recomputes
// both powers per (t, i) pair, a lambda-power-caching evaluation, and a
// gcd-grouped evaluation that exploits the multiplicity of gcd(n, i).
//
// Ledger accounting conventions (one unit per abstract operation, matching
// the cost model the strategies are compared under):
//   - one "exponentiation" per power evaluation, regardless of the internal
//     square-and-multiply count;
//   - additions and subtractions pool into `additions`; each matching summand
//     contributes two (the -1 and the accumulation);
//   - the final combining step (exact division by the group order, +1) is
//     recorded under divisions/additions only, so the pinned per-loop
//     exponentiation/multiplication totals stay exact;
//   - naive recomputes gcd(n, i) once per (t, i) pair; lambda_cache caches
//     only the lambda powers, so its gcds/divisions still scale with q;
//     gcd_grouped performs exactly L gcds.
// All accumulation is exact unbounded-magnitude integer arithmetic; a
// non-exact final division throws InternalError (it would mean the formula
// implementation is wrong), never rounds.

#include <cstdint>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "necklace/arith.hpp"

namespace necklace {

enum class Strategy { naive, lambda_cache, gcd_grouped, closed_form };
enum class Category { classic, cat1, cat2, cat3 };

std::string_view to_string(Strategy s) noexcept;
std::string_view to_string(Category c) noexcept;
Strategy strategy_from_string(std::string_view name);  // throws DomainError
Category category_from_string(std::string_view name);  // throws DomainError

// Tallies of abstract operations. Fresh ledgers are all-zero; ledgers add
// componentwise.
struct OpLedger {
    std::uint64_t exponentiations = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;  // additions and subtractions pooled
    std::uint64_t gcds = 0;
    std::uint64_t divisions = 0;

    OpLedger& operator+=(const OpLedger& rhs) noexcept {
        exponentiations += rhs.exponentiations;
        multiplications += rhs.multiplications;
        additions += rhs.additions;
        gcds += rhs.gcds;
        divisions += rhs.divisions;
        return *this;
    }
    friend OpLedger operator+(OpLedger lhs, const OpLedger& rhs) noexcept {
        lhs += rhs;
        return lhs;
    }
    friend bool operator==(const OpLedger&, const OpLedger&) = default;
};

// The problem triple (q, n, lambda) with its derived data. Validates on
// construction: q prime, n >= 1, 1 <= lambda < q.
class NecklaceInstance {
public:
    NecklaceInstance(std::uint64_t q, std::uint64_t n, std::uint64_t lambda);

    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t lambda() const noexcept { return lambda_; }
    std::uint64_t ord_lambda() const noexcept { return ord_lambda_; }
    // ord(lambda) * n, the upper summation limit L.
    std::uint64_t summation_limit() const noexcept { return limit_; }

private:
    std::uint64_t q_;
    std::uint64_t n_;
    std::uint64_t lambda_;
    std::uint64_t ord_lambda_;
    std::uint64_t limit_;
};

struct CountOutcome {
    mpz_class count;      // the necklace count, always >= 1
    mpz_class numerator;  // Burnside numerator before the exact division
    Strategy strategy = Strategy::closed_form;
    OpLedger ledger;
    // Summands that passed the summation filter: satisfying (t, i) pairs for
    // category 3, satisfying i for category 2, divisor terms for the
    // unconditional classic/category-1 sums.
    std::uint64_t match_count = 0;
    // Comparisons spent building the distinct-gcd groups (gcd_grouped only);
    // kept outside the ledger so ratio assertions cover only the loop ops.
    std::uint64_t setup_ops = 0;
};

// Scaffolding of the gcd-grouped evaluation. Indices i run over [1, L];
// gcd_of_index[i - 1] = gcd(n, i).
struct GcdGrouping {
    std::vector<std::uint64_t> gcd_of_index;
    std::vector<std::uint64_t> distinct;             // g_j in first-appearance order
    std::vector<std::vector<std::uint64_t>> groups;  // G_j: i with gcd(n, i) == g_j, ascending
    std::vector<std::uint64_t> n_by_gcd;             // n / g_j
    std::uint64_t setup_ops = 0;                     // comparisons while grouping
    OpLedger ledger;                                 // exactly L gcds + d divisions
};

GcdGrouping build_gcd_grouping(const NecklaceInstance& inst);

// lambda^(i / gcd(n, i)) for i in [1, L]; the cached table of the
// lambda_cache and gcd_grouped strategies.
std::vector<std::uint64_t> lambda_exponents(const NecklaceInstance& inst);

// N_q(n) = (1/n) sum_{d|n} phi(n/d) q^d
CountOutcome count_classic(std::uint64_t q, std::uint64_t n);

// b(n,q) = (1/((q-1)n)) sum_{d|n} phi(d) gcd(d, q-1) (q^{n/d} - 1) + 1
CountOutcome count_cat1(std::uint64_t q, std::uint64_t n);

// d(n,q) = (1/(ord(lambda) n)) sum over i in [1, L] with
//          lambda^{i/gcd(n,i)} = 1 of (q^{gcd(n,i)} - 1), + 1
CountOutcome count_cat2(const NecklaceInstance& inst);

// e(n,q) = (1/((q-1) ord(lambda) n)) sum over t in F_q\{0}, i in [1, L] with
//          t^{n/gcd(n,i)} lambda^{i/gcd(n,i)} = 1 of (q^{gcd(n,i)} - 1), + 1
CountOutcome count_cat3(const NecklaceInstance& inst,
                        Strategy strategy = Strategy::gcd_grouped);

// One accumulation snapshot of the gcd-grouped evaluation, taken after
// the (t, G_j) inner loop finishes. group is the zero-based j.
struct GroupTraceEntry {
    std::uint64_t t;
    std::size_t group;
    mpz_class numerator;
};

// gcd_grouped evaluation that also records the accumulation trace; iteration
// order is t ascending, then groups in first-appearance order.
CountOutcome count_cat3_grouped_traced(const NecklaceInstance& inst,
                                       std::vector<GroupTraceEntry>& trace);

}  // namespace necklace
