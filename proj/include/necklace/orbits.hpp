#pragma once

// Brute-force oracle: enumerates all q^n strings over F_q and partitions them
// into equivalence classes under a chosen relation (cyclic or constacyclic
// shift, optionally closed under nonzero scalar multiples). Desk-scale by
// design; refuses instances above a configurable string-count limit.

#include <cstdint>
#include <vector>

#include "necklace/arith.hpp"

namespace necklace {

inline constexpr std::uint64_t default_enumeration_limit = 1'000'000;

// q^n exceeds the enumeration limit.
struct EnumerationLimitError : DomainError {
    using DomainError::DomainError;
};

// Length-n string over F_q viewed as a polynomial: coefficient(k) is the
// coefficient of x^k, so coefficient(0) is the constant term. Ordering is
// lexicographic with a_0 compared first.
class NecklaceString {
public:
    NecklaceString(std::uint64_t q, std::vector<std::uint64_t> coefficients);

    std::uint64_t q() const noexcept { return q_; }
    std::size_t length() const noexcept { return coefficients_.size(); }
    std::uint64_t coefficient(std::size_t k) const { return coefficients_.at(k); }
    const std::vector<std::uint64_t>& coefficients() const noexcept {
        return coefficients_;
    }

    friend bool operator==(const NecklaceString&, const NecklaceString&) = default;
    friend bool operator<(const NecklaceString& a, const NecklaceString& b) {
        return a.coefficients_ < b.coefficients_;
    }

private:
    std::uint64_t q_;
    std::vector<std::uint64_t> coefficients_;
};

enum class ShiftKind { cyclic, constacyclic };

// Which relation generates the equivalence: the shift map, and optionally
// closure under multiplication by every nonzero field constant.
struct RelationSpec {
    ShiftKind shift = ShiftKind::cyclic;
    std::uint64_t lambda = 1;  // shift constant; 1 for plain rotation
    bool scalars = false;

    static RelationSpec classic() { return {ShiftKind::cyclic, 1, false}; }
    static RelationSpec category1() { return {ShiftKind::cyclic, 1, true}; }
    static RelationSpec category2(std::uint64_t lambda) {
        return {ShiftKind::constacyclic, lambda, false};
    }
    static RelationSpec category3(std::uint64_t lambda) {
        return {ShiftKind::constacyclic, lambda, true};
    }
};

// Full partition of the q^n strings. Classes are sorted by representative;
// within a class members are sorted ascending, so the representative (the
// lexicographically smallest member) comes first.
struct OrbitDecomposition {
    std::vector<std::vector<NecklaceString>> classes;

    // Multiset of class sizes, ascending.
    std::vector<std::size_t> sizes() const;
};

// x * s(x) reduced modulo (x^n - lambda): a_0' = lambda * a_{n-1},
// a_k' = a_{k-1} for k >= 1. Applying it n times multiplies every
// coefficient by lambda.
NecklaceString constacyclic_shift(const NecklaceString& s, const FieldElement& lambda);

// Every coefficient multiplied by the nonzero constant c.
NecklaceString scalar_multiply(const NecklaceString& s, const FieldElement& c);

// Union-find closure over the integer-encoded strings.
OrbitDecomposition decompose(std::uint64_t q, std::uint64_t n, const RelationSpec& spec,
                             std::uint64_t limit = default_enumeration_limit);

// Number of classes, without materializing them.
std::uint64_t oracle_count(std::uint64_t q, std::uint64_t n, const RelationSpec& spec,
                           std::uint64_t limit = default_enumeration_limit);

}  // namespace necklace
