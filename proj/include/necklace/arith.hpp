#pragma once

// Exact number-theoretic primitives over nonnegative 64-bit integers and
// prime fields F_q. Everything here is a pure function; values are freely
// copyable between threads.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace necklace {

// Arguments outside an operation's domain (composite modulus, zero where a
// nonzero element is required, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A theorem-level property failed at runtime. Signals an implementation bug,
// never bad user input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Deterministic primality test, valid over the full 64-bit range
// (Miller-Rabin with a base set proven complete below 2^64).
bool is_prime(std::uint64_t m) noexcept;

// Greatest common divisor; gcd(a, 0) = a. Throws DomainError when both
// arguments are zero.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Euler's totient: count of k in [1, m] coprime to m. Throws on m = 0.
std::uint64_t totient(std::uint64_t m);

// All divisors of m, ascending, no duplicates. Throws on m = 0.
std::vector<std::uint64_t> divisors(std::uint64_t m);

// Residue in [0, q) for a prime modulus q. Construction validates both the
// range and the primality of q.
class FieldElement {
public:
    FieldElement(std::uint64_t value, std::uint64_t modulus);

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    struct unchecked_t {};
    FieldElement(std::uint64_t value, std::uint64_t modulus, unchecked_t) noexcept
        : value_(value), modulus_(modulus) {}

    friend FieldElement mod_pow(const FieldElement&, std::uint64_t) noexcept;

    std::uint64_t value_;
    std::uint64_t modulus_;
};

// base^exponent in F_q by square-and-multiply; 0^0 = 1. In the operation
// ledgers one call counts as ONE exponentiation regardless of the internal
// multiply count.
FieldElement mod_pow(const FieldElement& base, std::uint64_t exponent) noexcept;

// Least k >= 1 with a^k = 1; searches only the divisors of q-1. Throws on
// a = 0.
std::uint64_t multiplicative_order(const FieldElement& a);

namespace detail {

// Raw modular helpers for inner loops that already validated their modulus.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

// Prime factorization (Pollard rho + Miller-Rabin), pairs (prime, exponent)
// sorted by prime.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t m);

}  // namespace detail

}  // namespace necklace
