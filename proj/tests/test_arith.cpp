#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "necklace/arith.hpp"

using namespace necklace;

namespace {

// Independent oracles: straightforward loops, no shared code with the library.

std::uint64_t totient_by_loop(std::uint64_t m) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1) ++count;
    return count;
}

std::vector<std::uint64_t> divisors_by_loop(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= m; ++d)
        if (m % d == 0) out.push_back(d);
    return out;
}

bool prime_by_trial_division(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

std::uint64_t pow_by_repeated_multiplication(std::uint64_t base, std::uint64_t exp,
                                             std::uint64_t q) {
    std::uint64_t r = 1;
    for (std::uint64_t k = 0; k < exp; ++k) r = (r * base) % q;
    return r;
}

}  // namespace

TEST_CASE("gcd fixtures") {
    CHECK(gcd(2, 5) == 1);
    CHECK(gcd(2, 10) == 2);
    CHECK(gcd(7, 7) == 7);
    CHECK(gcd(12, 0) == 12);
    CHECK(gcd(0, 9) == 9);
    CHECK_THROWS_AS(gcd(0, 0), DomainError);
}

TEST_CASE("gcd divides both arguments and is symmetric") {
    for (std::uint64_t a = 0; a <= 40; ++a) {
        for (std::uint64_t b = 0; b <= 40; ++b) {
            if (a == 0 && b == 0) continue;
            std::uint64_t g = gcd(a, b);
            CHECK(g == gcd(b, a));
            if (a) CHECK(a % g == 0);
            if (b) CHECK(b % g == 0);
        }
    }
}

TEST_CASE("totient fixtures and oracle") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == totient_by_loop(12));
    CHECK(totient(12) == 4);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31, 97})
        CHECK(totient(p) == p - 1);
    CHECK_THROWS_AS(totient(0), DomainError);
}

TEST_CASE("totient divisor sum identity") {
    // sum over d | m of phi(d) equals m
    for (std::uint64_t m = 1; m <= 1000; ++m) {
        std::uint64_t sum = 0;
        for (std::uint64_t d : divisors(m)) sum += totient(d);
        CHECK(sum == m);
    }
}

TEST_CASE("divisors fixtures and oracle") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(2) == std::vector<std::uint64_t>{1, 2});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    for (std::uint64_t m : {1, 6, 30, 360, 720, 997})
        CHECK(divisors(m) == divisors_by_loop(m));
    CHECK_THROWS_AS(divisors(0), DomainError);
}

TEST_CASE("FieldElement validation") {
    CHECK_NOTHROW(FieldElement(0, 2));
    CHECK_NOTHROW(FieldElement(10, 11));
    CHECK_THROWS_AS(FieldElement(3, 4), DomainError);   // composite modulus
    CHECK_THROWS_AS(FieldElement(0, 1), DomainError);
    CHECK_THROWS_AS(FieldElement(11, 11), DomainError); // out of range
}

TEST_CASE("mod_pow fixtures") {
    CHECK(mod_pow(FieldElement(3, 11), 5).value() == 1);
    CHECK(mod_pow(FieldElement(3, 11), 3).value() == 5);
    CHECK(mod_pow(FieldElement(7, 13), 0).value() == 1);
    CHECK(mod_pow(FieldElement(0, 5), 0).value() == 1);  // 0^0 = 1
    CHECK(mod_pow(FieldElement(0, 5), 3).value() == 0);
}

TEST_CASE("mod_pow agrees with repeated multiplication") {
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        for (std::uint64_t a = 0; a < q; ++a) {
            for (std::uint64_t e = 0; e <= 200; ++e) {
                CHECK(mod_pow(FieldElement(a, q), e).value() ==
                      pow_by_repeated_multiplication(a, e, q));
            }
        }
    }
}

TEST_CASE("Fermat: a^(q-1) = 1 for every prime q <= 101") {
    for (std::uint64_t q = 2; q <= 101; ++q) {
        if (!prime_by_trial_division(q)) continue;
        for (std::uint64_t a = 1; a < q; ++a)
            CHECK(mod_pow(FieldElement(a, q), q - 1).value() == 1);
    }
}

TEST_CASE("multiplicative_order fixtures") {
    CHECK(multiplicative_order(FieldElement(3, 11)) == 5);
    CHECK(multiplicative_order(FieldElement(1, 7)) == 1);
    CHECK(multiplicative_order(FieldElement(1, 2)) == 1);

    // oracle: repeated multiplication 2, 4, 3, 1 mod 5
    std::uint64_t k = 1, x = 2;
    while (x != 1) {
        x = (x * 2) % 5;
        ++k;
    }
    CHECK(k == 4);
    CHECK(multiplicative_order(FieldElement(2, 5)) == 4);

    CHECK_THROWS_AS(multiplicative_order(FieldElement(0, 5)), DomainError);
}

TEST_CASE("multiplicative_order divides q-1 and is minimal") {
    for (std::uint64_t q = 2; q <= 101; ++q) {
        if (!prime_by_trial_division(q)) continue;
        for (std::uint64_t a = 1; a < q; ++a) {
            std::uint64_t ord = multiplicative_order(FieldElement(a, q));
            CHECK((q - 1) % ord == 0);
            CHECK(mod_pow(FieldElement(a, q), ord).value() == 1);
            for (std::uint64_t k = 1; k < ord; ++k)
                CHECK(mod_pow(FieldElement(a, q), k).value() != 1);
        }
    }
}

TEST_CASE("is_prime fixtures and oracle") {
    CHECK(is_prime(11));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    for (std::uint64_t m = 0; m <= 2000; ++m)
        CHECK(is_prime(m) == prime_by_trial_division(m));
    // large 64-bit cases
    CHECK(is_prime(0xFFFFFFFFFFFFFFC5ull));          // largest prime below 2^64
    CHECK_FALSE(is_prime(0xFFFFFFFFFFFFFFFFull));    // 2^64 - 1 is composite
    CHECK(is_prime(2305843009213693951ull));         // 2^61 - 1, Mersenne
}

TEST_CASE("factorize recombines and reports primes") {
    for (std::uint64_t m : {2ull, 12ull, 97ull, 360360ull, 2ull * 3 * 5 * 7 * 11 * 13,
                            1000003ull, 2305843009213693951ull}) {
        std::uint64_t product = 1;
        for (auto [p, e] : detail::factorize(m)) {
            CHECK(is_prime(p));
            for (std::uint64_t k = 0; k < e; ++k) product *= p;
        }
        CHECK(product == m);
    }
}
