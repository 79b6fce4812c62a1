#include "necklace/arith.hpp"

#include <algorithm>
#include <numeric>

namespace necklace {

namespace detail {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

// One strong-probable-prime round; m odd, m - 1 = d * 2^r.
bool miller_rabin_round(std::uint64_t m, std::uint64_t a, std::uint64_t d, int r) {
    std::uint64_t x = pow_mod(a % m, d, m);
    if (x == 1 || x == m - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, m);
        if (x == m - 1) return true;
    }
    return false;
}

std::uint64_t pollard_rho(std::uint64_t m) {
    // Brent's cycle variant with batched gcds; m odd composite, not a prime
    // power of 2.
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t x) { return (mul_mod(x, x, m) + c) % m; };
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t saved_x = x, saved_y = y;
        std::uint64_t product = 1;
        int batch = 0;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            if (x == y) break;  // cycle without factor, retry with new c
            std::uint64_t diff = x > y ? x - y : y - x;
            product = mul_mod(product, diff, m);
            if (++batch == 64) {
                d = std::gcd(product, m);
                if (d == m) {
                    // overshot: replay the batch one gcd at a time
                    x = saved_x;
                    y = saved_y;
                    d = 1;
                    while (d == 1) {
                        x = step(x);
                        y = step(step(y));
                        std::uint64_t df = x > y ? x - y : y - x;
                        d = std::gcd(df, m);
                    }
                    break;
                }
                product = 1;
                batch = 0;
                saved_x = x;
                saved_y = y;
            }
        }
        if (d == 1 && batch > 0) d = std::gcd(product, m);
        if (d != 1 && d != m) return d;
    }
}

void factor_into(std::uint64_t m, std::vector<std::uint64_t>& primes) {
    while (m % 2 == 0) {
        primes.push_back(2);
        m /= 2;
    }
    for (std::uint64_t p = 3; p <= 100 && p * p <= m; p += 2) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    if (m == 1) return;
    if (is_prime(m)) {
        primes.push_back(m);
        return;
    }
    std::uint64_t d = pollard_rho(m);
    factor_into(d, primes);
    factor_into(m / d, primes);
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t m) {
    std::vector<std::uint64_t> primes;
    factor_into(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
    for (std::uint64_t p : primes) {
        if (!factors.empty() && factors.back().first == p)
            ++factors.back().second;
        else
            factors.emplace_back(p, 1);
    }
    return factors;
}

}  // namespace detail

bool is_prime(std::uint64_t m) noexcept {
    if (m < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    std::uint64_t d = m - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set decides primality for every m < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!detail::miller_rabin_round(m, a, d, r)) return false;
    }
    return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0)
        throw DomainError("gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

std::uint64_t totient(std::uint64_t m) {
    if (m == 0) throw DomainError("totient(0) is undefined");
    std::uint64_t result = m;
    for (auto [p, e] : detail::factorize(m)) {
        result -= result / p;
    }
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
    if (m == 0) throw DomainError("divisors(0) is undefined");
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : detail::factorize(m)) {
        std::size_t before = out.size();
        std::uint64_t power = 1;
        for (std::uint64_t k = 0; k < e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < before; ++i)
                out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FieldElement::FieldElement(std::uint64_t value, std::uint64_t modulus)
    : value_(value), modulus_(modulus) {
    if (!is_prime(modulus))
        throw DomainError("field modulus must be prime");
    if (value >= modulus)
        throw DomainError("field element out of range [0, q)");
}

FieldElement mod_pow(const FieldElement& base, std::uint64_t exponent) noexcept {
    return FieldElement(detail::pow_mod(base.value(), exponent, base.modulus()),
                        base.modulus(), FieldElement::unchecked_t{});
}

std::uint64_t multiplicative_order(const FieldElement& a) {
    if (a.value() == 0)
        throw DomainError("multiplicative order of 0 is undefined");
    const std::uint64_t q = a.modulus();
    for (std::uint64_t d : divisors(q - 1)) {
        if (detail::pow_mod(a.value(), d, q) == 1) return d;
    }
    throw InternalError("no order found below q-1; modulus not prime?");
}

}  // namespace necklace
