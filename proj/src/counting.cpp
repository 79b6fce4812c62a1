#include "necklace/counting.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace necklace {

namespace {

mpz_class pow_ui(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// Exact division by the group-order denominator plus the optional trailing
// +1. A nonzero remainder is a formula-implementation bug.
mpz_class combine(const mpz_class& numerator, const mpz_class& denominator,
                  bool plus_one, OpLedger& ledger) {
    mpz_class quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
                numerator.get_mpz_t(), denominator.get_mpz_t());
    ledger.divisions += 1;
    if (remainder != 0)
        throw InternalError("Burnside numerator " + numerator.get_str() +
                            " is not divisible by " + denominator.get_str());
    if (plus_one) {
        quotient += 1;
        ledger.additions += 1;
    }
    return quotient;
}

void validate_counting_args(std::uint64_t q, std::uint64_t n) {
    if (!is_prime(q)) throw DomainError("q must be prime");
    if (n == 0) throw DomainError("n must be >= 1");
}

}  // namespace

std::string_view to_string(Strategy s) noexcept {
    switch (s) {
        case Strategy::naive: return "naive";
        case Strategy::lambda_cache: return "lambda_cache";
        case Strategy::gcd_grouped: return "gcd_grouped";
        case Strategy::closed_form: return "closed_form";
    }
    return "?";
}

std::string_view to_string(Category c) noexcept {
    switch (c) {
        case Category::classic: return "classic";
        case Category::cat1: return "1";
        case Category::cat2: return "2";
        case Category::cat3: return "3";
    }
    return "?";
}

Strategy strategy_from_string(std::string_view name) {
    if (name == "naive") return Strategy::naive;
    if (name == "lambda_cache") return Strategy::lambda_cache;
    if (name == "gcd_grouped") return Strategy::gcd_grouped;
    if (name == "closed_form") return Strategy::closed_form;
    throw DomainError("unknown strategy: " + std::string(name));
}

Category category_from_string(std::string_view name) {
    if (name == "classic") return Category::classic;
    if (name == "1") return Category::cat1;
    if (name == "2") return Category::cat2;
    if (name == "3") return Category::cat3;
    throw DomainError("unknown category: " + std::string(name));
}

NecklaceInstance::NecklaceInstance(std::uint64_t q, std::uint64_t n,
                                   std::uint64_t lambda)
    : q_(q), n_(n), lambda_(lambda) {
    validate_counting_args(q, n);
    if (lambda == 0 || lambda >= q)
        throw DomainError("lambda must be in [1, q)");
    ord_lambda_ = multiplicative_order(FieldElement(lambda, q));
    if (n > std::numeric_limits<std::uint64_t>::max() / ord_lambda_)
        throw DomainError("ord(lambda) * n overflows 64 bits");
    limit_ = ord_lambda_ * n;
}

std::vector<std::uint64_t> lambda_exponents(const NecklaceInstance& inst) {
    const std::uint64_t n = inst.n(), q = inst.q(), lambda = inst.lambda();
    std::vector<std::uint64_t> table;
    table.reserve(inst.summation_limit());
    for (std::uint64_t i = 1; i <= inst.summation_limit(); ++i) {
        std::uint64_t g = std::gcd(n, i);
        table.push_back(detail::pow_mod(lambda, i / g, q));
    }
    return table;
}

CountOutcome count_classic(std::uint64_t q, std::uint64_t n) {
    validate_counting_args(q, n);
    CountOutcome out;
    out.strategy = Strategy::closed_form;
    mpz_class numerator = 0;
    for (std::uint64_t d : divisors(n)) {
        std::uint64_t cofactor = n / d;
        out.ledger.divisions += 1;
        mpz_class term = pow_ui(q, d);
        out.ledger.exponentiations += 1;
        term *= totient(cofactor);
        out.ledger.multiplications += 1;
        numerator += term;
        out.ledger.additions += 1;
        out.match_count += 1;
    }
    out.numerator = numerator;
    out.count = combine(numerator, mpz_class(n), false, out.ledger);
    return out;
}

CountOutcome count_cat1(std::uint64_t q, std::uint64_t n) {
    validate_counting_args(q, n);
    CountOutcome out;
    out.strategy = Strategy::closed_form;
    mpz_class numerator = 0;
    for (std::uint64_t d : divisors(n)) {
        std::uint64_t g = std::gcd(d, q - 1);
        out.ledger.gcds += 1;
        std::uint64_t cofactor = n / d;
        out.ledger.divisions += 1;
        mpz_class term = pow_ui(q, cofactor);
        out.ledger.exponentiations += 1;
        term -= 1;
        out.ledger.additions += 1;
        term *= totient(d);
        out.ledger.multiplications += 1;
        term *= g;
        out.ledger.multiplications += 1;
        numerator += term;
        out.ledger.additions += 1;
        out.match_count += 1;
    }
    out.numerator = numerator;
    mpz_class denominator = mpz_class(q - 1) * n;
    out.count = combine(numerator, denominator, true, out.ledger);
    return out;
}

CountOutcome count_cat2(const NecklaceInstance& inst) {
    const std::uint64_t q = inst.q(), n = inst.n(), lambda = inst.lambda();
    const std::uint64_t L = inst.summation_limit();
    CountOutcome out;
    out.strategy = Strategy::closed_form;
    mpz_class numerator = 0;
    for (std::uint64_t i = 1; i <= L; ++i) {
        std::uint64_t g = std::gcd(n, i);
        out.ledger.gcds += 1;
        std::uint64_t exponent = i / g;
        out.ledger.divisions += 1;
        std::uint64_t lam_pow = detail::pow_mod(lambda, exponent, q);
        out.ledger.exponentiations += 1;
        if (lam_pow == 1) {
            mpz_class term = pow_ui(q, g);
            out.ledger.exponentiations += 1;
            term -= 1;
            numerator += term;
            out.ledger.additions += 2;
            out.match_count += 1;
        }
    }
    out.numerator = numerator;
    mpz_class denominator = mpz_class(inst.ord_lambda()) * n;
    out.count = combine(numerator, denominator, true, out.ledger);
    return out;
}

GcdGrouping build_gcd_grouping(const NecklaceInstance& inst) {
    const std::uint64_t n = inst.n(), L = inst.summation_limit();
    GcdGrouping gg;
    gg.gcd_of_index.reserve(L);
    for (std::uint64_t i = 1; i <= L; ++i) {
        std::uint64_t g = std::gcd(n, i);
        gg.ledger.gcds += 1;
        gg.gcd_of_index.push_back(g);
        bool found = false;
        for (std::size_t j = 0; j < gg.distinct.size(); ++j) {
            gg.setup_ops += 1;
            if (gg.distinct[j] == g) {
                gg.groups[j].push_back(i);
                found = true;
                break;
            }
        }
        if (!found) {
            gg.distinct.push_back(g);
            gg.groups.push_back({i});
        }
    }
    gg.n_by_gcd.reserve(gg.distinct.size());
    for (std::uint64_t g : gg.distinct) {
        gg.n_by_gcd.push_back(n / g);
        gg.ledger.divisions += 1;
    }
    return gg;
}

namespace {

CountOutcome cat3_naive(const NecklaceInstance& inst) {
    const std::uint64_t q = inst.q(), n = inst.n(), lambda = inst.lambda();
    const std::uint64_t L = inst.summation_limit();
    CountOutcome out;
    out.strategy = Strategy::naive;
    mpz_class numerator = 0;
    for (std::uint64_t t = 1; t < q; ++t) {
        for (std::uint64_t i = 1; i <= L; ++i) {
            std::uint64_t g = std::gcd(n, i);
            out.ledger.gcds += 1;
            std::uint64_t t_exponent = n / g;
            std::uint64_t lam_exponent = i / g;
            out.ledger.divisions += 2;
            std::uint64_t t_pow = detail::pow_mod(t, t_exponent, q);
            std::uint64_t lam_pow = detail::pow_mod(lambda, lam_exponent, q);
            out.ledger.exponentiations += 2;
            std::uint64_t prod = detail::mul_mod(t_pow, lam_pow, q);
            out.ledger.multiplications += 1;
            if (prod == 1) {
                mpz_class term = pow_ui(q, g);
                out.ledger.exponentiations += 1;
                term -= 1;
                numerator += term;
                out.ledger.additions += 2;
                out.match_count += 1;
            }
        }
    }
    out.numerator = numerator;
    mpz_class denominator = mpz_class(q - 1) * inst.ord_lambda() * n;
    out.count = combine(numerator, denominator, true, out.ledger);
    return out;
}

CountOutcome cat3_lambda_cache(const NecklaceInstance& inst) {
    const std::uint64_t q = inst.q(), n = inst.n(), lambda = inst.lambda();
    const std::uint64_t L = inst.summation_limit();
    CountOutcome out;
    out.strategy = Strategy::lambda_cache;

    // cache lambda^{i/gcd(n,i)} once per i
    std::vector<std::uint64_t> lam_pow;
    lam_pow.reserve(L);
    for (std::uint64_t i = 1; i <= L; ++i) {
        std::uint64_t g = std::gcd(n, i);
        out.ledger.gcds += 1;
        std::uint64_t exponent = i / g;
        out.ledger.divisions += 1;
        lam_pow.push_back(detail::pow_mod(lambda, exponent, q));
        out.ledger.exponentiations += 1;
    }

    // t^{n/gcd(n,i)} is still computed afresh per (t, i) pair
    mpz_class numerator = 0;
    for (std::uint64_t t = 1; t < q; ++t) {
        for (std::uint64_t i = 1; i <= L; ++i) {
            std::uint64_t g = std::gcd(n, i);
            out.ledger.gcds += 1;
            std::uint64_t t_exponent = n / g;
            out.ledger.divisions += 1;
            std::uint64_t t_pow = detail::pow_mod(t, t_exponent, q);
            out.ledger.exponentiations += 1;
            std::uint64_t prod = detail::mul_mod(t_pow, lam_pow[i - 1], q);
            out.ledger.multiplications += 1;
            if (prod == 1) {
                mpz_class term = pow_ui(q, g);
                out.ledger.exponentiations += 1;
                term -= 1;
                numerator += term;
                out.ledger.additions += 2;
                out.match_count += 1;
            }
        }
    }
    out.numerator = numerator;
    mpz_class denominator = mpz_class(q - 1) * inst.ord_lambda() * n;
    out.count = combine(numerator, denominator, true, out.ledger);
    return out;
}

CountOutcome cat3_gcd_grouped(const NecklaceInstance& inst,
                              std::vector<GroupTraceEntry>* trace) {
    const std::uint64_t q = inst.q(), lambda = inst.lambda();
    const std::uint64_t L = inst.summation_limit();
    CountOutcome out;
    out.strategy = Strategy::gcd_grouped;

    // gcd array, distinct gcds, index groups, n/g_j
    GcdGrouping grouping = build_gcd_grouping(inst);
    out.ledger += grouping.ledger;
    out.setup_ops = grouping.setup_ops;
    const std::size_t d = grouping.distinct.size();

    // lambda powers from the stored gcd array
    std::vector<std::uint64_t> lam_pow;
    lam_pow.reserve(L);
    for (std::uint64_t i = 1; i <= L; ++i) {
        std::uint64_t exponent = i / grouping.gcd_of_index[i - 1];
        out.ledger.divisions += 1;
        lam_pow.push_back(detail::pow_mod(lambda, exponent, q));
        out.ledger.exponentiations += 1;
    }

    // one t^{n/g_j} per (t, group) instead of per (t, i)
    mpz_class numerator = 0;
    for (std::uint64_t t = 1; t < q; ++t) {
        for (std::size_t j = 0; j < d; ++j) {
            std::uint64_t t_pow = detail::pow_mod(t, grouping.n_by_gcd[j], q);
            out.ledger.exponentiations += 1;
            for (std::uint64_t k : grouping.groups[j]) {
                std::uint64_t prod = detail::mul_mod(t_pow, lam_pow[k - 1], q);
                out.ledger.multiplications += 1;
                if (prod == 1) {
                    mpz_class term = pow_ui(q, grouping.distinct[j]);
                    out.ledger.exponentiations += 1;
                    term -= 1;
                    numerator += term;
                    out.ledger.additions += 2;
                    out.match_count += 1;
                }
            }
            if (trace) trace->push_back({t, j, numerator});
        }
    }
    out.numerator = numerator;
    mpz_class denominator = mpz_class(q - 1) * inst.ord_lambda() * inst.n();
    out.count = combine(numerator, denominator, true, out.ledger);
    return out;
}

}  // namespace

CountOutcome count_cat3(const NecklaceInstance& inst, Strategy strategy) {
    switch (strategy) {
        case Strategy::naive: return cat3_naive(inst);
        case Strategy::lambda_cache: return cat3_lambda_cache(inst);
        case Strategy::gcd_grouped: return cat3_gcd_grouped(inst, nullptr);
        case Strategy::closed_form: break;
    }
    throw DomainError("count_cat3 strategy must be naive, lambda_cache, or gcd_grouped");
}

CountOutcome count_cat3_grouped_traced(const NecklaceInstance& inst,
                                       std::vector<GroupTraceEntry>& trace) {
    trace.clear();
    return cat3_gcd_grouped(inst, &trace);
}

}  // namespace necklace
