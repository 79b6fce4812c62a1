// Acceptance suite: runs every acceptance criterion end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "necklace/counting.hpp"
#include "necklace/orbits.hpp"
#include "listing_fixtures.hpp"

using namespace necklace;

namespace {

struct Criterion {
    std::string label;
    bool pass = true;
    double seconds = 0.0;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool fits_limit(std::uint64_t q, std::uint64_t n, std::uint64_t limit) {
    std::uint64_t total = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        if (total > limit / q) return false;
        total *= q;
    }
    return true;
}

std::string describe(std::uint64_t q, std::uint64_t n, std::uint64_t lambda) {
    std::ostringstream os;
    os << "(q=" << q << ", n=" << n << ", lambda=" << lambda << ")";
    return os.str();
}

void criterion1(Criterion& c) {
    Stopwatch clock;
    NecklaceInstance worked(11, 2, 3);
    for (Strategy s : {Strategy::naive, Strategy::lambda_cache, Strategy::gcd_grouped}) {
        CountOutcome o = count_cat3(worked, s);
        c.require(o.count == 8, "count_cat3(11,2,3) != 8");
        c.require(o.numerator == 700, "count_cat3(11,2,3) numerator != 700");
    }
    c.require(count_cat2(NecklaceInstance(11, 2, 3)).count == 14,
              "count_cat2(11,2,3) != 14");
    c.require(count_cat2(NecklaceInstance(5, 2, 2)).count == 4,
              "count_cat2(5,2,2) != 4");
    c.require(count_cat1(5, 2).count == 5, "count_cat1(5,2) != 5");
    c.require(count_cat1(11, 2).count == 8, "count_cat1(11,2) != 8");

    c.require(oracle_count(11, 2, RelationSpec::category3(3)) == 8,
              "oracle_count(11,2,cat3 lambda=3) != 8");
    OrbitDecomposition dec = decompose(11, 2, RelationSpec::category3(3));
    c.require(dec.classes.size() == 8, "oracle class count != 8");
    c.require(dec.sizes() == std::vector<std::size_t>{1, 10, 10, 20, 20, 20, 20, 20},
              "oracle size multiset != {20,20,20,20,10,10,20,1}");

    c.seconds = clock.seconds();
    c.require(c.seconds < 1.0, "reference fixtures took >= 1 second");
}

// One pass over the sweep feeds criteria 2 through 6.
void run_sweep(Criterion& c2, Criterion& c3, Criterion& c4, Criterion& c5,
               Criterion& c6) {
    Stopwatch clock;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
        for (std::uint64_t n = 1; n <= 6; ++n) {
            if (!fits_limit(q, n, default_enumeration_limit)) continue;

            CountOutcome classic = count_classic(q, n);
            CountOutcome cat1 = count_cat1(q, n);
            c2.require(classic.count ==
                           mpz_class(oracle_count(q, n, RelationSpec::classic())),
                       "classic != oracle " + describe(q, n, 1));
            c2.require(cat1.count ==
                           mpz_class(oracle_count(q, n, RelationSpec::category1())),
                       "cat1 != oracle " + describe(q, n, 1));

            for (std::uint64_t lambda = 1; lambda < q; ++lambda) {
                const std::string inst_name = describe(q, n, lambda);
                try {
                    NecklaceInstance inst(q, n, lambda);
                    const std::uint64_t L = inst.summation_limit();
                    const std::uint64_t d = build_gcd_grouping(inst).distinct.size();

                    CountOutcome cat2 = count_cat2(inst);
                    CountOutcome naive = count_cat3(inst, Strategy::naive);
                    CountOutcome cache = count_cat3(inst, Strategy::lambda_cache);
                    CountOutcome grouped = count_cat3(inst, Strategy::gcd_grouped);

                    // criterion 2: exact agreement with the brute-force oracle
                    mpz_class oracle2(
                        oracle_count(q, n, RelationSpec::category2(lambda)));
                    mpz_class oracle3(
                        oracle_count(q, n, RelationSpec::category3(lambda)));
                    c2.require(cat2.count == oracle2, "cat2 != oracle " + inst_name);
                    for (const CountOutcome* o : {&naive, &cache, &grouped})
                        c2.require(o->count == oracle3,
                                   std::string(to_string(o->strategy)) +
                                       " != oracle " + inst_name);

                    // criterion 3: ledger closed forms, exact integer equality
                    const std::uint64_t M = naive.match_count;
                    c3.require(cache.match_count == M && grouped.match_count == M,
                               "match_count differs " + inst_name);
                    c3.require(naive.ledger.exponentiations == 2 * (q - 1) * L + M,
                               "naive exponentiations " + inst_name);
                    c3.require(naive.ledger.multiplications == (q - 1) * L,
                               "naive multiplications " + inst_name);
                    c3.require(cache.ledger.exponentiations == L + (q - 1) * L + M,
                               "lambda_cache exponentiations " + inst_name);
                    c3.require(grouped.ledger.exponentiations == L + (q - 1) * d + M,
                               "gcd_grouped exponentiations " + inst_name);

                    // criterion 4: the measured reduction claim
                    if (q >= 11) {
                        c4.require(100 * cache.ledger.exponentiations <=
                                       65 * naive.ledger.exponentiations,
                                   "lambda_cache/naive > 0.65 " + inst_name);
                        c4.require(grouped.ledger.exponentiations <=
                                       cache.ledger.exponentiations,
                                   "gcd_grouped > lambda_cache " + inst_name);
                    }

                    // criterion 5: exact divisibility of every numerator
                    mpz_class denom2 = mpz_class(inst.ord_lambda()) * n;
                    mpz_class denom3 = mpz_class(q - 1) * inst.ord_lambda() * n;
                    c5.require(cat2.numerator % denom2 == 0,
                               "cat2 numerator not divisible " + inst_name);
                    for (const CountOutcome* o : {&naive, &cache, &grouped})
                        c5.require(o->numerator % denom3 == 0,
                                   "cat3 numerator not divisible " + inst_name);

                    // criterion 6: reduction identities at lambda = 1
                    if (lambda == 1) {
                        c6.require(cat2.count == classic.count,
                                   "cat2(lambda=1) != classic " + inst_name);
                        c6.require(naive.count == cat1.count,
                                   "cat3(lambda=1) != cat1 " + inst_name);
                    }
                } catch (const InternalError& e) {
                    c5.require(false, std::string("divisibility abort: ") + e.what());
                }
            }
        }
    }
    c2.seconds = clock.seconds();
    c2.require(c2.seconds < 300.0, "oracle equivalence sweep took >= 5 minutes");
}

void criterion7(Criterion& c) {
    Stopwatch clock;
    for (const auto& listing : {fixtures::q5_rotation_scalar_classes(),
                                fixtures::q5_constacyclic_classes(),
                                fixtures::q11_constacyclic_classes(),
                                fixtures::q11_constacyclic_scalar_classes()}) {
        OrbitDecomposition dec = decompose(listing.q, listing.n, listing.relation);
        std::ostringstream what;
        what << "listing (q=" << listing.q << ", " << listing.classes.size()
             << " classes) not reproduced";
        c.require(fixtures::matches_exactly(dec, listing), what.str());
    }
    auto partial = fixtures::q11_rotation_scalar_classes();
    OrbitDecomposition dec = decompose(partial.q, partial.n, partial.relation);
    c.require(dec.classes.size() == 8, "q=11 rotation+scalar class count != 8");
    c.require(fixtures::consistent_with(dec, partial),
              "q=11 rotation+scalar listed members misplaced");
    c.seconds = clock.seconds();
}

}  // namespace

int main() {
    std::vector<Criterion> criteria(8);
    criteria[1].label = "reference fixtures exact, under 1 second";
    criteria[2].label = "oracle equivalence sweep, exact equality, under 5 minutes";
    criteria[3].label = "ledger exactness on every sweep instance";
    criteria[4].label = "exponentiation reduction (ratio <= 0.65 for q >= 11)";
    criteria[5].label = "Burnside numerators divide exactly on every instance";
    criteria[6].label = "reduction identities at lambda = 1";
    criteria[7].label = "fixture enumeration reproduces the listed classes";

    try {
        criterion1(criteria[1]);
        run_sweep(criteria[2], criteria[3], criteria[4], criteria[5], criteria[6]);
        criterion7(criteria[7]);
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }

    bool all_pass = true;
    for (std::size_t k = 1; k < criteria.size(); ++k) {
        const Criterion& c = criteria[k];
        all_pass = all_pass && c.pass;
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << k << ": "
                  << c.label;
        if (c.seconds > 0.0) {
            std::cout << " (" << std::fixed;
            std::cout.precision(2);
            std::cout << c.seconds << " s)";
        }
        std::cout << "\n";
        for (const auto& f : c.failures) std::cout << "       - " << f << "\n";
    }
    return all_pass ? 0 : 1;
}
