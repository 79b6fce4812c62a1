// Command-line front end: count generalized necklaces, compare the three
// category-3 evaluation strategies, enumerate equivalence classes via the
// brute-force oracle, and emit CSV/JSON sweep tables.
//
// Exit statuses: 0 success, 2 usage/validation error, 3 internal
// divisibility failure, 4 strategy disagreement.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "necklace/counting.hpp"
#include "necklace/orbits.hpp"

namespace {

using namespace necklace;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;
constexpr int exit_disagreement = 4;

struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

// "7", "2-13", or "2..13" (inclusive).
Range parse_range(const std::string& text) {
    auto parse_u64 = [&](const std::string& part) {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(part, &pos);
        if (pos != part.size()) throw DomainError("bad range value: " + text);
        return v;
    };
    std::size_t sep = text.find("..");
    std::size_t sep_len = 2;
    if (sep == std::string::npos) {
        sep = text.find('-', 1);
        sep_len = 1;
    }
    Range r;
    try {
        if (sep == std::string::npos) {
            r.lo = r.hi = parse_u64(text);
        } else {
            r.lo = parse_u64(text.substr(0, sep));
            r.hi = parse_u64(text.substr(sep + sep_len));
        }
    } catch (const std::logic_error&) {
        throw DomainError("bad range: " + text);
    }
    if (r.lo > r.hi) throw DomainError("empty range: " + text);
    return r;
}

bool within_enumeration_limit(std::uint64_t q, std::uint64_t n, std::uint64_t limit) {
    std::uint64_t total = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        if (total > limit / q) return false;
        total *= q;
    }
    return true;
}

std::uint64_t require_lambda(const std::optional<std::uint64_t>& lambda, Category cat) {
    if (!lambda || *lambda == 0)
        throw DomainError("--lambda is required and must be nonzero for category " +
                          std::string(to_string(cat)));
    return *lambda;
}

RelationSpec relation_for(Category cat, std::uint64_t lambda) {
    switch (cat) {
        case Category::classic: return RelationSpec::classic();
        case Category::cat1: return RelationSpec::category1();
        case Category::cat2: return RelationSpec::category2(lambda);
        case Category::cat3: return RelationSpec::category3(lambda);
    }
    throw DomainError("bad category");
}

std::string poly_to_string(const NecklaceString& s) {
    std::string out;
    for (std::size_t k = s.length(); k-- > 0;) {
        std::uint64_t c = s.coefficient(k);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "x";
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

std::string tuple_to_string(const NecklaceString& s) {
    std::string out;
    for (std::size_t k = 0; k < s.length(); ++k) {
        if (k) out += ",";
        out += std::to_string(s.coefficient(k));
    }
    return out;
}

void print_ledger(std::ostream& os, const CountOutcome& outcome) {
    os << "numerator = " << outcome.numerator << "\n"
       << "match_count = " << outcome.match_count << "\n"
       << "exponentiations = " << outcome.ledger.exponentiations << "\n"
       << "multiplications = " << outcome.ledger.multiplications << "\n"
       << "additions = " << outcome.ledger.additions << "\n"
       << "gcds = " << outcome.ledger.gcds << "\n"
       << "divisions = " << outcome.ledger.divisions << "\n";
    if (outcome.strategy == Strategy::gcd_grouped)
        os << "setup_ops = " << outcome.setup_ops << "\n";
}

// Everything one invocation produced: the instance parameters, one
// CountOutcome per strategy that ran, the oracle count when requested, and
// whether all of those counts agree.
struct RunReport {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::uint64_t lambda = 1;
    std::uint64_t ord_lambda = 1;
    Category category = Category::classic;
    std::vector<CountOutcome> outcomes;
    std::optional<std::uint64_t> oracle;

    bool agreement() const {
        for (const auto& o : outcomes) {
            if (o.count != outcomes.front().count) return false;
            if (o.match_count != outcomes.front().match_count) return false;
        }
        return !oracle || outcomes.empty() ||
               outcomes.front().count == mpz_class(*oracle);
    }
};

struct CountArgs {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::string category;
    std::optional<std::uint64_t> lambda;
    std::string strategy = "gcd_grouped";
    bool verbose = false;
};

int cmd_count(const CountArgs& args) {
    RunReport report;
    report.q = args.q;
    report.n = args.n;
    report.category = category_from_string(args.category);
    switch (report.category) {
        case Category::classic:
            report.outcomes.push_back(count_classic(args.q, args.n));
            break;
        case Category::cat1:
            report.outcomes.push_back(count_cat1(args.q, args.n));
            break;
        case Category::cat2: {
            report.lambda = require_lambda(args.lambda, report.category);
            NecklaceInstance inst(args.q, args.n, report.lambda);
            report.ord_lambda = inst.ord_lambda();
            report.outcomes.push_back(count_cat2(inst));
            break;
        }
        case Category::cat3: {
            report.lambda = require_lambda(args.lambda, report.category);
            NecklaceInstance inst(args.q, args.n, report.lambda);
            report.ord_lambda = inst.ord_lambda();
            report.outcomes.push_back(
                count_cat3(inst, strategy_from_string(args.strategy)));
            break;
        }
    }
    const CountOutcome& outcome = report.outcomes.front();
    if (args.verbose) {
        std::cout << "q = " << report.q << "\n"
                  << "n = " << report.n << "\n"
                  << "lambda = " << report.lambda << "\n"
                  << "ord_lambda = " << report.ord_lambda << "\n"
                  << "category = " << to_string(report.category) << "\n"
                  << "strategy = " << to_string(outcome.strategy) << "\n";
        print_ledger(std::cout, outcome);
    }
    std::cout << "count = " << outcome.count << "\n";
    return exit_ok;
}

struct CompareArgs {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::uint64_t lambda = 0;
    std::uint64_t limit = default_enumeration_limit;
};

int cmd_compare(const CompareArgs& args) {
    NecklaceInstance inst(args.q, args.n, args.lambda);
    RunReport report;
    report.q = args.q;
    report.n = args.n;
    report.lambda = args.lambda;
    report.ord_lambda = inst.ord_lambda();
    report.category = Category::cat3;
    report.outcomes = {
        count_cat3(inst, Strategy::naive),
        count_cat3(inst, Strategy::lambda_cache),
        count_cat3(inst, Strategy::gcd_grouped),
    };
    if (within_enumeration_limit(args.q, args.n, args.limit))
        report.oracle = oracle_count(args.q, args.n,
                                     RelationSpec::category3(args.lambda), args.limit);

    std::cout << "q=" << report.q << " n=" << report.n << " lambda=" << report.lambda
              << " ord_lambda=" << report.ord_lambda
              << " L=" << inst.summation_limit() << "\n";
    std::cout << std::left << std::setw(14) << "strategy" << std::right
              << std::setw(12) << "count" << std::setw(17) << "exponentiations"
              << std::setw(17) << "multiplications" << std::setw(11) << "additions"
              << std::setw(8) << "gcds" << std::setw(11) << "divisions"
              << std::setw(13) << "match_count" << "\n";
    for (const auto& o : report.outcomes) {
        std::cout << std::left << std::setw(14) << to_string(o.strategy)
                  << std::right << std::setw(12) << o.count.get_str()
                  << std::setw(17) << o.ledger.exponentiations
                  << std::setw(17) << o.ledger.multiplications
                  << std::setw(11) << o.ledger.additions
                  << std::setw(8) << o.ledger.gcds
                  << std::setw(11) << o.ledger.divisions
                  << std::setw(13) << o.match_count << "\n";
    }
    if (report.oracle)
        std::cout << std::left << std::setw(14) << "oracle" << std::right
                  << std::setw(12) << *report.oracle << "\n";
    else
        std::cerr << "note: q^n exceeds the enumeration limit " << args.limit
                  << "; oracle skipped\n";
    std::cout << "setup_ops (gcd_grouped) = " << report.outcomes[2].setup_ops << "\n";

    const double naive_exp =
        static_cast<double>(report.outcomes[0].ledger.exponentiations);
    std::cout << std::fixed << std::setprecision(4)
              << "exponentiation ratio lambda_cache/naive = "
              << report.outcomes[1].ledger.exponentiations / naive_exp << "\n"
              << "exponentiation ratio gcd_grouped/naive  = "
              << report.outcomes[2].ledger.exponentiations / naive_exp << "\n";

    bool agree = report.agreement();
    std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
    if (!agree) {
        std::cerr << "error: strategies disagree; this is an implementation bug\n";
        return exit_disagreement;
    }
    return exit_ok;
}

struct EnumerateArgs {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::string category;
    std::optional<std::uint64_t> lambda;
    std::uint64_t limit = default_enumeration_limit;
    std::string format = "pretty";
};

int cmd_enumerate(const EnumerateArgs& args) {
    Category cat = category_from_string(args.category);
    std::uint64_t lambda = 1;
    if (cat == Category::cat2 || cat == Category::cat3)
        lambda = require_lambda(args.lambda, cat);
    OrbitDecomposition dec = decompose(args.q, args.n, relation_for(cat, lambda),
                                       args.limit);
    if (args.format == "machine") {
        for (const auto& cls : dec.classes) {
            for (std::size_t m = 0; m < cls.size(); ++m) {
                if (m) std::cout << " ";
                std::cout << tuple_to_string(cls[m]);
            }
            std::cout << "\n";
        }
    } else if (args.format == "pretty") {
        for (const auto& cls : dec.classes) {
            std::cout << "{";
            for (std::size_t m = 0; m < cls.size(); ++m) {
                if (m) std::cout << ", ";
                std::cout << poly_to_string(cls[m]);
            }
            std::cout << "}\n";
        }
    } else {
        throw DomainError("enumerate --format must be pretty or machine");
    }
    std::cerr << dec.classes.size() << " classes\n";
    return exit_ok;
}

struct TableArgs {
    std::string q_spec;
    std::string n_spec;
    std::string lambda_spec = "";
    std::string category;
    std::string strategy = "gcd_grouped";
    std::string format = "csv";
};

struct TableRow {
    std::uint64_t q, n, lambda, ord_lambda;
    Category category;
    CountOutcome outcome;
};

int cmd_table(const TableArgs& args) {
    Category cat = category_from_string(args.category);
    Range q_range = parse_range(args.q_spec);
    Range n_range = parse_range(args.n_spec);
    if (args.format != "csv" && args.format != "json")
        throw DomainError("table --format must be csv or json");

    bool lambda_all = args.lambda_spec == "all";
    std::optional<std::uint64_t> lambda_fixed;
    if (!lambda_all && !args.lambda_spec.empty())
        lambda_fixed = parse_range(args.lambda_spec).lo;
    bool needs_lambda = cat == Category::cat2 || cat == Category::cat3;
    if (needs_lambda && !lambda_all && !lambda_fixed)
        throw DomainError("--lambda <value|all> is required for category " +
                          std::string(to_string(cat)));

    std::vector<TableRow> rows;
    for (std::uint64_t q = q_range.lo; q <= q_range.hi; ++q) {
        if (!is_prime(q)) {
            std::cerr << "warning: skipping composite q=" << q << "\n";
            continue;
        }
        for (std::uint64_t n = n_range.lo; n <= n_range.hi; ++n) {
            std::vector<std::uint64_t> lambdas;
            if (!needs_lambda) {
                lambdas.push_back(1);
            } else if (lambda_all) {
                for (std::uint64_t l = 1; l < q; ++l) lambdas.push_back(l);
            } else {
                if (*lambda_fixed >= q) {
                    std::cerr << "warning: skipping q=" << q << " (lambda="
                              << *lambda_fixed << " not in [1, q))\n";
                    break;
                }
                lambdas.push_back(*lambda_fixed);
            }
            for (std::uint64_t lambda : lambdas) {
                TableRow row{q, n, lambda, 1, cat, {}};
                switch (cat) {
                    case Category::classic:
                        row.outcome = count_classic(q, n);
                        break;
                    case Category::cat1:
                        row.outcome = count_cat1(q, n);
                        break;
                    case Category::cat2: {
                        NecklaceInstance inst(q, n, lambda);
                        row.ord_lambda = inst.ord_lambda();
                        row.outcome = count_cat2(inst);
                        break;
                    }
                    case Category::cat3: {
                        NecklaceInstance inst(q, n, lambda);
                        row.ord_lambda = inst.ord_lambda();
                        row.outcome = count_cat3(inst, strategy_from_string(args.strategy));
                        break;
                    }
                }
                rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) {
        std::cerr << "error: empty effective range\n";
        return exit_usage;
    }

    if (args.format == "csv") {
        std::cout << "q,n,lambda,ord_lambda,category,strategy,count,"
                     "exponentiations,multiplications,additions,gcds,divisions,"
                     "match_count\n";
        for (const auto& r : rows) {
            std::cout << r.q << "," << r.n << "," << r.lambda << "," << r.ord_lambda
                      << "," << to_string(r.category) << ","
                      << to_string(r.outcome.strategy) << ","
                      << r.outcome.count.get_str() << ","
                      << r.outcome.ledger.exponentiations << ","
                      << r.outcome.ledger.multiplications << ","
                      << r.outcome.ledger.additions << "," << r.outcome.ledger.gcds
                      << "," << r.outcome.ledger.divisions << ","
                      << r.outcome.match_count << "\n";
        }
    } else {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows) {
            // count is a decimal string: it can exceed every fixed-width type.
            out.push_back({{"q", r.q},
                           {"n", r.n},
                           {"lambda", r.lambda},
                           {"ord_lambda", r.ord_lambda},
                           {"category", std::string(to_string(r.category))},
                           {"strategy", std::string(to_string(r.outcome.strategy))},
                           {"count", r.outcome.count.get_str()},
                           {"exponentiations", r.outcome.ledger.exponentiations},
                           {"multiplications", r.outcome.ledger.multiplications},
                           {"additions", r.outcome.ledger.additions},
                           {"gcds", r.outcome.ledger.gcds},
                           {"divisions", r.outcome.ledger.divisions},
                           {"match_count", r.outcome.match_count}});
        }
        std::cout << out.dump(2) << "\n";
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized necklace counting over prime fields"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Count necklaces of one category");
    count_cmd->add_option("--q", count_args.q, "Field size (prime)")->required();
    count_cmd->add_option("--n", count_args.n, "String length")->required();
    count_cmd->add_option("--category", count_args.category, "classic, 1, 2, or 3")
        ->required();
    count_cmd->add_option("--lambda", count_args.lambda,
                          "Shift constant (categories 2 and 3)");
    count_cmd->add_option("--strategy", count_args.strategy,
                          "naive, lambda_cache, or gcd_grouped (category 3)");
    count_cmd->add_flag("--verbose", count_args.verbose,
                        "Also print the operation ledger");

    CompareArgs compare_args;
    auto* compare_cmd =
        app.add_subcommand("compare", "Run all category-3 strategies and the oracle");
    compare_cmd->add_option("--q", compare_args.q, "Field size (prime)")->required();
    compare_cmd->add_option("--n", compare_args.n, "String length")->required();
    compare_cmd->add_option("--lambda", compare_args.lambda, "Shift constant")
        ->required();
    compare_cmd->add_option("--limit", compare_args.limit,
                            "Oracle enumeration cap on q^n");

    EnumerateArgs enum_args;
    auto* enum_cmd =
        app.add_subcommand("enumerate", "List the equivalence classes explicitly");
    enum_cmd->add_option("--q", enum_args.q, "Field size (prime)")->required();
    enum_cmd->add_option("--n", enum_args.n, "String length")->required();
    enum_cmd->add_option("--category", enum_args.category, "classic, 1, 2, or 3")
        ->required();
    enum_cmd->add_option("--lambda", enum_args.lambda,
                         "Shift constant (categories 2 and 3)");
    enum_cmd->add_option("--limit", enum_args.limit, "Enumeration cap on q^n");
    enum_cmd->add_option("--format", enum_args.format, "pretty or machine");

    TableArgs table_args;
    auto* table_cmd = app.add_subcommand("table", "Sweep (q, n, lambda) into a table");
    table_cmd->add_option("--q", table_args.q_spec, "Prime q or range (e.g. 2-13)")
        ->required();
    table_cmd->add_option("--n", table_args.n_spec, "Length n or range")->required();
    table_cmd->add_option("--lambda", table_args.lambda_spec,
                          "Fixed lambda or 'all' (categories 2 and 3)");
    table_cmd->add_option("--category", table_args.category, "classic, 1, 2, or 3")
        ->required();
    table_cmd->add_option("--strategy", table_args.strategy,
                          "Category-3 strategy for the rows");
    table_cmd->add_option("--format", table_args.format, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (app.got_subcommand(count_cmd)) return cmd_count(count_args);
        if (app.got_subcommand(compare_cmd)) return cmd_compare(compare_args);
        if (app.got_subcommand(enum_cmd)) return cmd_enumerate(enum_args);
        if (app.got_subcommand(table_cmd)) return cmd_table(table_args);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
