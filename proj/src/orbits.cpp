#include "necklace/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace necklace {

NecklaceString::NecklaceString(std::uint64_t q, std::vector<std::uint64_t> coefficients)
    : q_(q), coefficients_(std::move(coefficients)) {
    if (!is_prime(q_)) throw DomainError("string alphabet size q must be prime");
    if (coefficients_.empty()) throw DomainError("string length must be >= 1");
    for (std::uint64_t c : coefficients_)
        if (c >= q_) throw DomainError("coefficient out of range [0, q)");
}

NecklaceString constacyclic_shift(const NecklaceString& s, const FieldElement& lambda) {
    if (lambda.modulus() != s.q())
        throw DomainError("shift constant lives in a different field");
    if (lambda.value() == 0)
        throw DomainError("shift constant lambda must be nonzero");
    const std::size_t n = s.length();
    std::vector<std::uint64_t> out(n);
    out[0] = detail::mul_mod(lambda.value(), s.coefficient(n - 1), s.q());
    for (std::size_t k = 1; k < n; ++k) out[k] = s.coefficient(k - 1);
    return NecklaceString(s.q(), std::move(out));
}

NecklaceString scalar_multiply(const NecklaceString& s, const FieldElement& c) {
    if (c.modulus() != s.q())
        throw DomainError("scalar lives in a different field");
    if (c.value() == 0)
        throw DomainError("scalar must be nonzero");
    std::vector<std::uint64_t> out(s.length());
    for (std::size_t k = 0; k < s.length(); ++k)
        out[k] = detail::mul_mod(c.value(), s.coefficient(k), s.q());
    return NecklaceString(s.q(), std::move(out));
}

std::vector<std::size_t> OrbitDecomposition::sizes() const {
    std::vector<std::size_t> out;
    out.reserve(classes.size());
    for (const auto& cls : classes) out.push_back(cls.size());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Strings are encoded with a_0 as the most significant base-q digit, so the
// numeric order of codes equals the lexicographic (a_0-first) string order.
struct Enumeration {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::uint64_t total = 0;     // q^n
    std::uint64_t head_pow = 0;  // q^(n-1)

    std::vector<std::uint64_t> decode(std::uint64_t code) const {
        std::vector<std::uint64_t> coeffs(n);
        for (std::size_t k = n; k-- > 0;) {
            coeffs[k] = code % q;
            code /= q;
        }
        return coeffs;
    }
};

Enumeration plan_enumeration(std::uint64_t q, std::uint64_t n, std::uint64_t limit) {
    if (!is_prime(q)) throw DomainError("q must be prime");
    if (n == 0) throw DomainError("n must be >= 1");
    Enumeration e{q, n, 1, 1};
    for (std::uint64_t k = 0; k < n; ++k) {
        if (e.total > limit / q)
            throw EnumerationLimitError(
                "q^n exceeds the enumeration limit " + std::to_string(limit) +
                " (q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")");
        e.head_pow = e.total;
        e.total *= q;
    }
    return e;
}

std::uint64_t validated_lambda(const RelationSpec& spec, std::uint64_t q) {
    if (spec.shift == ShiftKind::cyclic) return 1;
    if (spec.lambda == 0 || spec.lambda >= q)
        throw DomainError("lambda must be in [1, q)");
    return spec.lambda;
}

// Smallest generator of the cyclic group F_q*, q >= 3.
std::uint64_t primitive_root(std::uint64_t q) {
    auto factors = detail::factorize(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
        bool generates = true;
        for (auto [p, e] : factors) {
            if (detail::pow_mod(g, (q - 1) / p, q) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    throw InternalError("no primitive root mod " + std::to_string(q));
}

struct UnionFind {
    std::vector<std::uint64_t> parent;

    explicit UnionFind(std::uint64_t count) : parent(count) {
        std::iota(parent.begin(), parent.end(), std::uint64_t{0});
    }

    std::uint64_t find(std::uint64_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];  // path halving
            x = parent[x];
        }
        return x;
    }

    void unite(std::uint64_t a, std::uint64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

// Applies the relation's generators once per string: the shift, and (when
// scalars are on) multiplication by one primitive root, whose powers reach
// every nonzero constant.
UnionFind build_partition(const Enumeration& e, const RelationSpec& spec,
                          std::uint64_t lambda) {
    UnionFind uf(e.total);
    const std::uint64_t q = e.q;
    const bool use_scalars = spec.scalars && q > 2;
    const std::uint64_t root = use_scalars ? primitive_root(q) : 1;

    std::vector<std::uint64_t> digits(e.n);
    for (std::uint64_t code = 0; code < e.total; ++code) {
        std::uint64_t tail = code % q;
        std::uint64_t shifted =
            detail::mul_mod(lambda, tail, q) * e.head_pow + code / q;
        uf.unite(code, shifted);

        if (use_scalars) {
            std::uint64_t c = code;
            std::uint64_t scaled = 0;
            for (std::size_t k = 0; k < e.n; ++k) {
                digits[k] = c % q;
                c /= q;
            }
            for (std::size_t k = e.n; k-- > 0;)
                scaled = scaled * q + detail::mul_mod(root, digits[k], q);
            uf.unite(code, scaled);
        }
    }
    return uf;
}

}  // namespace

OrbitDecomposition decompose(std::uint64_t q, std::uint64_t n, const RelationSpec& spec,
                             std::uint64_t limit) {
    Enumeration e = plan_enumeration(q, n, limit);
    std::uint64_t lambda = validated_lambda(spec, q);
    UnionFind uf = build_partition(e, spec, lambda);

    // Scanning codes in ascending (= lexicographic) order makes each class's
    // first member its representative and orders classes by representative.
    std::vector<std::uint64_t> class_of(e.total, std::uint64_t(-1));
    OrbitDecomposition out;
    for (std::uint64_t code = 0; code < e.total; ++code) {
        std::uint64_t r = uf.find(code);
        if (class_of[r] == std::uint64_t(-1)) {
            class_of[r] = out.classes.size();
            out.classes.emplace_back();
        }
        out.classes[class_of[r]].push_back(NecklaceString(q, e.decode(code)));
    }
    return out;
}

std::uint64_t oracle_count(std::uint64_t q, std::uint64_t n, const RelationSpec& spec,
                           std::uint64_t limit) {
    Enumeration e = plan_enumeration(q, n, limit);
    std::uint64_t lambda = validated_lambda(spec, q);
    UnionFind uf = build_partition(e, spec, lambda);
    std::uint64_t classes = 0;
    for (std::uint64_t code = 0; code < e.total; ++code)
        if (uf.find(code) == code) ++classes;
    return classes;
}

}  // namespace necklace
