#include "circlex/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "circlex/isotest.hpp"
#include "circlex/zmod.hpp"

namespace circlex {

namespace {

bool is_four_cycle(const Circulant& c) {
    return c.order() == 4 && c.connection_set() == std::vector<int>{1, 3};
}

// True iff every connection-set element is a unit and the multiplier
// stabilizer acts regularly (transitively and freely) on the set. These are
// the structural consequences of normality used when the automorphism group
// is out of reach.
bool structural_normality(const Circulant& c) {
    const auto& s = c.connection_set();
    if (s.empty()) return true;
    int n = c.order();
    for (int x : s)
        if (n > 1 && std::gcd(x, n) != 1) return false;
    std::vector<int> stab = multiplier_stabilizer(c);
    if (stab.size() != s.size()) return false;
    std::vector<int> orbit;
    for (int k : stab) orbit.push_back(normalize_mod(1LL * k * s[0], n));
    std::sort(orbit.begin(), orbit.end());
    return orbit == s;
}

// True iff the multiplier stabilizer is transitive on the connection set,
// which makes the circulant arc-transitive (translations reach every tail,
// stabilizer multipliers permute the heads).
bool multiplier_transitive(const Circulant& c) {
    const auto& s = c.connection_set();
    if (s.empty()) return true;
    int n = c.order();
    std::vector<int> orbit;
    for (int k : multiplier_stabilizer(c)) orbit.push_back(normalize_mod(1LL * k * s[0], n));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit == s;
}

int checked_order_product(const Decomposition& d) {
    long long n = d.gamma0.order();
    for (int m : d.factors) n *= m;
    n *= d.b;
    if (n > 1'000'000'000)
        throw std::invalid_argument("decomposition order product overflows the supported range");
    return static_cast<int>(n);
}

Circulant reconstruct_unchecked(const Decomposition& d) {
    std::vector<int> parts;
    parts.push_back(d.gamma0.order());
    parts.insert(parts.end(), d.factors.begin(), d.factors.end());
    int nbar = 1;
    for (int p : parts) nbar *= p;

    CrtSplit split(nbar, parts);
    const auto& s0 = d.gamma0.connection_set();
    std::vector<int> s;
    for (int x = 0; x < nbar; ++x) {
        std::vector<int> coords = split.forward(x);
        if (!std::binary_search(s0.begin(), s0.end(), coords[0])) continue;
        bool all_nonzero = true;
        for (size_t i = 1; i < coords.size(); ++i)
            if (coords[i] == 0) { all_nonzero = false; break; }
        if (!all_nonzero) continue;
        for (int j = 0; j < d.b; ++j) s.push_back(x + j * nbar);
    }
    return Circulant(nbar * d.b, std::move(s));
}

}  // namespace

void validate_decomposition(const Decomposition& d, const SearchLimits& limits) {
    if (d.b < 1) throw std::invalid_argument("block size b must be at least 1");
    if (!std::is_sorted(d.factors.begin(), d.factors.end()))
        throw std::invalid_argument("factors must be listed in ascending order");
    for (int m : d.factors)
        if (m < 4) throw std::invalid_argument("every complete factor must have order at least 4");
    std::vector<int> orders = d.factors;
    orders.push_back(d.gamma0.order());
    for (size_t i = 0; i < orders.size(); ++i)
        for (size_t j = i + 1; j < orders.size(); ++j)
            if (std::gcd(orders[i], orders[j]) != 1)
                throw std::invalid_argument("factor orders and the core order must be pairwise coprime");
    checked_order_product(d);

    if (!is_connected(d.gamma0))
        throw std::invalid_argument("the core circulant must be connected");
    if (is_four_cycle(d.gamma0))
        throw std::invalid_argument("the core circulant must not be the undirected 4-cycle");

    int n0 = d.gamma0.order();
    if (n0 > 1 && n0 <= limits.aut_bound) {
        if (!is_arc_transitive(to_dense(d.gamma0), limits))
            throw std::invalid_argument("the core circulant must be arc-transitive");
    } else if (!multiplier_transitive(d.gamma0)) {
        throw std::invalid_argument(
            "arc-transitivity of the core could not be established via multipliers");
    }

    if (n0 <= limits.aut_bound) {
        if (!is_normal_circulant(d.gamma0, limits))
            throw std::invalid_argument("the core circulant must be normal");
    } else if (!structural_normality(d.gamma0)) {
        throw std::invalid_argument("the core circulant fails the structural normality conditions");
    }

    Circulant recon = reconstruct_unchecked(d);  // throws if inflation creates loops
    if (!is_connected(recon))
        throw std::invalid_argument("the decomposition reconstructs to a disconnected circulant");
}

Circulant reconstruct(const Decomposition& d, const SearchLimits& limits) {
    validate_decomposition(d, limits);
    return reconstruct_unchecked(d);
}

Decomposition decompose(const Circulant& c, const SearchLimits& limits,
                        bool assume_arc_transitive) {
    if (!is_connected(c))
        throw std::invalid_argument("decompose requires a connected circulant");

    bool at_verified = true;
    if (!assume_arc_transitive && !c.connection_set().empty()) {
        try {
            if (!is_arc_transitive(to_dense(c), limits))
                throw std::invalid_argument("decompose requires an arc-transitive circulant");
        } catch (const BudgetError&) {
            at_verified = false;
        }
    }

    ThinQuotient tq = thin_quotient(c);

    Decomposition d;
    d.b = tq.b;
    d.gamma0 = tq.quotient;
    bool extracted = true;
    while (extracted) {
        extracted = false;
        for (int m : unitary_divisors(d.gamma0.order())) {
            if (m < 4) continue;
            if (auto residual = crt_factor_split(d.gamma0, m)) {
                d.factors.push_back(m);
                d.gamma0 = *residual;
                extracted = true;
                break;
            }
        }
    }
    std::sort(d.factors.begin(), d.factors.end());
    d.arc_transitivity_verified = at_verified;
    d.gamma0_normality_verified = d.gamma0.order() <= limits.aut_bound;

    try {
        validate_decomposition(d, limits);
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("computed decomposition fails validation: ") + e.what());
    }
    if (reconstruct_unchecked(d) != c)
        throw std::logic_error("computed decomposition does not reconstruct its input exactly");
    return d;
}

BigInt aut_order(const Decomposition& d) {
    auto factorial = [](int k) {
        BigInt f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    long long nbar = d.gamma0.order();
    for (int m : d.factors) nbar *= m;

    BigInt block = factorial(d.b);
    BigInt result = 1;
    for (long long i = 0; i < nbar; ++i) result *= block;
    result *= BigInt(d.gamma0.order()) * BigInt(multiplier_stabilizer(d.gamma0).size());
    for (int m : d.factors) result *= factorial(m);
    return result;
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerificationReport verify_decomposition(const Circulant& c, const Decomposition& d,
                                        const SearchLimits& limits) {
    VerificationReport report;
    auto add = [&report](const std::string& name, bool pass, std::string detail = "") {
        report.checks.push_back({name, pass, std::move(detail)});
    };
    auto guarded = [&add](const std::string& name, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(name, false, e.what());
        }
    };

    guarded("factors-at-least-4", [&] {
        bool ok = std::is_sorted(d.factors.begin(), d.factors.end()) &&
                  std::all_of(d.factors.begin(), d.factors.end(), [](int m) { return m >= 4; });
        add("factors-at-least-4", ok, ok ? "" : "factors must be ascending and each at least 4");
    });

    guarded("pairwise-coprime", [&] {
        std::vector<int> orders = d.factors;
        orders.push_back(d.gamma0.order());
        bool ok = true;
        for (size_t i = 0; i < orders.size() && ok; ++i)
            for (size_t j = i + 1; j < orders.size() && ok; ++j)
                if (std::gcd(orders[i], orders[j]) != 1) ok = false;
        add("pairwise-coprime", ok, ok ? "" : "a pair of orders shares a common factor");
    });

    guarded("order-product", [&] {
        int product = checked_order_product(d);
        std::ostringstream detail;
        if (product != c.order()) detail << "product " << product << " != order " << c.order();
        add("order-product", product == c.order(), detail.str());
    });

    guarded("gamma0-connected", [&] { add("gamma0-connected", is_connected(d.gamma0)); });

    guarded("gamma0-arc-transitive", [&] {
        int n0 = d.gamma0.order();
        if (n0 == 1) {
            add("gamma0-arc-transitive", true, "one vertex, vacuous");
        } else if (n0 <= limits.aut_bound) {
            add("gamma0-arc-transitive", is_arc_transitive(to_dense(d.gamma0), limits));
        } else {
            bool ok = multiplier_transitive(d.gamma0);
            add("gamma0-arc-transitive", ok,
                ok ? "via multiplier transitivity" : "not establishable via multipliers");
        }
    });

    guarded("gamma0-normal", [&] {
        if (d.gamma0.order() <= limits.aut_bound) {
            add("gamma0-normal", is_normal_circulant(d.gamma0, limits));
        } else {
            add("gamma0-normal", structural_normality(d.gamma0), "structural conditions only");
        }
    });

    guarded("gamma0-not-4cycle",
            [&] { add("gamma0-not-4cycle", !is_four_cycle(d.gamma0)); });

    guarded("reconstruct-isomorphic", [&] {
        Circulant recon = reconstruct_unchecked(d);
        if (recon.order() != c.order()) {
            add("reconstruct-isomorphic", false, "order mismatch");
        } else if (c.order() <= limits.aut_bound) {
            add("reconstruct-isomorphic",
                brute_force_isomorphic(to_dense(c), to_dense(recon), limits).has_value());
        } else {
            add("reconstruct-isomorphic", multiplier_equivalent(c, recon).has_value(),
                "multiplier criterion");
        }
    });

    guarded("aut-order-matches", [&] {
        if (c.order() > limits.aut_bound) {
            add("aut-order-matches", true, "skipped: order exceeds search bound");
            return;
        }
        BigInt actual = automorphism_group(to_dense(c), limits).order();
        BigInt predicted = aut_order(d);
        std::ostringstream detail;
        if (actual != predicted) detail << "group order " << actual << " != formula " << predicted;
        add("aut-order-matches", actual == predicted, detail.str());
    });

    return report;
}

}  // namespace circlex
