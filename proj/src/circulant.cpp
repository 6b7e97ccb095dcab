#include "circlex/circulant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "circlex/zmod.hpp"

namespace circlex {

Circulant::Circulant(int n, std::vector<int> s) : n_(n), s_(std::move(s)) {
    if (n < 1) throw std::invalid_argument("circulant order must be >= 1");
    for (int& v : s_) v = normalize_mod(v, n);
    std::sort(s_.begin(), s_.end());
    if (std::adjacent_find(s_.begin(), s_.end()) != s_.end())
        throw std::invalid_argument("connection set has repeated elements");
    if (n > 1 && !s_.empty() && s_.front() == 0)
        throw std::invalid_argument("0 is not allowed in a connection set for n > 1");
}

DenseDigraph to_dense(const Circulant& c) {
    int n = c.order();
    DenseDigraph g(n);
    for (int x = 0; x < n; ++x)
        for (int s : c.connection_set()) g.set_arc(x, normalize_mod(x + s, n));
    return g;
}

bool is_connected(const Circulant& c) {
    int g = c.order();
    for (int s : c.connection_set()) g = std::gcd(g, s);
    return g == 1;
}

bool is_undirected(const Circulant& c) {
    const auto& s = c.connection_set();
    for (int v : s)
        if (!std::binary_search(s.begin(), s.end(), normalize_mod(-v, c.order())))
            return false;
    return true;
}

// S + u == S for the candidate shift u?
static bool shift_fixes(const Circulant& c, const std::vector<char>& member, int u) {
    for (int s : c.connection_set())
        if (!member[normalize_mod(s + u, c.order())]) return false;
    return true;
}

std::vector<int> translation_stabilizer(const Circulant& c) {
    int n = c.order();
    std::vector<char> member(n, 0);
    for (int s : c.connection_set()) member[s] = 1;
    if (c.connection_set().empty()) return subgroup_of_order(n, n);
    // the stabilizer is a subgroup, hence generated by its least divisor element
    for (int d : divisors(n)) {
        if (d == n) break;
        if (shift_fixes(c, member, d)) return subgroup_of_order(n, n / d);
    }
    return {0};
}

ThinQuotient thin_quotient(const Circulant& c) {
    int n = c.order();
    std::vector<int> h = translation_stabilizer(c);
    int b = static_cast<int>(h.size());
    if (h != subgroup_of_order(n, b)) throw std::logic_error("stabilizer is not a subgroup");
    int q = n / b;
    std::vector<int> image;
    for (int s : c.connection_set()) {
        int r = s % q;
        if (!std::binary_search(image.begin(), image.end(), r))
            image.insert(std::upper_bound(image.begin(), image.end(), r), r);
    }
    return {Circulant(q, std::move(image)), b};
}

std::optional<Circulant> crt_factor_split(const Circulant& c, int m) {
    int n = c.order();
    if (m < 2 || n % m != 0 || std::gcd(m, n / m) != 1)
        throw std::invalid_argument(std::to_string(m) + " is not a unitary divisor >= 2 of " +
                                    std::to_string(n));
    int q = n / m;
    // S must be exactly {x : x mod q in S', x mod m != 0} for S' = projections
    std::vector<char> in_s(n, 0);
    for (int s : c.connection_set()) in_s[s] = 1;
    std::vector<char> proj(q, 0);
    for (int s : c.connection_set()) proj[s % q] = 1;
    // a projection hitting 0 with q > 1 would put a loop in the residual
    if (q > 1 && proj[0]) return std::nullopt;
    std::size_t expected = 0;
    CrtSplit split(n, {q, m});
    for (int r = 0; r < q; ++r) {
        if (!proj[r]) continue;
        expected += static_cast<std::size_t>(m) - 1;
        for (int t = 1; t < m; ++t)
            if (!in_s[split.inverse({r, t})]) return std::nullopt;
    }
    if (expected != c.connection_set().size()) return std::nullopt;
    std::vector<int> s_prime;
    for (int r = 0; r < q; ++r)
        if (proj[r]) s_prime.push_back(r);
    return Circulant(q, std::move(s_prime));
}

Circulant multiplier_apply(const Circulant& c, int k) {
    int n = c.order();
    k = normalize_mod(k, n);
    if (std::gcd(k, n) != 1)
        throw std::invalid_argument("multiplier " + std::to_string(k) + " is not a unit mod " +
                                    std::to_string(n));
    std::vector<int> image;
    image.reserve(c.connection_set().size());
    for (int s : c.connection_set()) image.push_back(normalize_mod(1LL * k * s, n));
    return Circulant(n, std::move(image));
}

std::vector<int> multiplier_stabilizer(const Circulant& c) {
    std::vector<int> out;
    for (int k : units(c.order()))
        if (multiplier_apply(c, k).connection_set() == c.connection_set()) out.push_back(k);
    return out;
}

MultiplierClass canonical_multiplier_form(const Circulant& c) {
    std::optional<MultiplierClass> best;
    std::vector<int> stabilizer;
    for (int k : units(c.order())) {
        Circulant image = multiplier_apply(c, k);
        if (image.connection_set() == c.connection_set()) stabilizer.push_back(k);
        if (!best || image.connection_set() < best->representative.connection_set())
            best = MultiplierClass{std::move(image), k, {}};
    }
    best->stabilizer = std::move(stabilizer);
    return *best;
}

}  // namespace circlex
