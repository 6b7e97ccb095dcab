#include "circlex/zmod.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace circlex {

static void require_modulus(int n) {
    if (n < 1) throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(n));
}

int normalize_mod(long long x, int n) {
    require_modulus(n);
    long long r = x % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

std::vector<int> units(int n) {
    require_modulus(n);
    std::vector<int> out;
    for (int k = 0; k < n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k);
    return out;
}

std::vector<int> divisors(int n) {
    require_modulus(n);
    std::vector<int> small, large;
    for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<int> unitary_divisors(int n) {
    std::vector<int> out;
    for (int m : divisors(n))
        if (std::gcd(m, n / m) == 1) out.push_back(m);
    return out;
}

std::vector<int> subgroup_of_order(int n, int d) {
    require_modulus(n);
    if (d < 1 || n % d != 0)
        throw std::invalid_argument("subgroup order " + std::to_string(d) +
                                    " does not divide " + std::to_string(n));
    std::vector<int> out(d);
    for (int i = 0; i < d; ++i) out[i] = i * (n / d);
    return out;
}

std::vector<std::pair<int, int>> factorize(int n) {
    require_modulus(n);
    std::vector<std::pair<int, int>> out;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// inverse of a mod m for gcd(a, m) == 1, m >= 1
static int mod_inverse(int a, int m) {
    long long t = 0, new_t = 1, r = m, new_r = normalize_mod(a, m);
    while (new_r != 0) {
        long long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw std::invalid_argument("not invertible");
    return normalize_mod(t, m);
}

CrtSplit::CrtSplit(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
    require_modulus(n);
    long long prod = 1;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("CRT part must be >= 1");
        for (std::size_t j = i + 1; j < parts_.size(); ++j)
            if (std::gcd(parts_[i], parts_[j]) != 1)
                throw std::invalid_argument("CRT parts must be pairwise coprime");
        prod *= parts_[i];
        if (prod > n) throw std::invalid_argument("CRT parts do not multiply to the modulus");
    }
    if (prod != n) throw std::invalid_argument("CRT parts do not multiply to the modulus");
    basis_.resize(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 1) { basis_[i] = 0; continue; }
        int rest = n / parts_[i];
        basis_[i] = normalize_mod(static_cast<long long>(rest) *
                                      mod_inverse(rest % parts_[i], parts_[i]),
                                  n);
    }
}

std::vector<int> CrtSplit::forward(int x) const {
    if (x < 0 || x >= n_) throw std::invalid_argument("residue out of range");
    std::vector<int> coords(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) coords[i] = x % parts_[i];
    return coords;
}

int CrtSplit::inverse(const std::vector<int>& coords) const {
    if (coords.size() != parts_.size())
        throw std::invalid_argument("coordinate count does not match parts");
    long long acc = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= parts_[i])
            throw std::invalid_argument("coordinate out of range");
        acc += static_cast<long long>(coords[i]) * basis_[i];
    }
    return normalize_mod(acc, n_);
}

}  // namespace circlex
