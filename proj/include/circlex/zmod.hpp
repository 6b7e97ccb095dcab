#pragma once

#include <utility>
#include <vector>

// Arithmetic in the cyclic group Z_n. A modulus is any integer n >= 1;
// n = 1 denotes the one-element group, whose only residue is 0.

namespace circlex {

// Canonical representative of x in {0, ..., n-1}.
int normalize_mod(long long x, int n);

// Units of Z_n in ascending order. units(1) == {0}.
std::vector<int> units(int n);

// All positive divisors of n, ascending.
std::vector<int> divisors(int n);

// Divisors m of n with gcd(m, n/m) == 1, ascending. Always contains 1 and n.
std::vector<int> unitary_divisors(int n);

// The unique subgroup of Z_n of order d (requires d | n):
// {0, n/d, 2n/d, ...} ascending.
std::vector<int> subgroup_of_order(int n, int d);

// Prime factorization by trial division, (prime, exponent) pairs with
// ascending primes. factorize(1) == {}.
std::vector<std::pair<int, int>> factorize(int n);

// Coordinates of Z_n relative to a list of pairwise-coprime parts whose
// product is n. forward(x)[i] == x mod parts[i]; inverse() reassembles.
class CrtSplit {
public:
    CrtSplit(int n, std::vector<int> parts);

    int modulus() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }

    std::vector<int> forward(int x) const;
    int inverse(const std::vector<int>& coords) const;

private:
    int n_;
    std::vector<int> parts_;
    std::vector<int> basis_;  // basis_[i] == 1 mod parts_[i], == 0 mod parts_[j], j != i
};

}  // namespace circlex
