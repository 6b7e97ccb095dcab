#pragma once

#include <optional>
#include <vector>

#include "circlex/digraph.hpp"

namespace circlex {

// Cayley digraph of Z_n with connection set S: arc x -> y iff (y - x) mod n
// is in S. Elements of S are stored sorted; 0 is forbidden in S except when
// n == 1, where S == {0} denotes the single loop.
class Circulant {
public:
    Circulant(int n, std::vector<int> s);

    int order() const { return n_; }
    const std::vector<int>& connection_set() const { return s_; }

    bool operator==(const Circulant&) const = default;
    auto operator<=>(const Circulant&) const = default;

private:
    int n_;
    std::vector<int> s_;
};

DenseDigraph to_dense(const Circulant& c);

// Weak connectivity; equivalent to gcd(S, n) == 1.
bool is_connected(const Circulant& c);

// True iff S == -S, i.e. every arc is paired with its reverse.
bool is_undirected(const Circulant& c);

// H = {u : S + u == S}, the largest subgroup of Z_n whose cosets S is a
// union of; ascending. Vertices u, v lie in a common thickness class of the
// digraph iff u - v is in H.
std::vector<int> translation_stabilizer(const Circulant& c);

struct ThinQuotient {
    Circulant quotient;  // R-thin circulant on n / b vertices
    int b;               // thickness class size, the |H| above
};

// One-step quotient by the translation stabilizer: c is the blow-up of the
// returned quotient with block size b under x -> (x mod n/b, x div n/b).
ThinQuotient thin_quotient(const Circulant& c);

// If S factors as S' x (Z_m \ {0}) in the coordinates of CrtSplit(n, {n/m, m})
// with S' a valid connection set, returns Cay(Z_{n/m}, S'); otherwise nullopt
// (including when the projection would put 0 in S' for n/m > 1). Requires
// m >= 2 and m a unitary divisor of n. For m == n the residual is the
// one-vertex circulant, a loop when S covers all of Z_n \ {0}.
std::optional<Circulant> crt_factor_split(const Circulant& c, int m);

// Image of c under the unit multiplier k: connection set k * S.
Circulant multiplier_apply(const Circulant& c, int k);

// Units k with k * S == S, ascending. Always contains 1 (0 when n == 1).
std::vector<int> multiplier_stabilizer(const Circulant& c);

struct MultiplierClass {
    Circulant representative;    // least connection set over all unit multiples
    int multiplier;              // least unit k achieving it
    std::vector<int> stabilizer; // units fixing the connection set
};

MultiplierClass canonical_multiplier_form(const Circulant& c);

}  // namespace circlex
