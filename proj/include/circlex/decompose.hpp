#pragma once

#include <string>
#include <vector>

#include "circlex/circulant.hpp"
#include "circlex/permgroup.hpp"

namespace circlex {

// The unique factorization of a connected arc-transitive circulant as
// (gamma0 x K_{n1} x ... x K_{nr}) blown up by b independent copies, where
// gamma0 is a connected arc-transitive normal circulant other than the
// undirected 4-cycle, every factor is >= 4, and the factor orders together
// with gamma0's order are pairwise coprime.
struct Decomposition {
    Circulant gamma0{1, {}};
    std::vector<int> factors;  // ascending
    int b = 1;

    // verification provenance; not part of the triple's identity
    bool arc_transitivity_verified = true;
    bool gamma0_normality_verified = true;

    bool operator==(const Decomposition& o) const {
        return gamma0 == o.gamma0 && factors == o.factors && b == o.b;
    }
};

// Throws std::invalid_argument unless d satisfies every structural
// requirement, including that it reconstructs to a connected circulant.
// Normality of gamma0 is brute-forced when its order fits limits.aut_bound
// and reduced to the structural conditions (unit connection set, multiplier
// stabilizer regular on it) beyond that.
void validate_decomposition(const Decomposition& d, const SearchLimits& limits = {});

// Inverse of decompose: CRT-product connection set S0 x (Z_{n1}\{0}) x ...,
// then inflation to b-fold blocks. Validates d first.
Circulant reconstruct(const Decomposition& d, const SearchLimits& limits = {});

// Computes the factorization of a connected arc-transitive circulant:
// quotient by the translation stabilizer in one step, then successive
// extraction of CRT-visible complete factors of unitary order >= 4 in
// ascending order. Arc-transitivity is verified up front within
// limits.aut_bound unless assume_arc_transitive is set by a caller that has
// already established it; when it cannot be checked, the returned flag
// records that. A structurally invalid result throws std::logic_error:
// valid inputs always factor cleanly, so a throw indicates a bug here.
Decomposition decompose(const Circulant& c, const SearchLimits& limits = {},
                        bool assume_arc_transitive = false);

// |Aut| of the reconstruction, from the wreath formula:
// (b!)^(n0*n1*...*nr) * (n0 * #multiplier_stabilizer(gamma0)) * n1! * ... * nr!
BigInt aut_order(const Decomposition& d);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// Non-throwing audit of a claimed decomposition of c: each structural
// requirement, the reconstruction isomorphism (brute force within the search
// bound, multiplier equivalence beyond it), and agreement of the order
// formula with the brute-force automorphism group when computable.
VerificationReport verify_decomposition(const Circulant& c, const Decomposition& d,
                                        const SearchLimits& limits = {});

}  // namespace circlex
