#pragma once

#include <vector>

#include "circlex/circulant.hpp"
#include "circlex/decompose.hpp"
#include "circlex/permgroup.hpp"

namespace circlex {

// One isomorphism class of connected arc-transitive circulants on n vertices.
struct CensusEntry {
    int n = 1;
    Circulant canonical{1, {}};  // multiplier-minimal connection set
    Decomposition decomposition;
    BigInt aut_order;
    bool undirected = false;  // S == -S
};

inline constexpr int kExhaustiveCensusBound = 16;

// Ground-truth census: scan multiplier-orbit representatives of all nonempty
// connection sets, keep the connected arc-transitive ones, and attach their
// factorizations. Entries are sorted by canonical connection set. The mask
// space can be sharded across threads; output is deterministic either way.
// Throws BudgetError when n exceeds bound.
std::vector<CensusEntry> census_exhaustive(int n, const SearchLimits& limits = {},
                                           int threads = 1,
                                           int bound = kExhaustiveCensusBound);

// Census assembled from the factorization the other way around: cores of
// each divisor order are generated as multiplier-subgroup orbits of units,
// screened by actual normality and arc-transitivity, combined with every
// admissible coprime complete-factor set and block size, reconstructed, and
// deduplicated by canonical form. Agrees with census_exhaustive by
// construction of the theory; tests enforce it. Throws BudgetError when the
// core screening does not fit limits.aut_bound.
std::vector<CensusEntry> census_constructive(int n, const SearchLimits& limits = {});

}  // namespace circlex
