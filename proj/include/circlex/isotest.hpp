#pragma once

#include <optional>

#include "circlex/circulant.hpp"
#include "circlex/permgroup.hpp"

namespace circlex {

// Least unit k with k * S1 == S2, or nullopt. Any returned k certifies an
// isomorphism x -> k*x between the two circulants.
std::optional<int> multiplier_equivalent(const Circulant& c1, const Circulant& c2);

// Independent oracle: backtracking search for any arc-preserving bijection,
// pruned by joint color refinement and arc-statistics invariants.
// Requires both orders <= limits.aut_bound.
std::optional<Permutation> brute_force_isomorphic(const DenseDigraph& g1, const DenseDigraph& g2,
                                                  const SearchLimits& limits = {});

struct CiReport {
    bool isomorphic = false;          // whether a multiplier equivalence exists
    std::optional<int> multiplier;    // least certifying unit, when present
    bool ci_guarantee = false;        // both inputs verified connected and arc-transitive,
                                      // making the multiplier test complete
};

// Multiplier-based isomorphism decision. A positive answer is always sound.
// A negative answer decides non-isomorphism exactly when ci_guarantee is set;
// the flag stays false when either input fails, or cannot be verified to
// satisfy, the connected arc-transitive hypothesis within the search budget.
CiReport ci_isomorphic(const Circulant& c1, const Circulant& c2, const SearchLimits& limits = {});

}  // namespace circlex
