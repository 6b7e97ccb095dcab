#pragma once

#include <vector>

#include "circlex/decompose.hpp"
#include "circlex/permgroup.hpp"

namespace circlex {

// Runs the full structure verification suite against independent brute
// force, in a fixed order with stable check names:
//   1 decomposition-roundtrip-uniqueness   (orders <= min(max_n, 20))
//   2 aut-order-formula                    (orders <= min(max_n, 14) + spot values)
//   3 ci-multiplier-completeness           (orders <= min(max_n, 16))
//   4 normality-route-agreement            (orders <= min(max_n, 14))
//   5 normal-multiplier-regularity         (orders <= min(max_n, 16))
//   6 thick-normal-is-4cycle               (orders <= min(max_n, 20))
//   7 product-interchange-and-nesting      (fixed 200 random instances each)
//   8 census-cross-validation              (orders <= min(max_n, 16))
// A check never throws; unexpected errors become failing entries.
std::vector<CheckResult> run_structure_checks(int max_n, const SearchLimits& limits = {},
                                              int threads = 1);

}  // namespace circlex
