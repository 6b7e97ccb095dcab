#include "circlex/isotest.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "circlex/digraph.hpp"
#include "circlex/zmod.hpp"

namespace circlex {

std::optional<int> multiplier_equivalent(const Circulant& c1, const Circulant& c2) {
    if (c1.order() != c2.order())
        throw std::invalid_argument("orders differ: " + std::to_string(c1.order()) + " vs " +
                                    std::to_string(c2.order()));
    if (c1.connection_set().size() != c2.connection_set().size()) return std::nullopt;
    for (int k : units(c1.order()))
        if (multiplier_apply(c1, k).connection_set() == c2.connection_set()) return k;
    return std::nullopt;
}

namespace {

// multiset of per-arc invariants: common-neighbor counts in all four
// direction combinations plus the presence of the reverse arc
std::vector<std::array<int, 5>> arc_statistics(const DenseDigraph& g) {
    int n = g.order(), words = g.words_per_row();
    auto common = [&](const std::uint64_t* a, const std::uint64_t* b) {
        int count = 0;
        for (int w = 0; w < words; ++w) count += std::popcount(a[w] & b[w]);
        return count;
    };
    std::vector<std::array<int, 5>> stats;
    stats.reserve(g.arc_count());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!g.arc(u, v)) continue;
            stats.push_back({common(g.out_row(u), g.out_row(v)),
                             common(g.in_row(u), g.in_row(v)),
                             common(g.out_row(u), g.in_row(v)),
                             common(g.in_row(u), g.out_row(v)), g.arc(v, u) ? 1 : 0});
        }
    std::sort(stats.begin(), stats.end());
    return stats;
}

}  // namespace

std::optional<Permutation> brute_force_isomorphic(const DenseDigraph& g1, const DenseDigraph& g2,
                                                  const SearchLimits& limits) {
    if (g1.order() > limits.aut_bound || g2.order() > limits.aut_bound)
        throw BudgetError("digraph order exceeds isomorphism search bound " +
                          std::to_string(limits.aut_bound));
    if (g1.order() != g2.order() || g1.arc_count() != g2.arc_count()) return std::nullopt;
    if (arc_statistics(g1) != arc_statistics(g2)) return std::nullopt;
    return search_isomorphism(g1, g2);
}

CiReport ci_isomorphic(const Circulant& c1, const Circulant& c2, const SearchLimits& limits) {
    CiReport report;
    report.multiplier = multiplier_equivalent(c1, c2);
    report.isomorphic = report.multiplier.has_value();
    report.ci_guarantee = false;
    if (is_connected(c1) && is_connected(c2)) {
        try {
            report.ci_guarantee =
                is_arc_transitive(to_dense(c1), limits) && is_arc_transitive(to_dense(c2), limits);
        } catch (const BudgetError&) {
            report.ci_guarantee = false;
        } catch (const std::invalid_argument&) {
            report.ci_guarantee = false;  // an empty connection set has no arcs
        }
    }
    return report;
}

}  // namespace circlex
