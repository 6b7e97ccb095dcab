#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace circlex {

class DenseDigraph;
class Circulant;

using BigInt = boost::multiprecision::cpp_int;

// Thrown when a computation would exceed a configured search or
// enumeration budget, never silently truncated.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchLimits {
    int aut_bound = 64;                       // max digraph order for backtracking searches
    std::uint64_t group_budget = 10'000'000;  // max group order for element enumeration
};

class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator[](int v) const { return images_[v]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    bool is_full_cycle() const;  // a single cycle through every point
    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;

private:
    Permutation() = default;
    std::vector<int> images_;
};

// Apply f, then g: result[x] == g[f[x]].
Permutation compose(const Permutation& f, const Permutation& g);

bool preserves_arcs(const Permutation& p, const DenseDigraph& g);

// Permutation group with a stabilizer chain; immutable once built, so the
// group order is exact (arbitrary precision) and membership is a sift.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const BigInt& order() const { return order_; }
    bool contains(const Permutation& p) const;

    // Visits every element exactly once, deterministically.
    // Throws BudgetError when order() > budget.
    void for_each_element(std::uint64_t budget,
                          const std::function<void(const Permutation&)>& visit) const;

private:
    struct Level {
        int base = 0;
        std::vector<Permutation> gens;  // generators first stabilized at this level
        std::vector<int> orbit;         // BFS order, orbit[0] == base
        std::vector<int> orbit_pos;     // point -> index in orbit, or -1
        std::vector<Permutation> reps;  // reps[k] maps base to orbit[k]
    };

    PermGroup(int degree, std::vector<Permutation> gens, std::vector<Level> chain);
    void rebuild_orbit(std::size_t i);
    std::pair<Permutation, std::size_t> sift(Permutation p) const;
    bool insert_residue(Permutation p);
    void complete_level(std::size_t i);
    void recompute_order();

    friend PermGroup automorphism_group(const DenseDigraph& g, const SearchLimits& limits);

    int degree_;
    std::vector<Permutation> gens_;
    std::vector<Level> levels_;
    BigInt order_ = 1;
};

// One arc-preserving bijection ga -> gb extending the given assignment of
// vertices 0..prefix_images.size()-1 of ga, or nullopt. Vertices and
// candidate images are explored in ascending order.
std::optional<Permutation> search_isomorphism(const DenseDigraph& ga, const DenseDigraph& gb,
                                              const std::vector<int>& prefix_images = {});

// Automorphism group of g via level-by-level coset search: the returned
// group carries a stabilizer chain relative to the base 0, 1, 2, ... built
// directly from the search, so its order is exact.
// Throws BudgetError when g.order() > limits.aut_bound.
PermGroup automorphism_group(const DenseDigraph& g, const SearchLimits& limits = {});

// Size of the orbit of the first arc under Aut(g). Requires >= 1 arc.
int arc_orbit_size(const DenseDigraph& g, const SearchLimits& limits = {});

// True iff Aut(g) is transitive on arcs. Requires >= 1 arc.
bool is_arc_transitive(const DenseDigraph& g, const SearchLimits& limits = {});

// All subgroups of `group` that are cyclic of order degree() and act
// regularly on the points, one canonical full-cycle generator each, sorted.
// Requires group.order() <= budget (BudgetError otherwise).
std::vector<Permutation> regular_cyclic_subgroups(const PermGroup& group,
                                                  std::uint64_t budget = 10'000'000);

// True iff the full-shift subgroup is the unique regular cyclic subgroup of
// the automorphism group. Falls back to the normalizer-order criterion
// |Aut| == n * #{multipliers fixing S} when the group is too large to
// enumerate; the two routes are cross-asserted whenever both are feasible.
bool is_normal_circulant(const Circulant& c, const SearchLimits& limits = {});

}  // namespace circlex
