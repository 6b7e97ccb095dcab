#include "circlex/census.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "circlex/zmod.hpp"

namespace circlex {

namespace {

CensusEntry make_entry(const Circulant& canonical, const SearchLimits& limits) {
    CensusEntry e;
    e.n = canonical.order();
    e.canonical = canonical;
    e.decomposition = decompose(canonical, limits);
    e.aut_order = aut_order(e.decomposition);
    const auto& s = canonical.connection_set();
    e.undirected = std::all_of(s.begin(), s.end(), [&](int x) {
        return std::binary_search(s.begin(), s.end(), normalize_mod(-x, e.n));
    });
    return e;
}

// all subgroups of the unit group of Z_n, each as a sorted element list
std::vector<std::vector<int>> unit_subgroups(int n) {
    int identity = n == 1 ? 0 : 1;
    auto close = [&](std::set<int> gens) {
        gens.insert(identity);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> members(gens.begin(), gens.end());
            for (int a : members)
                for (int b : members)
                    if (gens.insert(normalize_mod(1LL * a * b, n)).second) grew = true;
        }
        return std::vector<int>(gens.begin(), gens.end());
    };

    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier{close({})};
    found.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<int> group = std::move(frontier.back());
        frontier.pop_back();
        for (int u : units(n)) {
            std::set<int> gens(group.begin(), group.end());
            gens.insert(u);
            std::vector<int> extended = close(std::move(gens));
            if (found.insert(extended).second) frontier.push_back(extended);
        }
    }
    return {found.begin(), found.end()};
}

// connected arc-transitive normal circulants of order n0, other than the
// undirected 4-cycle, generated as subgroup orbits of single units
std::vector<Circulant> normal_cores(int n0, const SearchLimits& limits) {
    if (n0 == 1) return {Circulant(1, {0})};
    std::set<std::vector<int>> orbits;
    for (const std::vector<int>& m : unit_subgroups(n0))
        for (int g : units(n0)) {
            std::vector<int> orbit;
            for (int k : m) orbit.push_back(normalize_mod(1LL * k * g, n0));
            std::sort(orbit.begin(), orbit.end());
            if (orbit.size() == m.size()) orbits.insert(std::move(orbit));
        }

    std::vector<Circulant> cores;
    for (const std::vector<int>& s : orbits) {
        Circulant c(n0, s);
        if (!is_connected(c)) continue;
        if (c == Circulant(4, {1, 3})) continue;
        if (!is_arc_transitive(to_dense(c), limits)) continue;
        if (!is_normal_circulant(c, limits)) continue;
        cores.push_back(std::move(c));
    }
    return cores;
}

void sort_entries(std::vector<CensusEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
        return a.canonical < b.canonical;
    });
}

}  // namespace

std::vector<CensusEntry> census_exhaustive(int n, const SearchLimits& limits, int threads,
                                           int bound) {
    if (n < 1) throw std::invalid_argument("census order must be positive");
    if (n > bound) throw BudgetError("census_exhaustive: order exceeds the exhaustive bound");
    if (n == 1) return {make_entry(Circulant(1, {0}), limits)};

    threads = std::max(1, std::min(threads, n <= 8 ? 1 : 16));
    long long total = 1LL << (n - 1);
    std::vector<std::vector<CensusEntry>> shards(threads);
    std::vector<std::exception_ptr> errors(threads);

    auto work = [&](int t) {
        try {
            for (long long mask = 1; mask < total; ++mask) {
                if (mask % threads != t) continue;
                std::vector<int> s;
                for (int v = 1; v < n; ++v)
                    if (mask & (1LL << (v - 1))) s.push_back(v);
                Circulant c(n, std::move(s));
                if (!is_connected(c)) continue;
                if (canonical_multiplier_form(c).representative != c) continue;
                if (!is_arc_transitive(to_dense(c), limits)) continue;
                shards[t].push_back(make_entry(c, limits));
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (std::thread& th : pool) th.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<CensusEntry> entries;
    for (std::vector<CensusEntry>& shard : shards)
        entries.insert(entries.end(), std::make_move_iterator(shard.begin()),
                       std::make_move_iterator(shard.end()));
    sort_entries(entries);
    return entries;
}

std::vector<CensusEntry> census_constructive(int n, const SearchLimits& limits) {
    if (n < 1) throw std::invalid_argument("census order must be positive");
    if (n > limits.aut_bound)
        throw BudgetError("census_constructive: core screening exceeds the search bound");

    std::set<Circulant> canonical_forms;
    for (int n0 : divisors(n)) {
        std::vector<Circulant> cores = normal_cores(n0, limits);
        if (cores.empty()) continue;
        int rest = n / n0;

        std::vector<int> candidates;
        for (int m : divisors(rest))
            if (m >= 4 && std::gcd(m, n0) == 1) candidates.push_back(m);

        for (int pick = 0; pick < (1 << candidates.size()); ++pick) {
            std::vector<int> factors;
            long long product = 1;
            for (size_t i = 0; i < candidates.size(); ++i)
                if (pick & (1 << i)) {
                    factors.push_back(candidates[i]);
                    product *= candidates[i];
                }
            if (rest % product != 0) continue;
            bool coprime = true;
            for (size_t i = 0; i < factors.size() && coprime; ++i)
                for (size_t j = i + 1; j < factors.size() && coprime; ++j)
                    if (std::gcd(factors[i], factors[j]) != 1) coprime = false;
            if (!coprime) continue;
            int b = static_cast<int>(rest / product);

            for (const Circulant& core : cores) {
                Decomposition d;
                d.gamma0 = core;
                d.factors = factors;
                d.b = b;
                try {
                    canonical_forms.insert(
                        canonical_multiplier_form(reconstruct(d, limits)).representative);
                } catch (const std::invalid_argument&) {
                    // degenerate triple (e.g. inflating a bare loop); skip
                }
            }
        }
    }

    std::vector<CensusEntry> entries;
    for (const Circulant& c : canonical_forms) entries.push_back(make_entry(c, limits));
    sort_entries(entries);
    return entries;
}

}  // namespace circlex
