#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "circlex/circulant.hpp"
#include "circlex/digraph.hpp"
#include "circlex/permgroup.hpp"

using namespace circlex;

static DenseDigraph random_digraph(int n, double density, std::mt19937& rng) {
    DenseDigraph g(n);
    std::bernoulli_distribution arc(density);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (arc(rng)) g.set_arc(u, v);
    return g;
}

// all automorphisms of g by trying every one of the n! permutations
static std::vector<Permutation> all_automorphisms_oracle(const DenseDigraph& g) {
    std::vector<int> images(g.order());
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        Permutation p{images};
        if (preserves_arcs(p, g)) out.push_back(p);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

static bool arc_transitive_oracle(const DenseDigraph& g) {
    auto auts = all_automorphisms_oracle(g);
    int n = g.order();
    int first = -1;
    for (int u = 0; u < n && first == -1; ++u)
        for (int v = 0; v < n; ++v)
            if (g.arc(u, v)) {
                first = u * n + v;
                break;
            }
    REQUIRE(first != -1);
    std::set<int> orbit;
    for (const Permutation& p : auts) orbit.insert(p[first / n] * n + p[first % n]);
    return static_cast<int>(orbit.size()) == g.arc_count();
}

TEST_CASE("permutation basics") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);

    Permutation p({1, 2, 0});
    CHECK(p.degree() == 3);
    CHECK(p[0] == 1);
    CHECK(!p.is_identity());
    CHECK(p.is_full_cycle());
    CHECK(Permutation::identity(3).is_identity());
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());

    // compose(f, g) applies f first
    Permutation f({1, 0, 2}), g({0, 2, 1});
    CHECK(compose(f, g).images() == std::vector<int>{2, 0, 1});
    CHECK(compose(g, f).images() == std::vector<int>{1, 2, 0});

    CHECK(!Permutation({1, 0, 2}).is_full_cycle());
    CHECK(Permutation::identity(1).is_full_cycle());
    CHECK(!Permutation::identity(2).is_full_cycle());
}

TEST_CASE("group order and membership") {
    SUBCASE("symmetric group") {
        PermGroup s4(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
        CHECK(s4.order() == 24);
        CHECK(s4.contains(Permutation({3, 2, 1, 0})));
        std::set<Permutation> elements;
        s4.for_each_element(100, [&](const Permutation& p) { elements.insert(p); });
        CHECK(elements.size() == 24);
        for (const Permutation& p : elements) CHECK(s4.contains(p));
    }
    SUBCASE("cyclic group") {
        PermGroup z5(5, {Permutation({1, 2, 3, 4, 0})});
        CHECK(z5.order() == 5);
        CHECK(!z5.contains(Permutation({1, 0, 2, 3, 4})));
    }
    SUBCASE("trivial group") {
        PermGroup triv(3, {});
        CHECK(triv.order() == 1);
        CHECK(triv.contains(Permutation::identity(3)));
        CHECK(!triv.contains(Permutation({1, 0, 2})));
        int count = 0;
        triv.for_each_element(10, [&](const Permutation& p) {
            CHECK(p.is_identity());
            ++count;
        });
        CHECK(count == 1);
    }
    SUBCASE("dihedral group of the square") {
        PermGroup d4(4, {Permutation({1, 2, 3, 0}), Permutation({0, 3, 2, 1})});
        CHECK(d4.order() == 8);
        CHECK(!d4.contains(Permutation({1, 0, 2, 3})));
    }
    SUBCASE("enumeration budget") {
        PermGroup s4(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
        CHECK_THROWS_AS(s4.for_each_element(23, [](const Permutation&) {}), BudgetError);
    }
    SUBCASE("membership agrees with explicit enumeration against random subgroups") {
        std::mt19937 rng(101);
        for (int trial = 0; trial < 12; ++trial) {
            int n = 4 + trial % 3;
            std::vector<int> a(n), b(n);
            std::iota(a.begin(), a.end(), 0);
            std::iota(b.begin(), b.end(), 0);
            std::shuffle(a.begin(), a.end(), rng);
            std::shuffle(b.begin(), b.end(), rng);
            PermGroup grp(n, {Permutation(a), Permutation(b)});
            std::set<Permutation> elements;
            grp.for_each_element(1'000'000, [&](const Permutation& p) { elements.insert(p); });
            CHECK(elements.size() == grp.order());
            // closure: products of members stay inside
            const Permutation& x = *elements.begin();
            for (const Permutation& y : elements) CHECK(elements.count(compose(x, y)) == 1);
            std::vector<int> c(n);
            std::iota(c.begin(), c.end(), 0);
            std::shuffle(c.begin(), c.end(), rng);
            CHECK(grp.contains(Permutation(c)) == (elements.count(Permutation(c)) == 1));
        }
    }
}

TEST_CASE("automorphism group vs exhaustive oracle") {
    SUBCASE("known orders") {
        DenseDigraph c4 = to_dense(Circulant(4, {1, 3}));
        CHECK(automorphism_group(c4).order() == 8);
        CHECK(automorphism_group(complete_digraph(4)).order() == 24);
        CHECK(automorphism_group(directed_cycle(6)).order() == 6);
        CHECK(automorphism_group(single_loop()).order() == 1);
        CHECK(automorphism_group(to_dense(Circulant(7, {1, 2, 4}))).order() == 21);
    }
    SUBCASE("random digraphs") {
        std::mt19937 rng(211);
        for (int trial = 0; trial < 40; ++trial) {
            int n = 1 + trial % 6;
            DenseDigraph g = random_digraph(n, 0.2 + 0.1 * (trial % 6), rng);
            PermGroup aut = automorphism_group(g);
            CHECK(aut.order() == all_automorphisms_oracle(g).size());
            for (const Permutation& p : aut.generators()) CHECK(preserves_arcs(p, g));
            // chain built by the search agrees with one rebuilt from scratch
            CHECK(PermGroup(n, aut.generators()).order() == aut.order());
        }
    }
    SUBCASE("search bound") {
        CHECK_THROWS_AS(automorphism_group(complete_digraph(5), SearchLimits{4, 100}),
                        BudgetError);
    }
}

TEST_CASE("isomorphism search") {
    DenseDigraph c4 = to_dense(Circulant(4, {1, 3}));
    DenseDigraph blown = lex_product(complete_digraph(2), 2);
    SUBCASE("positive with witness") {
        auto iso = search_isomorphism(blown, c4);
        REQUIRE(iso.has_value());
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v) CHECK(blown.arc(u, v) == c4.arc((*iso)[u], (*iso)[v]));
    }
    SUBCASE("negative") {
        CHECK(!search_isomorphism(complete_digraph(3), directed_cycle(3)).has_value());
        CHECK(!search_isomorphism(c4, complete_digraph(4)).has_value());
    }
    SUBCASE("prefix forcing") {
        auto fixed = search_isomorphism(c4, c4, {2});
        REQUIRE(fixed.has_value());
        CHECK((*fixed)[0] == 2);
        CHECK(!search_isomorphism(blown, c4, {0, 1}).has_value());  // 0,1 nonadjacent vs adjacent
    }
}

TEST_CASE("arc transitivity") {
    SUBCASE("known cases") {
        CHECK(is_arc_transitive(to_dense(Circulant(4, {1, 3}))));
        CHECK(is_arc_transitive(complete_digraph(4)));
        CHECK(is_arc_transitive(directed_cycle(5)));
        CHECK(is_arc_transitive(single_loop()));
        CHECK(!is_arc_transitive(to_dense(Circulant(4, {1, 2}))));
        DenseDigraph path(3);
        path.set_arc(0, 1);
        path.set_arc(1, 2);
        CHECK(!is_arc_transitive(path));
        CHECK_THROWS_AS(is_arc_transitive(DenseDigraph(3)), std::invalid_argument);
    }
    SUBCASE("matches oracle on random digraphs") {
        std::mt19937 rng(307);
        int checked = 0;
        for (int trial = 0; trial < 60; ++trial) {
            int n = 2 + trial % 5;
            DenseDigraph g = random_digraph(n, 0.3 + 0.1 * (trial % 5), rng);
            if (g.arc_count() == 0) continue;
            CHECK(is_arc_transitive(g) == arc_transitive_oracle(g));
            ++checked;
        }
        CHECK(checked > 40);
    }
    SUBCASE("matches oracle on all circulants of small order") {
        for (int n = 2; n <= 6; ++n)
            for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
                std::vector<int> s;
                for (int v = 1; v < n; ++v)
                    if (mask & (1 << (v - 1))) s.push_back(v);
                DenseDigraph g = to_dense(Circulant(n, s));
                CHECK(is_arc_transitive(g) == arc_transitive_oracle(g));
            }
    }
}

TEST_CASE("regular cyclic subgroups") {
    auto subgroup_count_oracle = [](const DenseDigraph& g) {
        std::set<std::set<std::vector<int>>> subgroups;
        for (const Permutation& p : all_automorphisms_oracle(g)) {
            if (!p.is_full_cycle()) continue;
            std::set<std::vector<int>> sub;
            Permutation q = p;
            for (int k = 1; k <= g.order(); ++k) {
                sub.insert(q.images());
                q = compose(q, p);
            }
            subgroups.insert(sub);
        }
        return subgroups.size();
    };

    DenseDigraph c4 = to_dense(Circulant(4, {1, 3}));
    DenseDigraph k4 = complete_digraph(4);
    DenseDigraph c5 = directed_cycle(5);

    auto check_graph = [&](const DenseDigraph& g, std::size_t expect) {
        PermGroup aut = automorphism_group(g);
        auto subs = regular_cyclic_subgroups(aut);
        CHECK(subs.size() == expect);
        CHECK(subs.size() == subgroup_count_oracle(g));
        for (const Permutation& p : subs) {
            CHECK(p.is_full_cycle());
            CHECK(preserves_arcs(p, g));
        }
        CHECK(std::is_sorted(subs.begin(), subs.end()));
    };
    check_graph(c4, 1);
    check_graph(k4, 3);
    check_graph(c5, 1);
    check_graph(to_dense(Circulant(7, {1, 2, 4})), 1);
    check_graph(complete_digraph(5), 6);
    check_graph(single_loop(), 1);

    SUBCASE("budget") {
        PermGroup aut = automorphism_group(complete_digraph(5));
        CHECK_THROWS_AS(regular_cyclic_subgroups(aut, 100), BudgetError);
    }
}

TEST_CASE("normality of circulants") {
    CHECK(is_normal_circulant(Circulant(4, {1, 3})));
    CHECK(!is_normal_circulant(Circulant(4, {1, 2, 3})));
    CHECK(is_normal_circulant(Circulant(7, {1, 2, 4})));
    CHECK(!is_normal_circulant(Circulant(5, {1, 2, 3, 4})));
    CHECK(!is_normal_circulant(Circulant(8, {1, 2, 3, 5, 6, 7})));
    CHECK(is_normal_circulant(Circulant(1, {0})));
    CHECK(is_normal_circulant(Circulant(2, {1})));
    CHECK(is_normal_circulant(Circulant(6, {1, 5})));

    SUBCASE("normalizer-order fallback agrees when enumeration is possible") {
        for (int n = 2; n <= 8; ++n)
            for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
                std::vector<int> s;
                for (int v = 1; v < n; ++v)
                    if (mask & (1 << (v - 1))) s.push_back(v);
                Circulant c(n, s);
                if (!is_connected(c) || !is_arc_transitive(to_dense(c))) continue;
                SearchLimits tight;
                tight.group_budget = 10;  // force the order-comparison route
                CHECK(is_normal_circulant(c) == is_normal_circulant(c, tight));
            }
    }
}
