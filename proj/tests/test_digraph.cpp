#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circlex/digraph.hpp"

using namespace circlex;

static DenseDigraph random_digraph(int n, double density, std::mt19937& rng) {
    DenseDigraph g(n);
    std::bernoulli_distribution arc(density);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (arc(rng)) g.set_arc(u, v);
    return g;
}

static DenseDigraph random_loopless(int n, double density, std::mt19937& rng) {
    DenseDigraph g = random_digraph(n, density, rng);
    for (int v = 0; v < n; ++v) g.set_arc(v, v, false);
    return g;
}

// does the vertex map perm[] carry g1 onto g2 arc-for-arc?
static bool is_iso_under(const std::vector<int>& perm, const DenseDigraph& g1,
                         const DenseDigraph& g2) {
    if (g1.order() != g2.order() || g1.arc_count() != g2.arc_count()) return false;
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g1.order(); ++v)
            if (g1.arc(u, v) != g2.arc(perm[u], perm[v])) return false;
    return true;
}

TEST_CASE("basic storage") {
    DenseDigraph g(3);
    CHECK(g.arc_count() == 0);
    g.set_arc(0, 1);
    g.set_arc(1, 2);
    g.set_arc(2, 2);
    CHECK(g.arc(0, 1));
    CHECK(!g.arc(1, 0));
    CHECK(g.arc_count() == 3);
    CHECK(g.has_loop());
    CHECK(g.out_degree(2) == 1);
    CHECK(g.in_degree(2) == 2);
    CHECK(out_neighborhood(g, 1) == std::vector<int>{2});
    CHECK(in_neighborhood(g, 2) == std::vector<int>{1, 2});
    g.set_arc(2, 2, false);
    CHECK(!g.has_loop());
    CHECK(g.arc_count() == 2);
    CHECK_THROWS_AS(g.arc(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.set_arc(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(DenseDigraph(0), std::invalid_argument);
}

TEST_CASE("storage beyond one word") {
    DenseDigraph g(70);
    g.set_arc(0, 69);
    g.set_arc(69, 68);
    CHECK(g.arc(0, 69));
    CHECK(g.arc(69, 68));
    CHECK(!g.arc(68, 69));
    CHECK(g.arc_count() == 2);
    CHECK(in_neighborhood(g, 69) == std::vector<int>{0});
}

TEST_CASE("tensor product") {
    SUBCASE("loop is a unit on both sides, up to labels == exactly") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            DenseDigraph g = random_digraph(1 + trial % 6, 0.4, rng);
            CHECK(tensor_product(single_loop(), g) == g);
            CHECK(tensor_product(g, single_loop()) == g);
        }
    }
    SUBCASE("K2 x K2 is a disconnected 4-cycle pair") {
        DenseDigraph t = tensor_product(complete_digraph(2), complete_digraph(2));
        CHECK(t.order() == 4);
        CHECK(t.arc_count() == 4);
        CHECK(!is_connected(t));
        CHECK(t.arc(0, 3));
        CHECK(t.arc(3, 0));
        CHECK(t.arc(1, 2));
        CHECK(t.arc(2, 1));
    }
    SUBCASE("arc counts multiply") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 30; ++trial) {
            DenseDigraph a = random_digraph(1 + trial % 5, 0.5, rng);
            DenseDigraph b = random_digraph(1 + (trial * 3) % 5, 0.5, rng);
            CHECK(tensor_product(a, b).arc_count() == a.arc_count() * b.arc_count());
        }
    }
    SUBCASE("associative under the nested serialization") {
        std::mt19937 rng(13);
        for (int trial = 0; trial < 10; ++trial) {
            DenseDigraph a = random_digraph(1 + trial % 4, 0.5, rng);
            DenseDigraph b = random_digraph(1 + (trial + 1) % 4, 0.5, rng);
            DenseDigraph c = random_digraph(1 + (trial + 2) % 4, 0.5, rng);
            CHECK(tensor_product(tensor_product(a, b), c) ==
                  tensor_product(a, tensor_product(b, c)));
        }
    }
}

TEST_CASE("lexicographic blow-up") {
    SUBCASE("b = 1 is the identity") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 10; ++trial) {
            DenseDigraph g = random_digraph(1 + trial % 6, 0.4, rng);
            CHECK(lex_product(g, 1) == g);
        }
    }
    SUBCASE("K2 blown up by 2 is the undirected 4-cycle") {
        DenseDigraph blown = lex_product(complete_digraph(2), 2);
        DenseDigraph c4(4);
        for (int v = 0; v < 4; ++v) {
            c4.set_arc(v, (v + 1) % 4);
            c4.set_arc((v + 1) % 4, v);
        }
        CHECK(blown.arc_count() == 8);
        CHECK(is_iso_under({0, 2, 1, 3}, blown, c4));
    }
    SUBCASE("nested blow-ups collapse") {
        std::mt19937 rng(19);
        for (int trial = 0; trial < 20; ++trial) {
            DenseDigraph g = random_digraph(1 + trial % 5, 0.4, rng);
            int m = 1 + trial % 3, l = 1 + (trial / 3) % 3;
            CHECK(lex_product(lex_product(g, m), l) == lex_product(g, m * l));
        }
    }
    SUBCASE("blocks of a blow-up are thickness classes") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            DenseDigraph g = random_loopless(2 + trial % 5, 0.5, rng);
            if (!is_r_thin(g)) continue;
            int b = 2 + trial % 3;
            auto classes = thickness_classes(lex_product(g, b));
            REQUIRE(classes.blocks.size() == static_cast<std::size_t>(g.order()));
            for (int u = 0; u < g.order(); ++u) {
                REQUIRE(classes.blocks[u].size() == static_cast<std::size_t>(b));
                for (int i = 0; i < b; ++i) CHECK(classes.blocks[u][i] == u * b + i);
            }
        }
    }
}

TEST_CASE("quotient") {
    DenseDigraph c4(4);
    for (int v = 0; v < 4; ++v) {
        c4.set_arc(v, (v + 1) % 4);
        c4.set_arc((v + 1) % 4, v);
    }
    SUBCASE("4-cycle mod its antipodal pairs is K2") {
        DenseDigraph q = quotient(c4, {{{0, 2}, {1, 3}}});
        CHECK(q == complete_digraph(2));
    }
    SUBCASE("partition validation") {
        CHECK_THROWS_AS(quotient(c4, {{{0, 2}, {1}}}), std::invalid_argument);
        CHECK_THROWS_AS(quotient(c4, {{{0, 2}, {1, 3, 3}}}), std::invalid_argument);
        CHECK_THROWS_AS(quotient(c4, {{{0, 2}, {1, 3, 4}}}), std::invalid_argument);
        CHECK(is_valid_partition({{{3}, {0, 1}, {2}}}, 4));
        CHECK(!is_valid_partition({{{3}, {0, 1}, {}}}, 4));
    }
    SUBCASE("internal arcs become loops") {
        DenseDigraph q = quotient(c4, {{{0, 1}, {2, 3}}});
        CHECK(q.arc(0, 0));
        CHECK(q.arc(0, 1));
    }
}

TEST_CASE("thickness classes") {
    DenseDigraph c4(4);
    for (int v = 0; v < 4; ++v) {
        c4.set_arc(v, (v + 1) % 4);
        c4.set_arc((v + 1) % 4, v);
    }
    auto classes = thickness_classes(c4);
    REQUIRE(classes.blocks.size() == 2);
    CHECK(classes.blocks[0] == std::vector<int>{0, 2});
    CHECK(classes.blocks[1] == std::vector<int>{1, 3});
    CHECK(!is_r_thin(c4));
    CHECK(is_r_thin(complete_digraph(4)));
    CHECK(is_r_thin(complete_digraph(1)));

    SUBCASE("classes agree with the definition on random digraphs") {
        std::mt19937 rng(29);
        for (int trial = 0; trial < 30; ++trial) {
            DenseDigraph g = random_digraph(1 + trial % 7, 0.5, rng);
            auto p = thickness_classes(g);
            CHECK(is_valid_partition(p, g.order()));
            std::vector<int> block_of(g.order());
            for (std::size_t b = 0; b < p.blocks.size(); ++b)
                for (int v : p.blocks[b]) block_of[v] = static_cast<int>(b);
            for (int u = 0; u < g.order(); ++u)
                for (int v = 0; v < g.order(); ++v) {
                    bool same = out_neighborhood(g, u) == out_neighborhood(g, v) &&
                                in_neighborhood(g, u) == in_neighborhood(g, v);
                    CHECK(same == (block_of[u] == block_of[v]));
                }
        }
    }
    SUBCASE("quotient by thickness classes is thin for loopless digraphs") {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 40; ++trial) {
            DenseDigraph g = random_loopless(1 + trial % 8, 0.4, rng);
            CHECK(is_r_thin(quotient(g, thickness_classes(g))));
        }
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(directed_cycle(5)));
    CHECK(is_connected(single_loop()));
    CHECK(is_connected(complete_digraph(1)));
    DenseDigraph two_parts(4);
    two_parts.set_arc(0, 1);
    two_parts.set_arc(2, 3);
    CHECK(!is_connected(two_parts));
    DenseDigraph directed_path(3);
    directed_path.set_arc(1, 0);
    directed_path.set_arc(1, 2);
    CHECK(is_connected(directed_path));
}
