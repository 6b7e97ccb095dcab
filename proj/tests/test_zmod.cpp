#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "circlex/zmod.hpp"

using namespace circlex;

// independent totient oracle: n * prod (1 - 1/p) over prime divisors
static long long totient_oracle(int n) {
    long long t = n;
    for (auto [p, e] : factorize(n)) t = t / p * (p - 1);
    return t;
}

TEST_CASE("normalize_mod") {
    CHECK(normalize_mod(7, 5) == 2);
    CHECK(normalize_mod(-1, 5) == 4);
    CHECK(normalize_mod(-10, 5) == 0);
    CHECK(normalize_mod(0, 1) == 0);
    CHECK(normalize_mod(123456789LL * 1000003, 97) ==
          ((123456789LL * 1000003) % 97 + 97) % 97);
    CHECK_THROWS_AS(normalize_mod(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(normalize_mod(3, -4), std::invalid_argument);
}

TEST_CASE("units") {
    CHECK(units(12) == std::vector<int>{1, 5, 7, 11});
    CHECK(units(1) == std::vector<int>{0});
    CHECK(units(2) == std::vector<int>{1});
    for (int n = 1; n <= 200; ++n) {
        auto u = units(n);
        CHECK(static_cast<long long>(u.size()) == totient_oracle(n));
        CHECK(std::is_sorted(u.begin(), u.end()));
        // closed under multiplication mod n
        for (int a : u)
            for (int b : u)
                CHECK(std::gcd(normalize_mod(1LL * a * b, n), n) == 1);
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<int>{1});
    CHECK(divisors(13) == std::vector<int>{1, 13});
    for (int n = 1; n <= 200; ++n) {
        auto ds = divisors(n);
        CHECK(std::is_sorted(ds.begin(), ds.end()));
        int count = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) ++count;
        CHECK(static_cast<int>(ds.size()) == count);
        for (int d : ds) CHECK(n % d == 0);
    }
}

TEST_CASE("unitary_divisors") {
    CHECK(unitary_divisors(12) == std::vector<int>{1, 3, 4, 12});
    CHECK(unitary_divisors(1) == std::vector<int>{1});
    CHECK(unitary_divisors(8) == std::vector<int>{1, 8});
    for (int n = 1; n <= 200; ++n) {
        auto us = unitary_divisors(n);
        std::set<int> set(us.begin(), us.end());
        CHECK(set.count(1) == 1);
        CHECK(set.count(n) == 1);
        // closed under m -> n/m
        for (int m : us) {
            CHECK(set.count(n / m) == 1);
            CHECK(std::gcd(m, n / m) == 1);
        }
        // count is 2^(number of distinct primes)
        CHECK(us.size() == (1u << factorize(n).size()));
    }
}

TEST_CASE("subgroup_of_order") {
    CHECK(subgroup_of_order(12, 3) == std::vector<int>{0, 4, 8});
    CHECK(subgroup_of_order(12, 1) == std::vector<int>{0});
    CHECK(subgroup_of_order(12, 12) ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    CHECK_THROWS_AS(subgroup_of_order(12, 5), std::invalid_argument);
    CHECK_THROWS_AS(subgroup_of_order(12, 0), std::invalid_argument);
    for (int n = 1; n <= 60; ++n)
        for (int d : divisors(n)) {
            auto h = subgroup_of_order(n, d);
            CHECK(static_cast<int>(h.size()) == d);
            // closed under addition and negation
            std::set<int> set(h.begin(), h.end());
            for (int a : h) {
                CHECK(set.count(normalize_mod(-a, n)) == 1);
                for (int b : h) CHECK(set.count(normalize_mod(a + b, n)) == 1);
            }
        }
}

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    CHECK(factorize(12) == std::vector<std::pair<int, int>>{{2, 2}, {3, 1}});
    CHECK(factorize(97) == std::vector<std::pair<int, int>>{{97, 1}});
    for (int n = 1; n <= 500; ++n) {
        long long prod = 1;
        for (auto [p, e] : factorize(n))
            for (int i = 0; i < e; ++i) prod *= p;
        CHECK(prod == n);
    }
}

TEST_CASE("crt split") {
    CrtSplit split(12, {3, 4});
    CHECK(split.forward(7) == std::vector<int>{1, 3});
    CHECK(split.inverse({1, 3}) == 7);

    SUBCASE("round trip for every residue and several splits") {
        for (auto [n, parts] : std::vector<std::pair<int, std::vector<int>>>{
                 {12, {3, 4}}, {12, {4, 3}}, {30, {2, 3, 5}}, {7, {7}},
                 {1, {1}}, {60, {4, 15}}, {60, {1, 60}}}) {
            CrtSplit s(n, parts);
            for (int x = 0; x < n; ++x) CHECK(s.inverse(s.forward(x)) == x);
        }
    }
    SUBCASE("addition is coordinatewise") {
        CrtSplit s(60, {4, 3, 5});
        for (int x = 0; x < 60; x += 7)
            for (int y = 0; y < 60; y += 5) {
                auto cx = s.forward(x), cy = s.forward(y);
                std::vector<int> sum(cx.size());
                for (std::size_t i = 0; i < cx.size(); ++i)
                    sum[i] = normalize_mod(cx[i] + cy[i], s.parts()[i]);
                CHECK(s.inverse(sum) == normalize_mod(x + y, 60));
            }
    }
    SUBCASE("invalid splits rejected") {
        CHECK_THROWS_AS(CrtSplit(12, {2, 6}), std::invalid_argument);
        CHECK_THROWS_AS(CrtSplit(12, {3, 5}), std::invalid_argument);
        CHECK_THROWS_AS(CrtSplit(12, {12, 0}), std::invalid_argument);
        CHECK_THROWS_AS(split.forward(12), std::invalid_argument);
        CHECK_THROWS_AS(split.forward(-1), std::invalid_argument);
        CHECK_THROWS_AS(split.inverse({1}), std::invalid_argument);
        CHECK_THROWS_AS(split.inverse({3, 1}), std::invalid_argument);
    }
}
