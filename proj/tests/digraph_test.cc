/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/digraph.hh>

#include "oracles.hh"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kkernel;

TEST_CASE("construction")
{
    SUBCASE("single vertex")
    {
        Digraph d{ 1, {} };
        CHECK(d.size() == 1);
        CHECK(d.arc_count() == 0);
    }

    SUBCASE("digon")
    {
        Digraph d{ 2, { { 0, 1 }, { 1, 0 } } };
        CHECK(d.arc_count() == 2);
        CHECK(d.is_symmetric_arc(0, 1));
    }

    SUBCASE("duplicates collapse")
    {
        Digraph d{ 3, { { 0, 1 }, { 0, 1 }, { 1, 2 } } };
        CHECK(d.arc_count() == 2);
    }

    SUBCASE("loops and bad endpoints are rejected")
    {
        CHECK_THROWS_AS((Digraph{ 2, { { 1, 1 } } }), DigraphError);
        CHECK_THROWS_AS((Digraph{ 2, { { 0, 2 } } }), DigraphError);
        CHECK_THROWS_AS((Digraph{ 2, { { -1, 0 } } }), DigraphError);
    }
}

TEST_CASE("classify_arcs")
{
    auto digon = classify_arcs(Digraph{ 2, { { 0, 1 }, { 1, 0 } } });
    CHECK(digon.symmetric == std::vector<Arc>{ { 0, 1 } });
    CHECK(digon.asymmetric.empty());

    auto triangle = classify_arcs(directed_cycle(3));
    CHECK(triangle.symmetric.empty());
    CHECK(triangle.asymmetric.size() == 3);

    std::mt19937 rng{ 7 };
    for (int t = 0 ; t < 200 ; ++t) {
        auto d = oracle::random_digraph(std::uniform_int_distribution{ 1, 8 }(rng), 0.4, rng);
        auto c = classify_arcs(d);
        CHECK(2 * c.symmetric.size() + c.asymmetric.size() == static_cast<std::size_t>(d.arc_count()));
        for (auto & [u, v] : c.asymmetric)
            CHECK(std::find(c.symmetric.begin(), c.symmetric.end(), Arc{ std::min(u, v), std::max(u, v) }) == c.symmetric.end());

        auto r = classify_arcs(d.reversed());
        CHECK(r.symmetric == c.symmetric);
        std::vector<Arc> flipped;
        for (auto & [u, v] : c.asymmetric)
            flipped.emplace_back(v, u);
        std::sort(flipped.begin(), flipped.end());
        CHECK(r.asymmetric == flipped);
    }
}

TEST_CASE("distances")
{
    auto path = distances(directed_path(3));
    CHECK(path(0, 2) == 2);
    CHECK(path(2, 0) == infinite_distance);
    CHECK(path(1, 1) == 0);

    std::mt19937 rng{ 11 };
    for (int t = 0 ; t < 300 ; ++t) {
        int n = std::uniform_int_distribution{ 1, 8 }(rng);
        auto d = oracle::random_digraph(n, std::uniform_real_distribution{ 0.05, 0.5 }(rng), rng);
        DistanceMatrix dist{ d };
        auto expected = oracle::floyd_warshall(d);
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v) {
                int got = dist(u, v) == infinite_distance ? oracle::inf : dist(u, v);
                CHECK(got == expected[u][v]);
                CHECK((dist(u, v) == 1) == d.has_arc(u, v));
                for (int w = 0 ; w < n ; ++w)
                    CHECK(dist(u, w) <= add_distance(dist(u, v), dist(v, w)));
            }
    }
}

TEST_CASE("closure examples")
{
    auto path = directed_path(3);
    CHECK(closure(path, 1) == path);
    CHECK(closure(path, 2) == Digraph{ 3, { { 0, 1 }, { 1, 2 }, { 0, 2 } } });
    CHECK_THROWS_AS(closure(path, 0), std::invalid_argument);

    // on C4 every ordered pair is at distance 1, 2 or 3
    auto c4 = distances(directed_cycle(4));
    for (int u = 0 ; u < 4 ; ++u)
        for (int v = 0 ; v < 4 ; ++v)
            if (u != v)
                CHECK((c4(u, v) >= 1 && c4(u, v) <= 3));
    CHECK(closure(directed_cycle(4), 3) == complete_symmetric(4));
    CHECK(closure(directed_cycle(4), 3).arc_count() == 12);
}

TEST_CASE("closure properties")
{
    std::mt19937 rng{ 5 };
    for (int t = 0 ; t < 200 ; ++t) {
        int n = std::uniform_int_distribution{ 1, 8 }(rng);
        auto d = oracle::random_digraph(n, 0.25, rng);
        CHECK(closure(d, 1) == d);
        for (int m = 1 ; m <= 4 ; ++m) {
            auto smaller = closure(d, m), larger = closure(d, m + 1);
            for (auto & [u, v] : smaller.arcs())
                CHECK(larger.has_arc(u, v));
            CHECK(closure(smaller, 1) == smaller);
        }
    }
}

TEST_CASE("induced, relabelled and asymmetric part")
{
    Digraph d{ 4, { { 0, 1 }, { 1, 0 }, { 1, 2 }, { 2, 3 }, { 3, 1 } } };
    std::vector<Vertex> keep{ 1, 2, 3 };
    CHECK(d.induced(keep) == Digraph{ 3, { { 0, 1 }, { 1, 2 }, { 2, 0 } } });
    CHECK(d.asymmetric_part() == Digraph{ 4, { { 1, 2 }, { 2, 3 }, { 3, 1 } } });
    std::vector<Vertex> perm{ 3, 2, 1, 0 };
    CHECK(d.relabelled(perm) == Digraph{ 4, { { 3, 2 }, { 2, 3 }, { 2, 1 }, { 1, 0 }, { 0, 2 } } });
}
