/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/cycles.hh>
#include <kkernel/families.hh>
#include <kkernel/kernel.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>

using namespace kkernel;

namespace
{
    auto mask_to_set(unsigned mask, int n) -> VertexSet
    {
        VertexSet s;
        for (int v = 0 ; v < n ; ++v)
            if (mask & (1u << v))
                s.push_back(v);
        return s;
    }
}

TEST_CASE("independence and absorbency examples")
{
    auto path = directed_path(3);
    CHECK(is_k_independent(path, VertexSet{}, 5));
    CHECK(is_k_independent(path, VertexSet{ 1 }, 5));
    CHECK(is_k_independent(path, VertexSet{ 0, 2 }, 2));
    CHECK_FALSE(is_k_independent(path, VertexSet{ 0, 2 }, 3));

    CHECK(is_l_absorbent(path, VertexSet{ 0, 1, 2 }, 1));
    CHECK(is_l_absorbent(path, VertexSet{ 2 }, 2));
    CHECK_FALSE(is_l_absorbent(path, VertexSet{ 2 }, 1));

    auto h3 = build_h_k(3);
    VertexSet sinks{ h3.index_of("f_v"), h3.index_of("f_u"), h3.index_of("f_w") };
    CHECK_FALSE(is_l_absorbent(h3.digraph, sinks, 2));
    DistanceMatrix dist{ h3.digraph };
    for (Vertex u = 0 ; u < h3.digraph.size() ; ++u) {
        bool absorbed = std::ranges::find(sinks, u) != sinks.end()
            || std::ranges::any_of(sinks, [&] (Vertex s) { return dist(u, s) <= 2; });
        bool exception = h3.labels[u] == "v_1" || h3.labels[u] == "u_1" || h3.labels[u] == "w_1";
        CHECK(absorbed == ! exception);
    }
}

TEST_CASE("find_kernel examples")
{
    CHECK_FALSE(find_kernel(directed_cycle(3)));
    CHECK(all_k_kernels(directed_cycle(3), 2).empty());

    // the subset scan finds {0,2} as the only kernel of the path
    CHECK(all_k_kernels(directed_path(3), 2) == std::vector<VertexSet>{ { 0, 2 } });
    auto path = find_kernel(directed_path(3));
    REQUIRE(path);
    CHECK(path->members == VertexSet{ 0, 2 });
    CHECK(path->witnesses.at(1) == AbsorptionWitness{ 2, 1 });

    auto single = find_kernel(Digraph{ 1, {} });
    REQUIRE(single);
    CHECK(single->members == VertexSet{ 0 });

    Digraph digon{ 2, { { 0, 1 }, { 1, 0 } } };
    CHECK(all_k_kernels(digon, 2) == std::vector<VertexSet>{ { 0 }, { 1 } });
    CHECK(all_k_kernels(Digraph{ 1, {} }, 2) == std::vector<VertexSet>{ { 0 } });
}

TEST_CASE("find_k_kernel examples")
{
    CHECK_FALSE(find_k_kernel(build_h_k(3).digraph, 3));
    CHECK_FALSE(find_k_kernel(build_h_k(4).digraph, 4));

    // 16-subset scan: only {0,3} is 3-independent and 2-absorbent
    std::vector<VertexSet> expected;
    for (unsigned mask = 0 ; mask < 16 ; ++mask)
        if (oracle::is_kl_kernel(directed_path(4), mask, 3, 2))
            expected.push_back(mask_to_set(mask, 4));
    CHECK(expected == std::vector<VertexSet>{ { 0, 3 } });
    auto found = find_k_kernel(directed_path(4), 3);
    REQUIRE(found);
    CHECK(found->members == VertexSet{ 0, 3 });
    CHECK(validate_certificate(directed_path(4), *found));

    CHECK_THROWS_AS(find_k_kernel(directed_path(4), 1), std::invalid_argument);
}

TEST_CASE("find_kl_kernel")
{
    SUBCASE("(2,1) agrees with find_kernel")
    {
        for (int n = 1 ; n <= 4 ; ++n)
            oracle::for_each_digraph(n, [] (const Digraph & d) {
                auto a = find_kernel(d), b = find_kl_kernel(d, 2, 1);
                REQUIRE(a.has_value() == b.has_value());
                if (a)
                    CHECK(a->members == b->members);
            });
    }

    SUBCASE("paths longer than l have no (k,l)-kernel when k > l+1")
    {
        for (int l = 1 ; l <= 3 ; ++l)
            for (int k = l + 2 ; k <= l + 4 ; ++k) {
                CHECK_FALSE(find_kl_kernel(directed_path(l + 2), k, l));
                CHECK_FALSE(oracle::has_kl_kernel(directed_path(l + 2), k, l));
            }
    }

    SUBCASE("digon")
    {
        Digraph digon{ 2, { { 0, 1 }, { 1, 0 } } };
        for (int k = 2 ; k <= 5 ; ++k)
            for (int l = 1 ; l <= 3 ; ++l) {
                auto c = find_kl_kernel(digon, k, l);
                REQUIRE(c);
                CHECK(c->members.size() == 1);
            }
    }

    SUBCASE("agrees with the brute-force oracle")
    {
        std::mt19937 rng{ 23 };
        for (int t = 0 ; t < 400 ; ++t) {
            int n = std::uniform_int_distribution{ 1, 7 }(rng);
            auto d = oracle::random_digraph(n, 0.3, rng);
            int k = std::uniform_int_distribution{ 2, 5 }(rng), l = std::uniform_int_distribution{ 1, 4 }(rng);
            auto c = find_kl_kernel(d, k, l);
            CHECK(c.has_value() == oracle::has_kl_kernel(d, k, l));
            CHECK(c.has_value() == ! all_kl_kernels(d, k, l).empty());
            if (c)
                CHECK(validate_certificate(d, *c));
        }
    }
}

TEST_CASE("k-kernels correspond to kernels of the (k-1)-closure")
{
    for (int n = 1 ; n <= 4 ; ++n)
        oracle::for_each_digraph(n, [] (const Digraph & d) {
            for (int k = 2 ; k <= 4 ; ++k)
                CHECK(all_k_kernels(d, k).empty() == ! find_kernel(closure(d, k - 1)).has_value());
        });

    std::mt19937 rng{ 29 };
    for (int t = 0 ; t < 2000 ; ++t) {
        auto d = oracle::random_digraph(5, std::uniform_real_distribution{ 0.1, 0.6 }(rng), rng);
        for (int k = 2 ; k <= 4 ; ++k)
            CHECK(all_k_kernels(d, k).empty() == ! find_kernel(closure(d, k - 1)).has_value());
    }
}

TEST_CASE("independence and absorbency transfer to closures")
{
    std::mt19937 rng{ 31 };
    for (int t = 0 ; t < 500 ; ++t) {
        int n = std::uniform_int_distribution{ 1, 5 }(rng);
        auto d = oracle::random_digraph(n, 0.35, rng);
        auto s = mask_to_set(std::uniform_int_distribution<unsigned>{ 0, (1u << n) - 1 }(rng), n);
        for (int k = 2 ; k <= 4 ; ++k)
            CHECK(is_k_independent(d, s, k) == is_k_independent(closure(d, k - 1), s, 2));
        for (int l = 1 ; l <= 3 ; ++l)
            CHECK(is_l_absorbent(d, s, l) == is_l_absorbent(closure(d, l), s, 1));
    }
}

TEST_CASE("acyclic digraphs have a unique kernel")
{
    std::mt19937 rng{ 37 };
    for (int t = 0 ; t < 300 ; ++t) {
        int n = std::uniform_int_distribution{ 1, 8 }(rng);
        // orient every arc forward in a random order
        auto order = oracle::random_permutation(n, rng);
        std::vector<Arc> arcs;
        std::bernoulli_distribution coin{ 0.4 };
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (coin(rng))
                    arcs.emplace_back(order[i], order[j]);
        Digraph d{ n, arcs };
        REQUIRE(is_acyclic(d));
        auto kernel = find_kernel(d);
        REQUIRE(kernel);
        auto all = all_k_kernels(d, 2);
        REQUIRE(all.size() == 1);
        CHECK(all.front() == kernel->members);
    }
}

TEST_CASE("kernel perfection")
{
    CHECK(is_kernel_perfect(Digraph{ 2, { { 0, 1 }, { 1, 0 } } }));
    CHECK_FALSE(is_kernel_perfect(directed_cycle(3)));
    // C3 plus a pendant vertex: the whole digraph has a kernel but the triangle does not
    Digraph d{ 4, { { 0, 1 }, { 1, 2 }, { 2, 0 }, { 0, 3 } } };
    CHECK(find_kernel(d));
    CHECK_FALSE(is_kernel_perfect(d));
}

TEST_CASE("oracle bound")
{
    CHECK_THROWS_AS(all_k_kernels(directed_path(21), 2), OracleLimitError);
    CHECK_NOTHROW(all_k_kernels(directed_path(21), 2, 21));
    CHECK_THROWS_AS(is_kernel_perfect(directed_path(21)), OracleLimitError);
    CHECK_THROWS_AS(all_k_kernels(directed_path(3), 2, 2), OracleLimitError);
}

TEST_CASE("certificate validation rejects tampering")
{
    auto d = directed_path(4);
    auto c = find_k_kernel(d, 3);
    REQUIRE(c);
    CHECK(validate_certificate(d, *c));

    auto wrong_distance = *c;
    wrong_distance.witnesses.begin()->second.distance += 1;
    CHECK_FALSE(validate_certificate(d, wrong_distance));

    auto missing = *c;
    missing.witnesses.erase(missing.witnesses.begin());
    CHECK_FALSE(validate_certificate(d, missing));

    auto too_close = *c;
    too_close.members = { 0, 2 };
    CHECK_FALSE(validate_certificate(d, too_close));
}
