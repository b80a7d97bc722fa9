/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/cycles.hh>
#include <kkernel/families.hh>
#include <kkernel/io.hh>
#include <kkernel/kernel.hh>

#include <doctest.h>

#include <set>
#include <string>

using namespace kkernel;
using std::string;

namespace
{
    auto labelled_arcs(const FamilyInstance & h) -> std::set<std::pair<string, string>>
    {
        std::set<std::pair<string, string>> result;
        for (auto & [u, v] : h.digraph.arcs())
            result.emplace(h.labels[u], h.labels[v]);
        return result;
    }
}

TEST_CASE("H_3 matches its drawing")
{
    auto h = build_h_k(3);
    CHECK(h.digraph.size() == 12);
    // connectors, tails, and one symmetric pair per chain
    std::set<std::pair<string, string>> expected{
        { "v_2", "u_1" }, { "u_2", "w_1" }, { "w_2", "v_1" },
        { "v_2", "e_v" }, { "e_v", "f_v" }, { "u_2", "e_u" }, { "e_u", "f_u" }, { "w_2", "e_w" }, { "e_w", "f_w" },
        { "v_1", "v_2" }, { "v_2", "v_1" }, { "u_1", "u_2" }, { "u_2", "u_1" }, { "w_1", "w_2" }, { "w_2", "w_1" } };
    CHECK(labelled_arcs(h) == expected);
    CHECK(h.digraph.arc_count() == 15);
    CHECK(classify_arcs(h.digraph).symmetric.size() == 3);
}

TEST_CASE("H_4 matches its drawing")
{
    auto h = build_h_k(4);
    CHECK(h.digraph.size() == 15);
    std::set<std::pair<string, string>> expected{
        { "v_3", "u_1" }, { "u_3", "w_1" }, { "w_3", "v_1" },
        { "v_3", "e_v" }, { "e_v", "f_v" }, { "u_3", "e_u" }, { "e_u", "f_u" }, { "w_3", "e_w" }, { "e_w", "f_w" },
        { "v_1", "v_2" }, { "v_2", "v_1" }, { "v_2", "v_3" }, { "v_3", "v_2" },
        { "u_1", "u_2" }, { "u_2", "u_1" }, { "u_2", "u_3" }, { "u_3", "u_2" },
        { "w_1", "w_2" }, { "w_2", "w_1" }, { "w_2", "w_3" }, { "w_3", "w_2" } };
    CHECK(labelled_arcs(h) == expected);
}

TEST_CASE("label layout")
{
    auto h = build_h_k(4);
    CHECK(h.labels == std::vector<string>{ "v_1", "v_2", "v_3", "u_1", "u_2", "u_3", "w_1", "w_2", "w_3",
            "e_v", "f_v", "e_u", "f_u", "e_w", "f_w" });
    CHECK_THROWS_AS(h.index_of("x_1"), std::out_of_range);
    CHECK_THROWS_AS(build_h_k(2), std::invalid_argument);
}

TEST_CASE("H_k structure")
{
    for (int k = 3 ; k <= 7 ; ++k) {
        CAPTURE(k);
        auto h = build_h_k(k);
        CHECK(h.digraph.size() == 3 * (k - 1) + 6);
        CHECK(h.digraph.arc_count() == 3 * 2 * (k - 2) + 3 + 6);
        CHECK(classify_arcs(h.digraph).symmetric.size() == static_cast<std::size_t>(3 * (k - 2)));

        DistanceMatrix dist{ h.digraph };
        CHECK(dist(h.index_of("v_1"), h.index_of("u_1")) == k - 1);
        CHECK(dist(h.index_of("u_1"), h.index_of("w_1")) == k - 1);
        CHECK(dist(h.index_of("w_1"), h.index_of("v_1")) == k - 1);

        std::vector<Cycle> long_cycles;
        for (auto & c : enumerate_simple_cycles(h.digraph))
            if (c.length() > 2)
                long_cycles.push_back(c);
        REQUIRE(long_cycles.size() == 1);
        CHECK(long_cycles.front().length() == 3 * (k - 1));
        CHECK(cycle_symmetric_count(h.digraph, long_cycles.front()) == 3 * (k - 2));
    }
}

TEST_CASE("H_k is invariant under rotating v, u, w")
{
    for (int k = 3 ; k <= 6 ; ++k) {
        auto h = build_h_k(k);
        std::vector<Vertex> perm(h.digraph.size());
        for (Vertex x = 0 ; x < h.digraph.size() ; ++x) {
            string label = h.labels[x];
            string rotated = label;
            char & chain = (label[0] == 'e' || label[0] == 'f') ? rotated[2] : rotated[0];
            chain = chain == 'v' ? 'u' : chain == 'u' ? 'w' : 'v';
            perm[x] = h.index_of(rotated);
        }
        CHECK(h.digraph.relabelled(perm) == h.digraph);
    }
}

TEST_CASE("verify_h_k")
{
    for (int k = 3 ; k <= 5 ; ++k) {
        CAPTURE(k);
        auto r = verify_h_k(k);
        CHECK(r.passed);
        CHECK(r.mismatches.empty());
        CHECK(r.long_cycle_length == 3 * (k - 1));
        CHECK(r.long_cycle_symmetric == 3 * (k - 2));
        CHECK(r.premise_margin == -1);
        CHECK_FALSE(r.premise_holds);
        CHECK(r.k_kernel_count == 0);
        CHECK(r.sinks == std::vector<string>{ "f_v", "f_u", "f_w" });
        CHECK(r.narrative().find("premise margin -1") != string::npos);
        CHECK(r.narrative().find("no " + std::to_string(k) + "-kernel exists") != string::npos);
    }
    CHECK_THROWS_AS(verify_h_k(7), std::invalid_argument);
}

TEST_CASE("verify_h_k catches a broken construction")
{
    auto h = build_h_k(3);
    std::vector<Arc> arcs;
    for (auto & a : h.digraph.arcs())
        if (a != Arc{ h.index_of("w_2"), h.index_of("v_1") })
            arcs.push_back(a);
    h.digraph = Digraph{ h.digraph.size(), arcs };
    auto r = verify_h_k(h);
    CHECK_FALSE(r.passed);
    CHECK(r.long_cycle_count == 0);
}

TEST_CASE("every (k-1)-absorbent set of H_k contains the sinks")
{
    for (int k = 3 ; k <= 4 ; ++k) {
        auto h = build_h_k(k);
        int n = h.digraph.size();
        DistanceMatrix dist{ h.digraph };
        VertexSet sinks{ h.index_of("f_v"), h.index_of("f_u"), h.index_of("f_w") };
        for (unsigned mask = 0 ; mask < (1u << n) ; ++mask) {
            VertexSet s;
            for (int v = 0 ; v < n ; ++v)
                if (mask & (1u << v))
                    s.push_back(v);
            if (is_l_absorbent(dist, s, k - 1))
                for (Vertex f : sinks)
                    REQUIRE(std::ranges::find(s, f) != s.end());
        }
    }
}

TEST_CASE("H_3 DOT output")
{
    auto h = build_h_k(3);
    string expected =
        "digraph {\n"
        "  0 [label=\"v_1\"];\n"
        "  1 [label=\"v_2\"];\n"
        "  2 [label=\"u_1\"];\n"
        "  3 [label=\"u_2\"];\n"
        "  4 [label=\"w_1\"];\n"
        "  5 [label=\"w_2\"];\n"
        "  6 [label=\"e_v\"];\n"
        "  7 [label=\"f_v\"];\n"
        "  8 [label=\"e_u\"];\n"
        "  9 [label=\"f_u\"];\n"
        "  10 [label=\"e_w\"];\n"
        "  11 [label=\"f_w\"];\n"
        "  0 -> 1;\n"
        "  1 -> 0;\n"
        "  1 -> 2;\n"
        "  1 -> 6;\n"
        "  2 -> 3;\n"
        "  3 -> 2;\n"
        "  3 -> 4;\n"
        "  3 -> 8;\n"
        "  4 -> 5;\n"
        "  5 -> 0;\n"
        "  5 -> 4;\n"
        "  5 -> 10;\n"
        "  6 -> 7;\n"
        "  8 -> 9;\n"
        "  10 -> 11;\n"
        "}\n";
    CHECK(write_dot(h.digraph, h.labels) == expected);
}
