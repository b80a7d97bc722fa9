/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/premise.hh>
#include <kkernel/verification.hh>

#include <doctest.h>

using namespace kkernel;

TEST_CASE("an off-by-one threshold fails the short-cycle item")
{
    VerificationOptions o;
    o.sweep_max_n = 4;
    o.hooks.threshold = [] (int k, int length) { return threshold(k, length) + 1; };
    auto r = check_short_cycles_symmetric(o);
    CHECK_FALSE(r.passed);
    CHECK(r.detail.find("threshold(4,3) = 4") != std::string::npos);

    o.hooks = default_hooks();
    CHECK(check_short_cycles_symmetric(o).passed);
}

TEST_CASE("a missing connector arc fails the family items")
{
    VerificationOptions o;
    o.hooks.build_family = [] (int k) {
        auto h = build_h_k(k);
        Arc connector{ h.index_of("u_" + std::to_string(k - 1)), h.index_of("w_1") };
        std::vector<Arc> arcs;
        for (auto & a : h.digraph.arcs())
            if (a != connector)
                arcs.push_back(a);
        h.digraph = Digraph{ h.digraph.size(), arcs };
        return h;
    };
    CHECK_FALSE(check_family_exactness(o).passed);
    CHECK_FALSE(check_sharpness_narrative(o).passed);
}

TEST_CASE("sweep reports the first failure deterministically")
{
    auto fail_on_arcs = [] (const Digraph & d) {
        return SweepOutcome{ true, d.arc_count() >= 5, "too many arcs" };
    };
    auto one = sweep_labelled_digraphs(3, 3, 1, fail_on_arcs);
    auto many = sweep_labelled_digraphs(3, 3, 7, fail_on_arcs);
    CHECK(one.examined == 64);
    CHECK(one.failures == 6 + 1);
    CHECK(one.first_failure == many.first_failure);
    CHECK(one.failures == many.failures);
}

TEST_CASE("random disjoint instances realise closure cycles")
{
    std::mt19937_64 rng{ 5 };
    Cycle host{ { 0, 1, 2, 3, 4, 5, 6 } };
    for (int t = 0 ; t < 200 ; ++t)
        for (int k = 2 ; k <= 5 ; ++k) {
            auto instance = random_disjoint_instance(host, k, rng);
            CHECK(instance.closure_cycle.length() >= 2);
            CHECK(instance.paths.size() == instance.closure_cycle.vertices.size());
            CHECK(paths_internally_disjoint(instance.closure_cycle, instance.paths));
            std::size_t arcs = 0;
            for (auto & p : instance.paths) {
                CHECK(p.size() >= 2);
                CHECK(static_cast<int>(p.size()) - 1 <= k - 1);
                arcs += p.size() - 1;
            }
            CHECK(arcs == 7);
        }
}
