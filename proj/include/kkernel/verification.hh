/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KKERNEL_GUARD_VERIFICATION_HH
#define KKERNEL_GUARD_VERIFICATION_HH 1

#include <kkernel/cycles.hh>
#include <kkernel/digraph.hh>
#include <kkernel/families.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace kkernel
{
    struct CheckResult
    {
        int id = 0;
        std::string name;
        bool passed = false;
        std::string detail;
        double seconds = 0.0;
    };

    /// The pieces a mutation test may swap out.
    struct VerificationHooks
    {
        std::function<int (int, int)> threshold;
        std::function<FamilyInstance (int)> build_family;
    };

    auto default_hooks() -> VerificationHooks;

    struct VerificationOptions
    {
        unsigned shards = 1;
        int sweep_max_n = 5;
        std::uint64_t disjoint_trials = 100000;
        std::uint64_t seed = 20151;
        VerificationHooks hooks = default_hooks();
    };

    /// Result of running a predicate over every labelled digraph on 1..max_n vertices.
    struct SweepResult
    {
        std::uint64_t examined = 0;
        std::uint64_t relevant = 0;
        std::uint64_t failures = 0;
        std::optional<std::string> first_failure;   // smallest (n, cursor) failing digraph
    };

    struct SweepOutcome
    {
        bool relevant = false;
        bool failed = false;
        std::string detail;
    };

    auto sweep_labelled_digraphs(int min_n, int max_n, unsigned shards,
            const std::function<SweepOutcome (const Digraph &)> & check) -> SweepResult;

    // One function per acceptance item, numbered as in the project README.
    auto check_family_exactness(const VerificationOptions &) -> CheckResult;          // 1
    auto check_closure_reduction(const VerificationOptions &) -> CheckResult;         // 2
    auto check_duchet(const VerificationOptions &) -> CheckResult;                    // 3
    auto check_three_kernels(const VerificationOptions &) -> CheckResult;             // 4
    auto check_four_kernels(const VerificationOptions &) -> CheckResult;              // 5
    auto check_short_cycles_symmetric(const VerificationOptions &) -> CheckResult;    // 6
    auto check_path_pairs(const VerificationOptions &) -> CheckResult;                // 7
    auto check_disjoint_paths(const VerificationOptions &) -> CheckResult;            // 8
    auto check_harness_determinism(const VerificationOptions &) -> CheckResult;       // 9
    auto check_sharpness_narrative(const VerificationOptions &) -> CheckResult;       // 10

    auto run_verification(const VerificationOptions & options) -> std::vector<CheckResult>;

    /**
     * A random instance of the internally-disjoint configuration: the host
     * cycle of d, rotated at random, is cut into consecutive segments of
     * length 1..k-1 (at least two of them). The segment endpoints form a
     * cycle of the (k-1)-closure and the segments realise its arcs.
     */
    struct DisjointInstance
    {
        Cycle closure_cycle;
        std::vector<std::vector<Vertex>> paths;
    };

    auto random_disjoint_instance(const Cycle & host, int k, std::mt19937_64 & rng) -> DisjointInstance;
}

#endif
