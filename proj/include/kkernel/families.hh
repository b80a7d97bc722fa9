/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KKERNEL_GUARD_FAMILIES_HH
#define KKERNEL_GUARD_FAMILIES_HH 1

#include <kkernel/digraph.hh>

#include <optional>
#include <string>
#include <vector>

namespace kkernel
{
    /**
     * The sharpness family H_k (k >= 3): three chains v, u, w of k-1
     * vertices with symmetric consecutive arcs, connectors
     * v_{k-1} -> u_1 -> ... closing a single long cycle, and a tail
     * s_{k-1} -> e_s -> f_s hanging off each chain.
     *
     * Indices: v_1..v_{k-1} are 0..k-2, then the u chain, then the w chain,
     * then e_v, f_v, e_u, f_u, e_w, f_w.
     */
    struct FamilyInstance
    {
        int k = 3;
        Digraph digraph;
        std::vector<std::string> labels;

        /// Throws std::out_of_range for an unknown label.
        auto index_of(const std::string & label) const -> Vertex;
    };

    auto build_h_k(int k) -> FamilyInstance;

    struct FamilyReport
    {
        int k = 0;
        bool passed = false;
        int vertex_count = 0;
        int long_cycle_count = 0;          // simple cycles of length > 2
        int long_cycle_length = 0;
        int long_cycle_symmetric = 0;
        std::optional<int> premise_margin;
        bool premise_holds = true;
        std::size_t k_kernel_count = 0;
        std::vector<std::string> sinks;
        std::vector<std::string> mismatches;

        /// One-paragraph human summary, including the premise margin and the kernel verdict.
        auto narrative() const -> std::string;
    };

    inline constexpr int default_family_check_limit = 6;

    /**
     * Checks the instance against everything claimed for H_k: vertex count,
     * one long cycle of length 3(k-1) carrying 3(k-2) symmetric arcs,
     * conjecture premise failing by exactly one, no k-kernel (exhaustive scan),
     * sinks {f_v, f_u, f_w}, and d(v_1,u_1) = d(u_1,w_1) = d(w_1,v_1) = k-1.
     * Throws std::invalid_argument above max_k, since the kernel scan is exponential.
     */
    auto verify_h_k(const FamilyInstance & instance, int max_k = default_family_check_limit) -> FamilyReport;

    inline auto verify_h_k(int k, int max_k = default_family_check_limit) -> FamilyReport
    {
        return verify_h_k(build_h_k(k), max_k);
    }
}

#endif
