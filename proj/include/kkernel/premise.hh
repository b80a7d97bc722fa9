/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KKERNEL_GUARD_PREMISE_HH
#define KKERNEL_GUARD_PREMISE_HH 1

#include <kkernel/cycles.hh>
#include <kkernel/digraph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kkernel
{
    /**
     * Smallest integer s with s >= (k-2)L/(k-1) + 1, i.e. ceil((k-2)L/(k-1)) + 1.
     * For k = 2 this is 1. Exact integer arithmetic.
     */
    auto threshold(int k, int length) -> int;

    struct CycleReport
    {
        Cycle cycle;
        int length = 0;
        int symmetric = 0;
        int threshold = 0;
        int margin = 0;
    };

    auto make_cycle_report(const Digraph & d, const Cycle & c, int k) -> CycleReport;

    struct PremiseVerdict
    {
        bool holds = true;
        std::optional<CycleReport> worst;
        std::uint64_t cycles_checked = 0;
    };

    /// Every directed cycle has a symmetric arc, decided as acyclicity of the asymmetric part.
    auto duchet_premise(const Digraph & d) -> bool;

    /**
     * Checks every simple cycle of length >= 3 against threshold(k, L) and
     * reports the one with the smallest margin. Digons are exempt.
     */
    auto conjecture_premise(const Digraph & d, int k) -> PremiseVerdict;

    /// Same decision as conjecture_premise(d, k).holds, stopping at the first violating cycle.
    auto conjecture_premise_holds(const Digraph & d, int k) -> bool;

    /**
     * Checks that every simple cycle of closure(d, k-1) has a symmetric arc
     * of the closure. `worst` holds a violating cycle when there is one.
     */
    auto closure_cycles_have_symmetric_arc(const Digraph & d, int k) -> PremiseVerdict;

    /// A path of d realising the closure arc (path.front(), path.back()).
    using Path = std::vector<Vertex>;

    /**
     * One instance of the internally-disjoint configuration: b is a cycle of
     * closure(d, k-1) and paths[i] is a path of d of length at most k-1 from
     * b[i] to b[i+1]. Returns the truth of "if the paths are mutually
     * internally disjoint, then b has a symmetric arc in the closure".
     * Interior vertices must avoid the cycle and each other to count as
     * disjoint. Throws std::invalid_argument if a path does not realise its arc.
     */
    auto check_disjoint_lemma_instance(const Digraph & d, int k, const Cycle & b, const std::vector<Path> & paths) -> bool;

    /// The paths must be mutually internally disjoint as above.
    auto paths_internally_disjoint(const Cycle & b, const std::vector<Path> & paths) -> bool;

    struct Violation
    {
        std::string rule;
        std::vector<Vertex> witness;   // a cycle, or a u-v path followed by a v-u path
        std::string detail;
    };

    /**
     * For every pair u != v, every u-v path P and v-u path Q with
     * |P| + |Q| <= 6: if the sum is at most 5 all arcs of P and Q must be
     * symmetric; if it is 6 at most one may be asymmetric.
     */
    auto check_path_pair_lemmas(const Digraph & d) -> std::vector<Violation>;

    /// Cycles of length <= 5 fully symmetric, longer cycles with >= 5 symmetric arcs.
    auto check_small_cycle_symmetry(const Digraph & d) -> std::vector<Violation>;
}

#endif
