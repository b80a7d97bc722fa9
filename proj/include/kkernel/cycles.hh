/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KKERNEL_GUARD_CYCLES_HH
#define KKERNEL_GUARD_CYCLES_HH 1

#include <kkernel/digraph.hh>

#include <functional>
#include <optional>
#include <vector>

namespace kkernel
{
    /**
     * A simple directed cycle (x_0, ..., x_{L-1}), closing arc (x_{L-1}, x_0).
     * Stored in canonical rotation: x_0 is the smallest vertex.
     */
    struct Cycle
    {
        std::vector<Vertex> vertices;

        auto length() const -> int { return static_cast<int>(vertices.size()); }

        auto operator<=> (const Cycle &) const = default;
    };

    /// Rotates so the minimum vertex comes first.
    auto canonical_rotation(std::vector<Vertex> vertices) -> Cycle;

    /// True iff the vertices are distinct, there are at least two, and every consecutive (cyclic) arc is in d.
    auto is_cycle_of(const Digraph & d, const std::vector<Vertex> & vertices) -> bool;

    /// Return false from the visitor to stop early.
    using CycleVisitor = std::function<bool (const Cycle &)>;

    /**
     * Calls visit once for every simple directed cycle of length at least two
     * (and at most length_cap, when given), each in canonical rotation.
     * Returns false iff the visitor stopped the enumeration.
     *
     * Cycles are produced by a depth-first search rooted at each vertex s
     * that only passes through vertices larger than s, so each cycle is
     * found exactly once, from its minimum vertex.
     */
    auto for_each_simple_cycle(const Digraph & d, std::optional<int> length_cap, const CycleVisitor & visit) -> bool;

    auto enumerate_simple_cycles(const Digraph & d, std::optional<int> length_cap = std::nullopt) -> std::vector<Cycle>;

    /// Number of arcs of the cycle whose reverse is also an arc of d. Throws std::invalid_argument if c is not a cycle of d.
    auto cycle_symmetric_count(const Digraph & d, const Cycle & c) -> int;

    /// Some simple cycle of d, or nothing if d is acyclic.
    auto find_any_cycle(const Digraph & d) -> std::optional<Cycle>;

    inline auto is_acyclic(const Digraph & d) -> bool
    {
        return ! find_any_cycle(d).has_value();
    }
}

#endif
