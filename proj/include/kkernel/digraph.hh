/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KKERNEL_GUARD_DIGRAPH_HH
#define KKERNEL_GUARD_DIGRAPH_HH 1

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kkernel
{
    using Vertex = int;
    using Arc = std::pair<Vertex, Vertex>;

    class DigraphError : public std::invalid_argument
    {
        public:
            explicit DigraphError(const std::string & what) :
                std::invalid_argument(what)
            {
            }
    };

    /**
     * A finite loop-free digraph on vertices 0..n-1 with at most one arc per
     * ordered pair. Immutable once built.
     */
    class Digraph
    {
        private:
            int _n = 0;
            std::vector<Arc> _arcs;                   // sorted, unique
            std::vector<std::vector<Vertex>> _out, _in;
            std::vector<std::uint8_t> _matrix;        // row-major n x n

        public:
            Digraph() = default;

            /// Throws DigraphError on a loop or an out-of-range endpoint. Duplicate arcs collapse.
            Digraph(int n, std::span<const Arc> arcs);
            Digraph(int n, std::initializer_list<Arc> arcs);

            auto size() const -> int { return _n; }
            auto arc_count() const -> int { return static_cast<int>(_arcs.size()); }
            auto arcs() const -> const std::vector<Arc> & { return _arcs; }
            auto out_neighbours(Vertex v) const -> const std::vector<Vertex> & { return _out[v]; }
            auto in_neighbours(Vertex v) const -> const std::vector<Vertex> & { return _in[v]; }

            auto has_arc(Vertex u, Vertex v) const -> bool
            {
                return _matrix[static_cast<std::size_t>(u) * _n + v];
            }

            auto is_symmetric_arc(Vertex u, Vertex v) const -> bool
            {
                return has_arc(u, v) && has_arc(v, u);
            }

            /// The same vertex set with every arc reversed.
            auto reversed() const -> Digraph;

            /// The subdigraph induced by the given vertices, relabelled 0..|subset|-1 in the given order.
            auto induced(std::span<const Vertex> subset) const -> Digraph;

            /// Vertex v of the result is perm[v] of this digraph's labelling, i.e. arc (u,v) maps to (perm[u],perm[v]).
            auto relabelled(std::span<const Vertex> perm) const -> Digraph;

            /// Only the arcs whose reverse is absent.
            auto asymmetric_part() const -> Digraph;

            auto operator== (const Digraph & other) const -> bool
            {
                return _n == other._n && _arcs == other._arcs;
            }
    };

    struct ArcClass
    {
        std::vector<Arc> symmetric;   // unordered pairs stored as (u,v) with u < v
        std::vector<Arc> asymmetric;  // ordered, sorted
    };

    auto classify_arcs(const Digraph & d) -> ArcClass;

    inline constexpr int infinite_distance = std::numeric_limits<int>::max();

    /// Saturating addition for distances.
    inline auto add_distance(int a, int b) -> int
    {
        if (a == infinite_distance || b == infinite_distance)
            return infinite_distance;
        return a + b;
    }

    class DistanceMatrix
    {
        private:
            int _n = 0;
            std::vector<int> _d;

        public:
            DistanceMatrix() = default;
            explicit DistanceMatrix(const Digraph & d);

            auto size() const -> int { return _n; }

            /// Length of a shortest directed u-v path, 0 when u == v, infinite_distance when unreachable.
            auto operator() (Vertex u, Vertex v) const -> int
            {
                return _d[static_cast<std::size_t>(u) * _n + v];
            }
    };

    inline auto distances(const Digraph & d) -> DistanceMatrix
    {
        return DistanceMatrix{ d };
    }

    /// Arc (u,v) for u != v whenever 1 <= d(u,v) <= m. Throws std::invalid_argument for m < 1.
    auto closure(const Digraph & d, int m) -> Digraph;
    auto closure(const Digraph & d, const DistanceMatrix & dist, int m) -> Digraph;

    // Standard small digraphs, mostly for tests and examples.
    auto directed_path(int n) -> Digraph;
    auto directed_cycle(int n) -> Digraph;
    auto complete_symmetric(int n) -> Digraph;
}

#endif
