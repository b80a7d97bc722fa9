/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/digraph.hh>

#include <algorithm>
#include <deque>
#include <string>

using std::string;
using std::to_string;
using std::vector;

namespace kkernel
{
    Digraph::Digraph(int n, std::span<const Arc> arcs) :
        _n(n)
    {
        if (n < 0)
            throw DigraphError{ "negative vertex count " + to_string(n) };

        _arcs.assign(arcs.begin(), arcs.end());
        for (auto & [u, v] : _arcs) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw DigraphError{ "arc (" + to_string(u) + "," + to_string(v) + ") has an endpoint outside 0.." + to_string(n - 1) };
            if (u == v)
                throw DigraphError{ "loop at vertex " + to_string(u) };
        }
        std::sort(_arcs.begin(), _arcs.end());
        _arcs.erase(std::unique(_arcs.begin(), _arcs.end()), _arcs.end());

        _out.resize(n);
        _in.resize(n);
        _matrix.assign(static_cast<std::size_t>(n) * n, 0);
        for (auto & [u, v] : _arcs) {
            _out[u].push_back(v);
            _in[v].push_back(u);
            _matrix[static_cast<std::size_t>(u) * n + v] = 1;
        }
        for (auto & l : _in)
            std::sort(l.begin(), l.end());
    }

    Digraph::Digraph(int n, std::initializer_list<Arc> arcs) :
        Digraph(n, std::span<const Arc>{ arcs.begin(), arcs.size() })
    {
    }

    auto Digraph::reversed() const -> Digraph
    {
        vector<Arc> r;
        r.reserve(_arcs.size());
        for (auto & [u, v] : _arcs)
            r.emplace_back(v, u);
        return Digraph{ _n, r };
    }

    auto Digraph::induced(std::span<const Vertex> subset) const -> Digraph
    {
        vector<int> position(_n, -1);
        for (std::size_t i = 0 ; i < subset.size() ; ++i)
            position.at(subset[i]) = static_cast<int>(i);

        vector<Arc> r;
        for (auto & [u, v] : _arcs)
            if (position[u] != -1 && position[v] != -1)
                r.emplace_back(position[u], position[v]);
        return Digraph{ static_cast<int>(subset.size()), r };
    }

    auto Digraph::relabelled(std::span<const Vertex> perm) const -> Digraph
    {
        if (static_cast<int>(perm.size()) != _n)
            throw DigraphError{ "permutation has the wrong length" };
        vector<Arc> r;
        r.reserve(_arcs.size());
        for (auto & [u, v] : _arcs)
            r.emplace_back(perm[u], perm[v]);
        return Digraph{ _n, r };
    }

    auto Digraph::asymmetric_part() const -> Digraph
    {
        vector<Arc> r;
        for (auto & [u, v] : _arcs)
            if (! has_arc(v, u))
                r.emplace_back(u, v);
        return Digraph{ _n, r };
    }

    auto classify_arcs(const Digraph & d) -> ArcClass
    {
        ArcClass result;
        for (auto & [u, v] : d.arcs()) {
            if (d.has_arc(v, u)) {
                if (u < v)
                    result.symmetric.emplace_back(u, v);
            }
            else
                result.asymmetric.emplace_back(u, v);
        }
        return result;
    }

    DistanceMatrix::DistanceMatrix(const Digraph & d) :
        _n(d.size()),
        _d(static_cast<std::size_t>(d.size()) * d.size(), infinite_distance)
    {
        std::deque<Vertex> queue;
        for (Vertex s = 0 ; s < _n ; ++s) {
            int * row = &_d[static_cast<std::size_t>(s) * _n];
            row[s] = 0;
            queue.assign(1, s);
            while (! queue.empty()) {
                Vertex u = queue.front();
                queue.pop_front();
                for (Vertex v : d.out_neighbours(u))
                    if (row[v] == infinite_distance) {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
            }
        }
    }

    auto closure(const Digraph & d, const DistanceMatrix & dist, int m) -> Digraph
    {
        if (m < 1)
            throw std::invalid_argument{ "closure order must be at least 1, got " + to_string(m) };
        vector<Arc> r;
        for (Vertex u = 0 ; u < d.size() ; ++u)
            for (Vertex v = 0 ; v < d.size() ; ++v)
                if (u != v && dist(u, v) <= m)
                    r.emplace_back(u, v);
        return Digraph{ d.size(), r };
    }

    auto closure(const Digraph & d, int m) -> Digraph
    {
        if (m < 1)
            throw std::invalid_argument{ "closure order must be at least 1, got " + to_string(m) };
        if (m == 1)
            return d;
        return closure(d, DistanceMatrix{ d }, m);
    }

    auto directed_path(int n) -> Digraph
    {
        vector<Arc> r;
        for (Vertex v = 0 ; v + 1 < n ; ++v)
            r.emplace_back(v, v + 1);
        return Digraph{ n, r };
    }

    auto directed_cycle(int n) -> Digraph
    {
        vector<Arc> r;
        for (Vertex v = 0 ; v < n ; ++v)
            r.emplace_back(v, (v + 1) % n);
        return Digraph{ n, r };
    }

    auto complete_symmetric(int n) -> Digraph
    {
        vector<Arc> r;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v)
                if (u != v)
                    r.emplace_back(u, v);
        return Digraph{ n, r };
    }
}
