/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/cycles.hh>

#include <algorithm>
#include <stdexcept>

using std::optional;
using std::vector;

namespace kkernel
{
    auto canonical_rotation(vector<Vertex> vertices) -> Cycle
    {
        auto smallest = std::min_element(vertices.begin(), vertices.end());
        std::rotate(vertices.begin(), smallest, vertices.end());
        return Cycle{ std::move(vertices) };
    }

    auto is_cycle_of(const Digraph & d, const vector<Vertex> & vertices) -> bool
    {
        if (vertices.size() < 2)
            return false;
        vector<bool> seen(d.size(), false);
        for (Vertex v : vertices) {
            if (v < 0 || v >= d.size() || seen[v])
                return false;
            seen[v] = true;
        }
        for (std::size_t i = 0 ; i < vertices.size() ; ++i)
            if (! d.has_arc(vertices[i], vertices[(i + 1) % vertices.size()]))
                return false;
        return true;
    }

    namespace
    {
        struct CycleSearch
        {
            const Digraph & d;
            int cap;
            const CycleVisitor & visit;
            Vertex root = 0;
            vector<bool> on_path;
            Cycle current;

            auto extend(Vertex u) -> bool
            {
                for (Vertex v : d.out_neighbours(u)) {
                    if (v == root) {
                        if (current.length() >= 2 && ! visit(current))
                            return false;
                    }
                    else if (v > root && ! on_path[v] && current.length() < cap) {
                        on_path[v] = true;
                        current.vertices.push_back(v);
                        bool keep_going = extend(v);
                        current.vertices.pop_back();
                        on_path[v] = false;
                        if (! keep_going)
                            return false;
                    }
                }
                return true;
            }
        };
    }

    auto for_each_simple_cycle(const Digraph & d, optional<int> length_cap, const CycleVisitor & visit) -> bool
    {
        CycleSearch search{ d, length_cap.value_or(d.size()), visit, 0, vector<bool>(d.size(), false), {} };
        for (Vertex s = 0 ; s < d.size() ; ++s) {
            search.root = s;
            search.current.vertices.assign(1, s);
            search.on_path[s] = true;
            bool keep_going = search.extend(s);
            search.on_path[s] = false;
            if (! keep_going)
                return false;
        }
        return true;
    }

    auto enumerate_simple_cycles(const Digraph & d, optional<int> length_cap) -> vector<Cycle>
    {
        vector<Cycle> result;
        for_each_simple_cycle(d, length_cap, [&] (const Cycle & c) {
            result.push_back(c);
            return true;
        });
        return result;
    }

    auto cycle_symmetric_count(const Digraph & d, const Cycle & c) -> int
    {
        if (! is_cycle_of(d, c.vertices))
            throw std::invalid_argument{ "not a cycle of the digraph" };
        int count = 0;
        for (std::size_t i = 0 ; i < c.vertices.size() ; ++i)
            if (d.has_arc(c.vertices[(i + 1) % c.vertices.size()], c.vertices[i]))
                ++count;
        return count;
    }

    auto find_any_cycle(const Digraph & d) -> optional<Cycle>
    {
        // iterative three-colour DFS; a back arc closes a cycle along the stack
        enum class Colour : std::uint8_t { White, Grey, Black };
        vector<Colour> colour(d.size(), Colour::White);
        vector<std::pair<Vertex, std::size_t>> stack;

        for (Vertex s = 0 ; s < d.size() ; ++s) {
            if (colour[s] != Colour::White)
                continue;
            colour[s] = Colour::Grey;
            stack.emplace_back(s, 0);
            while (! stack.empty()) {
                auto & [u, next] = stack.back();
                if (next == d.out_neighbours(u).size()) {
                    colour[u] = Colour::Black;
                    stack.pop_back();
                    continue;
                }
                Vertex v = d.out_neighbours(u)[next++];
                if (colour[v] == Colour::Grey) {
                    vector<Vertex> cycle;
                    auto from = std::find_if(stack.begin(), stack.end(), [&] (const auto & e) { return e.first == v; });
                    for (auto i = from ; i != stack.end() ; ++i)
                        cycle.push_back(i->first);
                    return canonical_rotation(std::move(cycle));
                }
                if (colour[v] == Colour::White) {
                    colour[v] = Colour::Grey;
                    stack.emplace_back(v, 0);
                }
            }
        }
        return std::nullopt;
    }
}
