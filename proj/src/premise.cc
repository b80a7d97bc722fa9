/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/premise.hh>

#include <algorithm>
#include <set>
#include <stdexcept>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace kkernel
{
    auto threshold(int k, int length) -> int
    {
        if (k < 2)
            throw std::invalid_argument{ "threshold needs k >= 2, got " + to_string(k) };
        if (length < 1)
            throw std::invalid_argument{ "cycle length must be positive, got " + to_string(length) };
        int numerator = (k - 2) * length, denominator = k - 1;
        return (numerator + denominator - 1) / denominator + 1;
    }

    auto make_cycle_report(const Digraph & d, const Cycle & c, int k) -> CycleReport
    {
        CycleReport r;
        r.cycle = c;
        r.length = c.length();
        r.symmetric = cycle_symmetric_count(d, c);
        r.threshold = threshold(k, r.length);
        r.margin = r.symmetric - r.threshold;
        return r;
    }

    auto duchet_premise(const Digraph & d) -> bool
    {
        return is_acyclic(d.asymmetric_part());
    }

    auto conjecture_premise(const Digraph & d, int k) -> PremiseVerdict
    {
        threshold(k, 3);

        PremiseVerdict verdict;
        for_each_simple_cycle(d, std::nullopt, [&] (const Cycle & c) {
            if (c.length() < 3)
                return true;
            ++verdict.cycles_checked;
            auto report = make_cycle_report(d, c, k);
            if (! verdict.worst || report.margin < verdict.worst->margin)
                verdict.worst = std::move(report);
            return true;
        });
        verdict.holds = ! verdict.worst || verdict.worst->margin >= 0;
        return verdict;
    }

    auto conjecture_premise_holds(const Digraph & d, int k) -> bool
    {
        threshold(k, 3);

        // a cycle with no symmetric arc misses every threshold, which is at least 1
        if (! duchet_premise(d))
            return false;

        return for_each_simple_cycle(d, std::nullopt, [&] (const Cycle & c) {
            if (c.length() < 3)
                return true;
            int sym = 0;
            for (int i = 0, L = c.length() ; i < L ; ++i)
                if (d.has_arc(c.vertices[(i + 1) % L], c.vertices[i]))
                    ++sym;
            return sym >= threshold(k, c.length());
        });
    }

    auto closure_cycles_have_symmetric_arc(const Digraph & d, int k) -> PremiseVerdict
    {
        if (k < 2)
            throw std::invalid_argument{ "closure check needs k >= 2, got " + to_string(k) };

        auto h = closure(d, k - 1);
        PremiseVerdict verdict;
        for_each_simple_cycle(h, std::nullopt, [&] (const Cycle & c) {
            ++verdict.cycles_checked;
            if (cycle_symmetric_count(h, c) == 0) {
                verdict.holds = false;
                verdict.worst = make_cycle_report(h, c, 2);
                return false;
            }
            return true;
        });
        return verdict;
    }

    auto paths_internally_disjoint(const Cycle & b, const vector<Path> & paths) -> bool
    {
        std::set<Vertex> used(b.vertices.begin(), b.vertices.end());
        for (auto & p : paths)
            for (std::size_t i = 1 ; i + 1 < p.size() ; ++i)
                if (! used.insert(p[i]).second)
                    return false;
        return true;
    }

    auto check_disjoint_lemma_instance(const Digraph & d, int k, const Cycle & b, const vector<Path> & paths) -> bool
    {
        if (k < 2)
            throw std::invalid_argument{ "k must be at least 2" };
        auto h = closure(d, k - 1);
        if (! is_cycle_of(h, b.vertices))
            throw std::invalid_argument{ "not a cycle of the closure" };
        if (paths.size() != b.vertices.size())
            throw std::invalid_argument{ "need exactly one path per arc of the cycle" };

        int L = b.length();
        for (int i = 0 ; i < L ; ++i) {
            auto & p = paths[i];
            Vertex from = b.vertices[i], to = b.vertices[(i + 1) % L];
            int length = static_cast<int>(p.size()) - 1;
            if (length < 1 || length > k - 1 || p.front() != from || p.back() != to)
                throw std::invalid_argument{ "path " + to_string(i) + " does not realise arc (" + to_string(from) + "," + to_string(to) + ")" };
            std::set<Vertex> distinct(p.begin(), p.end());
            if (distinct.size() != p.size())
                throw std::invalid_argument{ "path " + to_string(i) + " repeats a vertex" };
            for (int j = 0 ; j < length ; ++j)
                if (p[j] < 0 || p[j] >= d.size() || p[j + 1] < 0 || p[j + 1] >= d.size() || ! d.has_arc(p[j], p[j + 1]))
                    throw std::invalid_argument{ "path " + to_string(i) + " uses a missing arc" };
        }

        if (! paths_internally_disjoint(b, paths))
            return true;

        for (int i = 0 ; i < L ; ++i)
            if (h.has_arc(b.vertices[(i + 1) % L], b.vertices[i]))
                return true;
        return false;
    }

    namespace
    {
        // all simple paths of length 1..max_length, grouped by (start, end)
        auto simple_paths(const Digraph & d, int max_length) -> vector<vector<vector<Path>>>
        {
            int n = d.size();
            vector<vector<vector<Path>>> result(n, vector<vector<Path>>(n));
            vector<bool> on_path(n, false);
            Path current;

            auto extend = [&] (auto & self, Vertex u) -> void {
                for (Vertex v : d.out_neighbours(u)) {
                    if (on_path[v])
                        continue;
                    current.push_back(v);
                    result[current.front()][v].push_back(current);
                    if (static_cast<int>(current.size()) - 1 < max_length) {
                        on_path[v] = true;
                        self(self, v);
                        on_path[v] = false;
                    }
                    current.pop_back();
                }
            };

            for (Vertex s = 0 ; s < n ; ++s) {
                current.assign(1, s);
                on_path[s] = true;
                extend(extend, s);
                on_path[s] = false;
            }
            return result;
        }
    }

    auto check_path_pair_lemmas(const Digraph & d) -> vector<Violation>
    {
        vector<Violation> violations;
        auto paths = simple_paths(d, 5);
        std::set<Arc> arcs;
        for (Vertex u = 0 ; u < d.size() ; ++u)
            for (Vertex v = 0 ; v < d.size() ; ++v) {
                if (u == v)
                    continue;
                for (auto & p : paths[u][v])
                    for (auto & q : paths[v][u]) {
                        int total = static_cast<int>(p.size() + q.size()) - 2;
                        if (total > 6)
                            continue;
                        arcs.clear();
                        for (std::size_t i = 0 ; i + 1 < p.size() ; ++i)
                            arcs.emplace(p[i], p[i + 1]);
                        for (std::size_t i = 0 ; i + 1 < q.size() ; ++i)
                            arcs.emplace(q[i], q[i + 1]);
                        auto asymmetric = std::count_if(arcs.begin(), arcs.end(),
                                [&] (const Arc & a) { return ! d.has_arc(a.second, a.first); });
                        int allowed = (total <= 5) ? 0 : 1;
                        if (asymmetric > allowed) {
                            Violation x;
                            x.rule = (total <= 5) ? "path-pair-5" : "path-pair-6";
                            x.witness = p;
                            x.witness.insert(x.witness.end(), q.begin() + 1, q.end());
                            x.detail = "|P|+|Q|=" + to_string(total) + " with " + to_string(asymmetric) + " asymmetric arcs";
                            violations.push_back(std::move(x));
                        }
                    }
            }
        return violations;
    }

    auto check_small_cycle_symmetry(const Digraph & d) -> vector<Violation>
    {
        vector<Violation> violations;
        for_each_simple_cycle(d, std::nullopt, [&] (const Cycle & c) {
            int sym = cycle_symmetric_count(d, c);
            int needed = std::min(c.length(), 5);
            if (sym < needed)
                violations.push_back(Violation{ c.length() <= 5 ? "short-cycle-symmetric" : "long-cycle-five-symmetric",
                        c.vertices, "length " + to_string(c.length()) + " has " + to_string(sym) + " symmetric arcs" });
            return true;
        });
        return violations;
    }
}
