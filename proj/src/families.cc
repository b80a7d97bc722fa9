/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/families.hh>

#include <kkernel/cycles.hh>
#include <kkernel/kernel.hh>
#include <kkernel/premise.hh>

#include <algorithm>
#include <sstream>
#include <stdexcept>

using std::string;
using std::to_string;
using std::vector;

namespace kkernel
{
    auto FamilyInstance::index_of(const string & label) const -> Vertex
    {
        auto i = std::find(labels.begin(), labels.end(), label);
        if (i == labels.end())
            throw std::out_of_range{ "no vertex labelled " + label };
        return static_cast<Vertex>(i - labels.begin());
    }

    auto build_h_k(int k) -> FamilyInstance
    {
        if (k < 3)
            throw std::invalid_argument{ "H_k needs k >= 3, got " + to_string(k) };

        int chain = k - 1;
        const string names[3] = { "v", "u", "w" };
        auto chain_vertex = [&] (int s, int i) { return s * chain + (i - 1); };  // i is 1-based
        auto e_vertex = [&] (int s) { return 3 * chain + 2 * s; };
        auto f_vertex = [&] (int s) { return 3 * chain + 2 * s + 1; };

        FamilyInstance result;
        result.k = k;
        for (int s = 0 ; s < 3 ; ++s)
            for (int i = 1 ; i <= chain ; ++i)
                result.labels.push_back(names[s] + "_" + to_string(i));
        for (int s = 0 ; s < 3 ; ++s) {
            result.labels.push_back("e_" + names[s]);
            result.labels.push_back("f_" + names[s]);
        }

        vector<Arc> arcs;
        for (int s = 0 ; s < 3 ; ++s) {
            for (int i = 1 ; i < chain ; ++i) {
                arcs.emplace_back(chain_vertex(s, i), chain_vertex(s, i + 1));
                arcs.emplace_back(chain_vertex(s, i + 1), chain_vertex(s, i));
            }
            arcs.emplace_back(chain_vertex(s, chain), chain_vertex((s + 1) % 3, 1));
            arcs.emplace_back(chain_vertex(s, chain), e_vertex(s));
            arcs.emplace_back(e_vertex(s), f_vertex(s));
        }
        result.digraph = Digraph{ 3 * chain + 6, arcs };
        return result;
    }

    auto FamilyReport::narrative() const -> string
    {
        std::ostringstream out;
        out << "H_" << k << ": " << vertex_count << " vertices; ";
        if (long_cycle_count == 1)
            out << "its only cycle longer than two has length " << long_cycle_length
                << " and " << long_cycle_symmetric << " symmetric arcs; ";
        else
            out << long_cycle_count << " cycles longer than two; ";
        if (premise_margin)
            out << "premise margin " << *premise_margin << " (" << (premise_holds ? "premise holds" : "premise fails") << "); ";
        out << (k_kernel_count == 0 ? "no " + to_string(k) + "-kernel exists" : to_string(k_kernel_count) + " " + to_string(k) + "-kernels exist");
        if (passed && premise_margin && *premise_margin == -1 && k_kernel_count == 0)
            out << ". The premise misses by exactly one symmetric arc and the conclusion fails, so the +1 cannot be dropped.";
        else
            out << ".";
        return out.str();
    }

    auto verify_h_k(const FamilyInstance & instance, int max_k) -> FamilyReport
    {
        int k = instance.k;
        if (k < 3 || k > max_k)
            throw std::invalid_argument{ "H_k verification limited to 3 <= k <= " + to_string(max_k) + ", got " + to_string(k) };

        const Digraph & d = instance.digraph;
        FamilyReport r;
        r.k = k;
        r.vertex_count = d.size();

        auto expect = [&] (bool ok, const string & what) {
            if (! ok)
                r.mismatches.push_back(what);
        };

        expect(r.vertex_count == 3 * (k - 1) + 6,
                "vertex count " + to_string(r.vertex_count) + ", expected " + to_string(3 * (k - 1) + 6));

        vector<Cycle> long_cycles;
        for_each_simple_cycle(d, std::nullopt, [&] (const Cycle & c) {
            if (c.length() > 2)
                long_cycles.push_back(c);
            return true;
        });
        r.long_cycle_count = static_cast<int>(long_cycles.size());
        expect(r.long_cycle_count == 1, to_string(r.long_cycle_count) + " cycles of length > 2, expected exactly 1");
        if (! long_cycles.empty()) {
            r.long_cycle_length = long_cycles.front().length();
            r.long_cycle_symmetric = cycle_symmetric_count(d, long_cycles.front());
            expect(r.long_cycle_length == 3 * (k - 1),
                    "long cycle length " + to_string(r.long_cycle_length) + ", expected " + to_string(3 * (k - 1)));
            expect(r.long_cycle_symmetric == 3 * (k - 2),
                    "long cycle has " + to_string(r.long_cycle_symmetric) + " symmetric arcs, expected " + to_string(3 * (k - 2)));
            // (k-2)/(k-1) * 3(k-1) in integers
            expect(r.long_cycle_symmetric * (k - 1) == (k - 2) * r.long_cycle_length,
                    "symmetric arcs are not exactly (k-2)/(k-1) of the cycle length");
        }

        auto verdict = conjecture_premise(d, k);
        r.premise_holds = verdict.holds;
        if (verdict.worst)
            r.premise_margin = verdict.worst->margin;
        expect(! verdict.holds, "conjecture premise unexpectedly holds");
        expect(r.premise_margin == -1,
                "premise margin " + (r.premise_margin ? to_string(*r.premise_margin) : string{ "none" }) + ", expected -1");

        r.k_kernel_count = all_k_kernels(d, k, std::max(default_oracle_bound, d.size())).size();
        expect(r.k_kernel_count == 0, to_string(r.k_kernel_count) + " " + to_string(k) + "-kernels found, expected none");

        for (Vertex v = 0 ; v < d.size() ; ++v)
            if (d.out_neighbours(v).empty())
                r.sinks.push_back(v < static_cast<int>(instance.labels.size()) ? instance.labels[v] : to_string(v));
        expect(r.sinks == vector<string>{ "f_v", "f_u", "f_w" }, "sinks are not exactly f_v, f_u, f_w");

        try {
            DistanceMatrix dist{ d };
            const char * pairs[3][2] = { { "v_1", "u_1" }, { "u_1", "w_1" }, { "w_1", "v_1" } };
            for (auto & [from, to] : pairs) {
                int got = dist(instance.index_of(from), instance.index_of(to));
                expect(got == k - 1, string{ "d(" } + from + "," + to + ") = "
                        + (got == infinite_distance ? string{ "inf" } : to_string(got)) + ", expected " + to_string(k - 1));
            }
        }
        catch (const std::out_of_range & e) {
            r.mismatches.push_back(e.what());
        }

        r.passed = r.mismatches.empty();
        return r;
    }
}
