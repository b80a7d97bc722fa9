/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/kernel.hh>

#include <algorithm>
#include <cstdint>
#include <string>

using std::optional;
using std::span;
using std::to_string;
using std::vector;

namespace kkernel
{
    namespace
    {
        auto check_parameters(int k, int l) -> void
        {
            if (k < 2)
                throw std::invalid_argument{ "independence parameter must be at least 2, got " + to_string(k) };
            if (l < 1)
                throw std::invalid_argument{ "absorbency parameter must be at least 1, got " + to_string(l) };
        }

        auto check_oracle_bound(const Digraph & d, int oracle_bound) -> void
        {
            if (d.size() > oracle_bound || d.size() > 62)
                throw OracleLimitError{ "exhaustive oracle refuses " + to_string(d.size()) + " vertices (bound "
                    + to_string(std::min(oracle_bound, 62)) + ")" };
        }

        auto membership(int n, span<const Vertex> s) -> vector<bool>
        {
            vector<bool> in(n, false);
            for (Vertex v : s)
                in.at(v) = true;
            return in;
        }

        struct Backtracker
        {
            const Digraph & independence;
            const Digraph & absorption;
            int n;
            vector<int> blocked;     // members adjacent to v in the independence digraph
            vector<int> absorbers;   // members that v has an absorption arc into
            vector<bool> in;

            auto block(Vertex v, int delta) -> void
            {
                for (Vertex w : independence.out_neighbours(v))
                    blocked[w] += delta;
                for (Vertex w : independence.in_neighbours(v))
                    blocked[w] += delta;
                for (Vertex w : absorption.in_neighbours(v))
                    absorbers[w] += delta;
            }

            // can excluded vertex u (< next) still be absorbed, given vertices from next onwards are undecided?
            auto can_be_absorbed(Vertex u, Vertex next) const -> bool
            {
                if (absorbers[u] > 0)
                    return true;
                for (Vertex w : absorption.out_neighbours(u))
                    if (w >= next && blocked[w] == 0)
                        return true;
                return false;
            }

            auto excluded_still_absorbable(Vertex next) const -> bool
            {
                for (Vertex u = 0 ; u < next ; ++u)
                    if (! in[u] && ! can_be_absorbed(u, next))
                        return false;
                return true;
            }

            auto search(Vertex v) -> bool
            {
                if (v == n)
                    return true;

                if (blocked[v] == 0) {
                    in[v] = true;
                    block(v, 1);
                    if (excluded_still_absorbable(v + 1) && search(v + 1))
                        return true;
                    block(v, -1);
                    in[v] = false;
                }

                if (can_be_absorbed(v, v + 1) && search(v + 1))
                    return true;

                return false;
            }
        };
    }

    auto is_k_independent(const DistanceMatrix & dist, span<const Vertex> s, int k) -> bool
    {
        for (std::size_t i = 0 ; i < s.size() ; ++i)
            for (std::size_t j = 0 ; j < s.size() ; ++j)
                if (s[i] != s[j] && dist(s[i], s[j]) < k)
                    return false;
        return true;
    }

    auto is_k_independent(const Digraph & d, span<const Vertex> s, int k) -> bool
    {
        return is_k_independent(DistanceMatrix{ d }, s, k);
    }

    auto is_l_absorbent(const DistanceMatrix & dist, span<const Vertex> s, int l) -> bool
    {
        auto in = membership(dist.size(), s);
        for (Vertex u = 0 ; u < dist.size() ; ++u)
            if (! in[u] && std::none_of(s.begin(), s.end(), [&] (Vertex v) { return dist(u, v) <= l; }))
                return false;
        return true;
    }

    auto is_l_absorbent(const Digraph & d, span<const Vertex> s, int l) -> bool
    {
        return is_l_absorbent(DistanceMatrix{ d }, s, l);
    }

    auto certify(const DistanceMatrix & dist, VertexSet s, int k, int l) -> optional<KernelCertificate>
    {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (! is_k_independent(dist, s, k))
            return std::nullopt;

        KernelCertificate cert{ s, k, l, {} };
        auto in = membership(dist.size(), s);
        for (Vertex u = 0 ; u < dist.size() ; ++u) {
            if (in[u])
                continue;
            optional<AbsorptionWitness> best;
            for (Vertex v : s)
                if (dist(u, v) <= l && (! best || dist(u, v) < best->distance))
                    best = AbsorptionWitness{ v, dist(u, v) };
            if (! best)
                return std::nullopt;
            cert.witnesses.emplace(u, *best);
        }
        return cert;
    }

    auto validate_certificate(const Digraph & d, const KernelCertificate & cert) -> bool
    {
        if (cert.k < 2 || cert.l < 1)
            return false;
        if (std::any_of(cert.members.begin(), cert.members.end(), [&] (Vertex v) { return v < 0 || v >= d.size(); }))
            return false;

        DistanceMatrix dist{ d };
        if (! is_k_independent(dist, cert.members, cert.k))
            return false;

        auto in = membership(d.size(), cert.members);
        for (Vertex u = 0 ; u < d.size() ; ++u) {
            auto w = cert.witnesses.find(u);
            if (in[u]) {
                if (w != cert.witnesses.end())
                    return false;
                continue;
            }
            if (w == cert.witnesses.end())
                return false;
            auto [absorber, distance] = w->second;
            if (absorber < 0 || absorber >= d.size() || ! in[absorber])
                return false;
            if (distance > cert.l || distance != dist(u, absorber))
                return false;
        }
        return cert.witnesses.size() == d.size() - cert.members.size();
    }

    auto find_independent_absorbent_set(const Digraph & independence, const Digraph & absorption) -> optional<VertexSet>
    {
        if (independence.size() != absorption.size())
            throw std::invalid_argument{ "independence and absorption digraphs must share a vertex set" };

        int n = independence.size();
        Backtracker b{ independence, absorption, n, vector<int>(n, 0), vector<int>(n, 0), vector<bool>(n, false) };
        if (! b.search(0))
            return std::nullopt;

        VertexSet result;
        for (Vertex v = 0 ; v < n ; ++v)
            if (b.in[v])
                result.push_back(v);
        return result;
    }

    auto find_kernel(const Digraph & d) -> optional<KernelCertificate>
    {
        return find_kl_kernel(d, 2, 1);
    }

    auto find_k_kernel(const Digraph & d, int k) -> optional<KernelCertificate>
    {
        return find_kl_kernel(d, k, k - 1);
    }

    auto find_kl_kernel(const Digraph & d, int k, int l) -> optional<KernelCertificate>
    {
        check_parameters(k, l);
        DistanceMatrix dist{ d };
        auto independence = closure(d, dist, k - 1);
        auto absorption = (l == k - 1) ? independence : closure(d, dist, l);

        auto found = find_independent_absorbent_set(independence, absorption);
        if (! found)
            return std::nullopt;

        auto cert = certify(dist, std::move(*found), k, l);
        if (! cert)
            throw std::logic_error{ "backtracking returned a set that fails re-validation on the original digraph" };
        return cert;
    }

    auto all_kl_kernels(const Digraph & d, int k, int l, int oracle_bound) -> vector<VertexSet>
    {
        check_parameters(k, l);
        check_oracle_bound(d, oracle_bound);

        int n = d.size();
        DistanceMatrix dist{ d };
        vector<std::uint64_t> conflicts(n, 0), reaches(n, 0);
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v)
                if (u != v) {
                    if (dist(u, v) < k || dist(v, u) < k)
                        conflicts[u] |= std::uint64_t{ 1 } << v;
                    if (dist(u, v) <= l)
                        reaches[u] |= std::uint64_t{ 1 } << v;
                }

        vector<VertexSet> result;
        std::uint64_t end = std::uint64_t{ 1 } << n;
        for (std::uint64_t s = 0 ; s < end ; ++s) {
            bool ok = true;
            for (Vertex u = 0 ; u < n && ok ; ++u) {
                if (s & (std::uint64_t{ 1 } << u))
                    ok = ! (conflicts[u] & s);
                else
                    ok = (reaches[u] & s);
            }
            if (ok) {
                VertexSet members;
                for (Vertex u = 0 ; u < n ; ++u)
                    if (s & (std::uint64_t{ 1 } << u))
                        members.push_back(u);
                result.push_back(std::move(members));
            }
        }
        return result;
    }

    auto is_kernel_perfect(const Digraph & d, int oracle_bound) -> bool
    {
        check_oracle_bound(d, oracle_bound);
        int n = d.size();
        VertexSet subset;
        for (std::uint64_t s = 1 ; s < (std::uint64_t{ 1 } << n) ; ++s) {
            subset.clear();
            for (Vertex v = 0 ; v < n ; ++v)
                if (s & (std::uint64_t{ 1 } << v))
                    subset.push_back(v);
            if (! find_kernel(d.induced(subset)))
                return false;
        }
        return true;
    }
}
