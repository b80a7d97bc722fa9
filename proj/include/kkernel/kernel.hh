/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KKERNEL_GUARD_KERNEL_HH
#define KKERNEL_GUARD_KERNEL_HH 1

#include <kkernel/digraph.hh>

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kkernel
{
    using VertexSet = std::vector<Vertex>;

    /// Raised when an exponential oracle is asked to run on too many vertices.
    class OracleLimitError : public std::runtime_error
    {
        public:
            explicit OracleLimitError(const std::string & what) :
                std::runtime_error(what)
            {
            }
    };

    inline constexpr int default_oracle_bound = 20;

    struct AbsorptionWitness
    {
        Vertex absorber;
        int distance;

        auto operator== (const AbsorptionWitness &) const -> bool = default;
    };

    /**
     * A k-independent, l-absorbent set together with, for every vertex
     * outside it, a member it reaches within distance l (the nearest one,
     * ties broken by smallest index).
     */
    struct KernelCertificate
    {
        VertexSet members;
        int k = 2;
        int l = 1;
        std::map<Vertex, AbsorptionWitness> witnesses;
    };

    /// Both d(u,v) >= k and d(v,u) >= k for all distinct u, v in s.
    auto is_k_independent(const Digraph & d, std::span<const Vertex> s, int k) -> bool;
    auto is_k_independent(const DistanceMatrix & dist, std::span<const Vertex> s, int k) -> bool;

    /// Every vertex outside s reaches some member of s within distance l.
    auto is_l_absorbent(const Digraph & d, std::span<const Vertex> s, int l) -> bool;
    auto is_l_absorbent(const DistanceMatrix & dist, std::span<const Vertex> s, int l) -> bool;

    /// Builds a certificate for s if it really is a (k,l)-kernel of the digraph measured by dist.
    auto certify(const DistanceMatrix & dist, VertexSet s, int k, int l) -> std::optional<KernelCertificate>;

    /// True iff the certificate's set is a (k,l)-kernel of d and every witness is exact.
    auto validate_certificate(const Digraph & d, const KernelCertificate & cert) -> bool;

    /**
     * Exact backtracking search for a set S with no arc of `independence`
     * between two members (either direction), such that every non-member has
     * an arc of `absorption` into S. Both digraphs share a vertex set.
     * Vertices are decided in index order, membership tried before exclusion;
     * the first solution is returned.
     */
    auto find_independent_absorbent_set(const Digraph & independence, const Digraph & absorption) -> std::optional<VertexSet>;

    auto find_kernel(const Digraph & d) -> std::optional<KernelCertificate>;

    /// Searches for a kernel of the (k-1)-closure and re-validates it as a k-kernel of d. Requires k >= 2.
    auto find_k_kernel(const Digraph & d, int k) -> std::optional<KernelCertificate>;

    /// Independence against the (k-1)-closure, absorption against the l-closure. Requires k >= 2, l >= 1.
    auto find_kl_kernel(const Digraph & d, int k, int l) -> std::optional<KernelCertificate>;

    /// Exhaustive subset scan, independent of the backtracking search. Sets listed in increasing bitmask order.
    auto all_kl_kernels(const Digraph & d, int k, int l, int oracle_bound = default_oracle_bound) -> std::vector<VertexSet>;

    inline auto all_k_kernels(const Digraph & d, int k, int oracle_bound = default_oracle_bound) -> std::vector<VertexSet>
    {
        return all_kl_kernels(d, k, k - 1, oracle_bound);
    }

    /// Every one of the 2^n induced subdigraphs has a kernel.
    auto is_kernel_perfect(const Digraph & d, int oracle_bound = default_oracle_bound) -> bool;
}

#endif
