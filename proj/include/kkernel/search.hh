/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KKERNEL_GUARD_SEARCH_HH
#define KKERNEL_GUARD_SEARCH_HH 1

#include <kkernel/digraph.hh>

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kkernel
{
    /**
     * Labelled digraphs on n vertices are indexed by a base-4 cursor. Digit p
     * (least significant first) is the state of the p-th unordered pair
     * (i,j), i < j, in lexicographic order: 0 none, 1 i->j, 2 j->i, 3 both.
     */
    auto pair_count(int n) -> int;

    /// 4^(n(n-1)/2). Throws std::invalid_argument when that does not fit in 62 bits (n > 8).
    auto labelled_digraph_count(int n) -> std::uint64_t;

    auto decode_digraph(int n, std::uint64_t cursor) -> Digraph;
    auto encode_digraph(const Digraph & d) -> std::uint64_t;

    /// Calls visit for every cursor in [from, to), in order. Throws std::invalid_argument on a bad range.
    auto enumerate_labeled_digraphs(int n, std::uint64_t from, std::uint64_t to,
            const std::function<void (std::uint64_t, const Digraph &)> & visit) -> void;

    auto enumerate_labeled_digraphs(int n, std::uint64_t from, std::uint64_t to) -> std::vector<Digraph>;

    /// Smallest cursor over all relabellings; equal iff isomorphic. Practical for n <= 7.
    auto canonical_code(const Digraph & d) -> std::uint64_t;

    /// Keeps the first member of each isomorphism class, preserving order.
    auto distinct_up_to_isomorphism(const std::vector<Digraph> & digraphs) -> std::vector<Digraph>;

    inline constexpr int checkpoint_format_version = 1;
    inline constexpr int exhaustive_vertex_limit = 6;

    enum class SearchMode { Exhaustive, Random };

    struct SearchCheckpoint
    {
        SearchMode mode = SearchMode::Exhaustive;
        int k = 3;
        int n = 0;
        std::uint64_t cursor = 0;     // next cursor (exhaustive) or next trial index (random)
        std::uint64_t end = 0;        // one past the last cursor or trial of the run
        std::uint64_t examined = 0;
        std::uint64_t premise_hits = 0;
        std::uint64_t kernels_found = 0;
        std::vector<Digraph> counterexamples;
        std::optional<std::uint64_t> rng_seed;
        double sym_bias = 0.0;

        auto finished() const -> bool { return cursor == end; }
        auto operator== (const SearchCheckpoint &) const -> bool = default;
    };

    class CheckpointError : public std::runtime_error
    {
        public:
            explicit CheckpointError(const std::string & what) :
                std::runtime_error(what)
            {
            }
    };

    auto to_json(const SearchCheckpoint & c) -> nlohmann::json;

    /// Parses and re-validates: tallies consistent, and every counterexample really satisfies the premise with no k-kernel.
    auto checkpoint_from_json(const nlohmann::json & j) -> SearchCheckpoint;

    auto serialise_checkpoint(const SearchCheckpoint & c) -> std::string;

    /// Premise holds and no k-kernel exists.
    auto is_counterexample(const Digraph & d, int k) -> bool;

    using FlushCallback = std::function<void (const SearchCheckpoint &)>;

    struct HuntOptions
    {
        int k = 3;
        int n = 4;
        unsigned shards = 1;
        std::optional<std::uint64_t> from;      // defaults to 0, ignored when resuming
        std::optional<std::uint64_t> to;        // defaults to 4^(n(n-1)/2), ignored when resuming
        std::optional<std::uint64_t> stop_at;   // pause once the cursor reaches this value
        std::uint64_t flush_every = std::uint64_t{ 1 } << 20;
        double flush_seconds = 30.0;
        FlushCallback on_flush;
    };

    /**
     * Exhaustive search over labelled digraphs for a digraph satisfying the
     * conjecture premise for k but having no k-kernel. The result depends
     * only on the cursor range, never on the shard count or on where the
     * run was paused and resumed.
     */
    auto hunt(const HuntOptions & options, std::optional<SearchCheckpoint> resume = std::nullopt) -> SearchCheckpoint;

    struct RandomHuntOptions
    {
        int k = 3;
        int n = 6;
        std::uint64_t trials = 0;
        std::uint64_t seed = 0;
        double sym_bias = 0.5;      // probability a pair is symmetric; the other three states share the rest
        unsigned shards = 1;
        std::optional<std::uint64_t> stop_at;
        std::uint64_t flush_every = std::uint64_t{ 1 } << 20;
        double flush_seconds = 30.0;
        FlushCallback on_flush;
    };

    /// Trial t samples its digraph from a generator seeded by (seed, t) alone.
    auto random_digraph(int n, double sym_bias, std::uint64_t seed, std::uint64_t trial) -> Digraph;

    auto random_hunt(const RandomHuntOptions & options, std::optional<SearchCheckpoint> resume = std::nullopt) -> SearchCheckpoint;
}

#endif
