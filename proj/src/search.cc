/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/search.hh>

#include <kkernel/io.hh>
#include <kkernel/kernel.hh>
#include <kkernel/premise.hh>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <thread>

using nlohmann::json;
using std::optional;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace kkernel
{
    auto pair_count(int n) -> int
    {
        return n * (n - 1) / 2;
    }

    auto labelled_digraph_count(int n) -> uint64_t
    {
        if (n < 1 || 2 * pair_count(n) > 62)
            throw std::invalid_argument{ "labelled enumeration supports 1..8 vertices, got " + to_string(n) };
        return uint64_t{ 1 } << (2 * pair_count(n));
    }

    auto decode_digraph(int n, uint64_t cursor) -> Digraph
    {
        if (cursor >= labelled_digraph_count(n))
            throw std::invalid_argument{ "cursor " + to_string(cursor) + " out of range for n = " + to_string(n) };
        vector<Arc> arcs;
        for (Vertex i = 0 ; i < n ; ++i)
            for (Vertex j = i + 1 ; j < n ; ++j) {
                auto state = cursor & 3;
                cursor >>= 2;
                if (state & 1)
                    arcs.emplace_back(i, j);
                if (state & 2)
                    arcs.emplace_back(j, i);
            }
        return Digraph{ n, arcs };
    }

    auto encode_digraph(const Digraph & d) -> uint64_t
    {
        int n = d.size();
        labelled_digraph_count(n);
        uint64_t cursor = 0;
        int position = 0;
        for (Vertex i = 0 ; i < n ; ++i)
            for (Vertex j = i + 1 ; j < n ; ++j, ++position) {
                uint64_t state = (d.has_arc(i, j) ? 1 : 0) | (d.has_arc(j, i) ? 2 : 0);
                cursor |= state << (2 * position);
            }
        return cursor;
    }

    auto enumerate_labeled_digraphs(int n, uint64_t from, uint64_t to,
            const std::function<void (uint64_t, const Digraph &)> & visit) -> void
    {
        auto total = labelled_digraph_count(n);
        if (from > to || to > total)
            throw std::invalid_argument{ "cursor range [" + to_string(from) + "," + to_string(to) + ") outside [0,"
                + to_string(total) + "]" };
        for (uint64_t c = from ; c < to ; ++c)
            visit(c, decode_digraph(n, c));
    }

    auto enumerate_labeled_digraphs(int n, uint64_t from, uint64_t to) -> vector<Digraph>
    {
        vector<Digraph> result;
        enumerate_labeled_digraphs(n, from, to, [&] (uint64_t, const Digraph & d) { result.push_back(d); });
        return result;
    }

    auto canonical_code(const Digraph & d) -> uint64_t
    {
        vector<Vertex> perm(d.size());
        std::iota(perm.begin(), perm.end(), 0);
        uint64_t best = encode_digraph(d);
        while (std::next_permutation(perm.begin(), perm.end()))
            best = std::min(best, encode_digraph(d.relabelled(perm)));
        return best;
    }

    auto distinct_up_to_isomorphism(const vector<Digraph> & digraphs) -> vector<Digraph>
    {
        std::set<std::pair<int, uint64_t>> seen;
        vector<Digraph> result;
        for (auto & d : digraphs)
            if (seen.emplace(d.size(), canonical_code(d)).second)
                result.push_back(d);
        return result;
    }

    auto is_counterexample(const Digraph & d, int k) -> bool
    {
        if (! conjecture_premise_holds(d, k))
            return false;
        if (d.size() <= default_oracle_bound)
            return all_k_kernels(d, k).empty();
        return ! find_k_kernel(d, k).has_value();
    }

    auto to_json(const SearchCheckpoint & c) -> json
    {
        json counterexamples = json::array();
        for (auto & d : c.counterexamples)
            counterexamples.push_back(write_edge_list(d));
        return json{
            { "format_version", checkpoint_format_version },
            { "mode", c.mode == SearchMode::Exhaustive ? "exhaustive" : "random" },
            { "k", c.k },
            { "n", c.n },
            { "cursor", c.cursor },
            { "end", c.end },
            { "examined", c.examined },
            { "premise_hits", c.premise_hits },
            { "kernels_found", c.kernels_found },
            { "counterexamples", counterexamples },
            { "rng_seed", c.rng_seed ? json(*c.rng_seed) : json(nullptr) },
            { "sym_bias", c.sym_bias }
        };
    }

    auto checkpoint_from_json(const json & j) -> SearchCheckpoint
    {
        SearchCheckpoint c;
        try {
            if (j.at("format_version").get<int>() != checkpoint_format_version)
                throw CheckpointError{ "unsupported checkpoint format version " + j.at("format_version").dump() };
            auto mode = j.at("mode").get<string>();
            if (mode == "exhaustive")
                c.mode = SearchMode::Exhaustive;
            else if (mode == "random")
                c.mode = SearchMode::Random;
            else
                throw CheckpointError{ "unknown search mode " + mode };
            c.k = j.at("k").get<int>();
            c.n = j.at("n").get<int>();
            c.cursor = j.at("cursor").get<uint64_t>();
            c.end = j.at("end").get<uint64_t>();
            c.examined = j.at("examined").get<uint64_t>();
            c.premise_hits = j.at("premise_hits").get<uint64_t>();
            c.kernels_found = j.at("kernels_found").get<uint64_t>();
            if (! j.at("rng_seed").is_null())
                c.rng_seed = j.at("rng_seed").get<uint64_t>();
            c.sym_bias = j.at("sym_bias").get<double>();
            for (auto & text : j.at("counterexamples"))
                c.counterexamples.push_back(parse_edge_list(text.get<string>()));
        }
        catch (const json::exception & e) {
            throw CheckpointError{ string{ "malformed checkpoint: " } + e.what() };
        }
        catch (const ParseError & e) {
            throw CheckpointError{ string{ "malformed counterexample: " } + e.what() };
        }

        if (c.k < 3)
            throw CheckpointError{ "checkpoint k must be at least 3" };
        if (c.cursor > c.end)
            throw CheckpointError{ "checkpoint cursor past its end" };
        if (c.mode == SearchMode::Exhaustive && c.end > labelled_digraph_count(c.n))
            throw CheckpointError{ "checkpoint end beyond 4^(n(n-1)/2)" };
        if (! (c.kernels_found <= c.premise_hits && c.premise_hits <= c.examined))
            throw CheckpointError{ "checkpoint tallies inconsistent" };
        if (c.premise_hits - c.kernels_found != c.counterexamples.size())
            throw CheckpointError{ "checkpoint counterexample count does not match its tallies" };
        for (auto & d : c.counterexamples)
            if (d.size() != c.n || ! is_counterexample(d, c.k))
                throw CheckpointError{ "stored counterexample fails re-validation:\n" + write_edge_list(d) };
        return c;
    }

    auto serialise_checkpoint(const SearchCheckpoint & c) -> string
    {
        return to_json(c).dump(2) + "\n";
    }

    namespace
    {
        struct Tally
        {
            uint64_t examined = 0, premise_hits = 0, kernels_found = 0;
            vector<Digraph> counterexamples;

            auto examine(const Digraph & d, int k) -> void
            {
                ++examined;
                if (! conjecture_premise_holds(d, k))
                    return;
                ++premise_hits;
                if (find_k_kernel(d, k))
                    ++kernels_found;
                else
                    counterexamples.push_back(d);
            }

            auto merge_into(SearchCheckpoint & c) -> void
            {
                c.examined += examined;
                c.premise_hits += premise_hits;
                c.kernels_found += kernels_found;
                for (auto & d : counterexamples)
                    c.counterexamples.push_back(std::move(d));
            }
        };

        // Drives [state.cursor, stop) in windows, sharded across threads, merged in index order.
        auto drive(SearchCheckpoint & state, uint64_t stop, unsigned shards, uint64_t flush_every, double flush_seconds,
                const FlushCallback & on_flush, const std::function<Digraph (uint64_t)> & digraph_at) -> void
        {
            shards = std::max(shards, 1u);
            flush_every = std::max<uint64_t>(flush_every, 1);
            const uint64_t window = std::min<uint64_t>(flush_every, uint64_t{ 1 << 16 } * shards);

            using clock = std::chrono::steady_clock;
            auto last_flush = clock::now();
            uint64_t since_flush = 0;

            while (state.cursor < stop) {
                uint64_t window_end = std::min(stop, state.cursor + window);
                uint64_t span = window_end - state.cursor;
                unsigned used = static_cast<unsigned>(std::min<uint64_t>(shards, span));
                vector<Tally> tallies(used);
                {
                    vector<std::jthread> workers;
                    for (unsigned s = 0 ; s < used ; ++s) {
                        uint64_t a = state.cursor + span * s / used, b = state.cursor + span * (s + 1) / used;
                        workers.emplace_back([&, s, a, b] {
                            for (uint64_t c = a ; c < b ; ++c)
                                tallies[s].examine(digraph_at(c), state.k);
                        });
                    }
                }
                for (auto & t : tallies)
                    t.merge_into(state);
                state.cursor = window_end;
                since_flush += span;

                std::chrono::duration<double> elapsed = clock::now() - last_flush;
                if (on_flush && (since_flush >= flush_every || elapsed.count() >= flush_seconds) && state.cursor < stop) {
                    on_flush(state);
                    since_flush = 0;
                    last_flush = clock::now();
                }
            }
            if (on_flush)
                on_flush(state);
        }
    }

    auto hunt(const HuntOptions & options, optional<SearchCheckpoint> resume) -> SearchCheckpoint
    {
        if (options.k < 3)
            throw std::invalid_argument{ "hunt needs k >= 3, got " + to_string(options.k) };
        if (options.n < 1 || options.n > exhaustive_vertex_limit)
            throw std::invalid_argument{ "exhaustive hunt supports 1.." + to_string(exhaustive_vertex_limit) + " vertices, got "
                + to_string(options.n) };

        SearchCheckpoint state;
        if (resume) {
            if (resume->mode != SearchMode::Exhaustive)
                throw std::invalid_argument{ "cannot resume an exhaustive hunt from a random-mode checkpoint" };
            if (resume->k != options.k || resume->n != options.n)
                throw std::invalid_argument{ "checkpoint is for k=" + to_string(resume->k) + ", n=" + to_string(resume->n)
                    + " but the hunt asks for k=" + to_string(options.k) + ", n=" + to_string(options.n) };
            state = std::move(*resume);
        }
        else {
            auto total = labelled_digraph_count(options.n);
            state.k = options.k;
            state.n = options.n;
            state.cursor = options.from.value_or(0);
            state.end = options.to.value_or(total);
            if (state.cursor > state.end || state.end > total)
                throw std::invalid_argument{ "cursor range outside [0," + to_string(total) + "]" };
        }

        uint64_t stop = std::clamp(options.stop_at.value_or(state.end), state.cursor, state.end);
        int n = state.n;
        drive(state, stop, options.shards, options.flush_every, options.flush_seconds, options.on_flush,
                [n] (uint64_t c) { return decode_digraph(n, c); });
        return state;
    }

    auto random_digraph(int n, double sym_bias, uint64_t seed, uint64_t trial) -> Digraph
    {
        // splitmix64 finaliser over (seed, trial) gives each trial its own stream
        uint64_t z = seed + (trial + 1) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        std::mt19937_64 generator{ z };

        vector<Arc> arcs;
        for (Vertex i = 0 ; i < n ; ++i)
            for (Vertex j = i + 1 ; j < n ; ++j) {
                double u = static_cast<double>(generator() >> 11) * 0x1.0p-53;
                int state;
                if (u < sym_bias)
                    state = 3;
                else
                    state = std::min(2, static_cast<int>((u - sym_bias) / (1.0 - sym_bias) * 3.0));
                if (state & 1)
                    arcs.emplace_back(i, j);
                if (state & 2)
                    arcs.emplace_back(j, i);
            }
        return Digraph{ n, arcs };
    }

    auto random_hunt(const RandomHuntOptions & options, optional<SearchCheckpoint> resume) -> SearchCheckpoint
    {
        if (options.k < 3)
            throw std::invalid_argument{ "random hunt needs k >= 3, got " + to_string(options.k) };
        if (options.n < 1)
            throw std::invalid_argument{ "random hunt needs at least one vertex" };
        if (! (options.sym_bias >= 0.0 && options.sym_bias <= 1.0))
            throw std::invalid_argument{ "sym_bias must lie in [0,1]" };

        SearchCheckpoint state;
        if (resume) {
            if (resume->mode != SearchMode::Random || resume->k != options.k || resume->n != options.n
                    || resume->rng_seed != options.seed || resume->sym_bias != options.sym_bias)
                throw std::invalid_argument{ "checkpoint does not match the random hunt parameters" };
            state = std::move(*resume);
        }
        else {
            state.mode = SearchMode::Random;
            state.k = options.k;
            state.n = options.n;
            state.end = options.trials;
            state.rng_seed = options.seed;
            state.sym_bias = options.sym_bias;
        }

        uint64_t stop = std::clamp(options.stop_at.value_or(state.end), state.cursor, state.end);
        int n = state.n;
        double bias = state.sym_bias;
        uint64_t seed = *state.rng_seed;
        drive(state, stop, options.shards, options.flush_every, options.flush_seconds, options.on_flush,
                [=] (uint64_t t) { return random_digraph(n, bias, seed, t); });
        return state;
    }
}
