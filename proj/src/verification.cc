/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/verification.hh>

#include <kkernel/cycles.hh>
#include <kkernel/io.hh>
#include <kkernel/kernel.hh>
#include <kkernel/premise.hh>
#include <kkernel/search.hh>

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

using std::optional;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace kkernel
{
    namespace
    {
        using clock = std::chrono::steady_clock;

        auto seconds_since(clock::time_point start) -> double
        {
            return std::chrono::duration<double>(clock::now() - start).count();
        }

        // Times the body and fills id, name and seconds.
        template <typename Body>
        auto timed(int id, string name, Body && body) -> CheckResult
        {
            auto start = clock::now();
            CheckResult r = body();
            r.id = id;
            r.name = std::move(name);
            r.seconds = seconds_since(start);
            return r;
        }

        auto describe(const SweepResult & s, const string & relevant_name) -> string
        {
            std::ostringstream out;
            out << s.examined << " digraphs, " << s.relevant << " " << relevant_name << ", " << s.failures << " failures";
            if (s.first_failure)
                out << "; first failure: " << *s.first_failure;
            return out.str();
        }

        auto within_budget(CheckResult & r, double budget_seconds) -> void
        {
            if (r.seconds > budget_seconds) {
                r.passed = false;
                r.detail += "; took " + to_string(r.seconds) + " s, budget " + to_string(budget_seconds) + " s";
            }
        }

        auto sweep_budget(unsigned shards) -> double
        {
            return shards >= 8 ? 5 * 60.0 : 30 * 60.0;
        }

        auto one_line(const Digraph & d) -> string
        {
            string s = write_edge_list(d);
            std::replace(s.begin(), s.end(), '\n', ';');
            return s;
        }
    }

    auto default_hooks() -> VerificationHooks
    {
        return VerificationHooks{ [] (int k, int length) { return threshold(k, length); }, [] (int k) { return build_h_k(k); } };
    }

    auto sweep_labelled_digraphs(int min_n, int max_n, unsigned shards,
            const std::function<SweepOutcome (const Digraph &)> & check) -> SweepResult
    {
        struct Partial
        {
            uint64_t examined = 0, relevant = 0, failures = 0;
            optional<string> first_failure;
        };

        shards = std::max(shards, 1u);
        SweepResult result;
        for (int n = min_n ; n <= max_n ; ++n) {
            uint64_t total = labelled_digraph_count(n);
            vector<Partial> partials(shards);
            {
                vector<std::jthread> workers;
                for (unsigned s = 0 ; s < shards ; ++s)
                    workers.emplace_back([&, s] {
                        auto & p = partials[s];
                        uint64_t from = total * s / shards, to = total * (s + 1) / shards;
                        for (uint64_t c = from ; c < to ; ++c) {
                            auto d = decode_digraph(n, c);
                            ++p.examined;
                            auto outcome = check(d);
                            if (outcome.relevant)
                                ++p.relevant;
                            if (outcome.failed) {
                                ++p.failures;
                                if (! p.first_failure)
                                    p.first_failure = "n=" + to_string(n) + " cursor=" + to_string(c) + " [" + one_line(d) + "] "
                                        + outcome.detail;
                            }
                        }
                    });
            }
            for (auto & p : partials) {
                result.examined += p.examined;
                result.relevant += p.relevant;
                result.failures += p.failures;
                if (! result.first_failure && p.first_failure)
                    result.first_failure = p.first_failure;
            }
        }
        return result;
    }

    auto check_family_exactness(const VerificationOptions & options) -> CheckResult
    {
        auto r = timed(1, "H_k family exactness (k = 3..6)", [&] {
            CheckResult r;
            r.passed = true;
            for (int k = 3 ; k <= 6 ; ++k) {
                auto report = verify_h_k(options.hooks.build_family(k));
                if (! report.passed) {
                    r.passed = false;
                    for (auto & m : report.mismatches)
                        r.detail += "H_" + to_string(k) + ": " + m + "; ";
                }
            }
            if (r.passed)
                r.detail = "vertex counts, long cycle, symmetric arcs, margin -1 and kernel absence all match for k = 3..6";
            return r;
        });
        within_budget(r, 10.0);
        return r;
    }

    auto check_closure_reduction(const VerificationOptions & options) -> CheckResult
    {
        auto r = timed(2, "k-kernels of D correspond to kernels of the (k-1)-closure (n = 4, k = 2,3,4)", [&] {
            auto sweep = sweep_labelled_digraphs(4, 4, options.shards, [] (const Digraph & d) {
                SweepOutcome o{ true, false, {} };
                for (int k = 2 ; k <= 4 ; ++k) {
                    bool by_scan = ! all_k_kernels(d, k).empty();
                    bool by_closure = find_kernel(closure(d, k - 1)).has_value();
                    if (by_scan != by_closure) {
                        o.failed = true;
                        o.detail = "k=" + to_string(k) + ": subset scan says " + (by_scan ? "yes" : "no")
                            + ", closure kernel says " + (by_closure ? "yes" : "no");
                        break;
                    }
                }
                return o;
            });
            return CheckResult{ 0, {}, sweep.failures == 0 && sweep.examined == 4096, describe(sweep, "compared"), 0.0 };
        });
        within_budget(r, 60.0);
        return r;
    }

    auto check_duchet(const VerificationOptions & options) -> CheckResult
    {
        auto r = timed(3, "every cycle has a symmetric arc => kernel-perfect (n = 4)", [&] {
            auto sweep = sweep_labelled_digraphs(4, 4, options.shards, [] (const Digraph & d) {
                if (! duchet_premise(d))
                    return SweepOutcome{};
                bool ok = is_kernel_perfect(d);
                return SweepOutcome{ true, ! ok, ok ? "" : "not kernel-perfect" };
            });
            return CheckResult{ 0, {}, sweep.failures == 0 && sweep.examined == 4096, describe(sweep, "satisfying the premise"), 0.0 };
        });
        within_budget(r, 120.0);
        return r;
    }

    namespace
    {
        auto closure_and_kernel_sweep(const VerificationOptions & options, int k) -> CheckResult
        {
            auto sweep = sweep_labelled_digraphs(1, options.sweep_max_n, options.shards, [k] (const Digraph & d) {
                if (! conjecture_premise_holds(d, k))
                    return SweepOutcome{};
                auto verdict = closure_cycles_have_symmetric_arc(d, k);
                if (! verdict.holds) {
                    string cycle;
                    for (Vertex v : verdict.worst->cycle.vertices)
                        cycle += to_string(v) + " ";
                    return SweepOutcome{ true, true, "closure cycle without symmetric arc: " + cycle };
                }
                if (! find_k_kernel(d, k))
                    return SweepOutcome{ true, true, "no " + to_string(k) + "-kernel" };
                return SweepOutcome{ true, false, {} };
            });
            return CheckResult{ 0, {}, sweep.failures == 0, describe(sweep, "satisfying the premise"), 0.0 };
        }
    }

    auto check_three_kernels(const VerificationOptions & options) -> CheckResult
    {
        auto r = timed(4, "premise for k = 3 => 2-closure cycles symmetric and a 3-kernel exists (n <= "
                + to_string(options.sweep_max_n) + ")", [&] { return closure_and_kernel_sweep(options, 3); });
        within_budget(r, sweep_budget(options.shards));
        return r;
    }

    auto check_four_kernels(const VerificationOptions & options) -> CheckResult
    {
        auto r = timed(5, "premise for k = 4 => 3-closure cycles symmetric and a 4-kernel exists (n <= "
                + to_string(options.sweep_max_n) + ")", [&] { return closure_and_kernel_sweep(options, 4); });
        within_budget(r, sweep_budget(options.shards));
        return r;
    }

    auto check_short_cycles_symmetric(const VerificationOptions & options) -> CheckResult
    {
        return timed(6, "premise for k = 4 => cycles of length <= 5 symmetric, longer ones with >= 5 symmetric arcs", [&] {
            CheckResult r;
            r.passed = true;
            for (int length = 3 ; length <= 6 ; ++length) {
                int expected = std::min(length, 5);
                int got = options.hooks.threshold(4, length);
                if (got != expected) {
                    r.passed = false;
                    r.detail += "threshold(4," + to_string(length) + ") = " + to_string(got) + ", expected " + to_string(expected) + "; ";
                }
            }
            auto sweep = sweep_labelled_digraphs(1, options.sweep_max_n, options.shards, [] (const Digraph & d) {
                if (! conjecture_premise_holds(d, 4))
                    return SweepOutcome{};
                auto violations = check_small_cycle_symmetry(d);
                return SweepOutcome{ true, ! violations.empty(), violations.empty() ? "" : violations.front().detail };
            });
            r.passed = r.passed && sweep.failures == 0;
            r.detail += describe(sweep, "satisfying the premise");
            return r;
        });
    }

    auto check_path_pairs(const VerificationOptions & options) -> CheckResult
    {
        return timed(7, "premise for k = 4 => u-v and v-u paths of total length <= 5 (<= 6) have 0 (<= 1) asymmetric arcs", [&] {
            auto sweep = sweep_labelled_digraphs(1, options.sweep_max_n, options.shards, [] (const Digraph & d) {
                if (! conjecture_premise_holds(d, 4))
                    return SweepOutcome{};
                auto violations = check_path_pair_lemmas(d);
                return SweepOutcome{ true, ! violations.empty(), violations.empty() ? "" : violations.front().detail };
            });
            return CheckResult{ 0, {}, sweep.failures == 0, describe(sweep, "satisfying the premise"), 0.0 };
        });
    }

    auto random_disjoint_instance(const Cycle & host, int k, std::mt19937_64 & rng) -> DisjointInstance
    {
        int length = host.length();
        auto offset = std::uniform_int_distribution<int>{ 0, length - 1 }(rng);
        vector<Vertex> rotated(length);
        for (int i = 0 ; i < length ; ++i)
            rotated[i] = host.vertices[(i + offset) % length];

        vector<int> cuts;
        do {
            cuts.clear();
            for (int remaining = length ; remaining > 0 ; ) {
                int piece = std::uniform_int_distribution<int>{ 1, std::min(k - 1, remaining) }(rng);
                cuts.push_back(piece);
                remaining -= piece;
            }
        } while (cuts.size() < 2);

        DisjointInstance instance;
        int position = 0;
        for (int piece : cuts) {
            instance.closure_cycle.vertices.push_back(rotated[position]);
            vector<Vertex> path;
            for (int i = 0 ; i <= piece ; ++i)
                path.push_back(rotated[(position + i) % length]);
            instance.paths.push_back(std::move(path));
            position += piece;
        }
        return instance;
    }

    auto check_disjoint_paths(const VerificationOptions & options) -> CheckResult
    {
        return timed(8, "internally disjoint realisations of closure cycles carry a symmetric arc (n <= 7, k = 3,4)", [&] {
            std::mt19937_64 rng{ options.seed };
            const uint64_t per_digraph = 20;
            uint64_t trials = 0, failures = 0, digraphs = 0, nontrivial = 0;
            optional<string> first_failure;

            while (trials < options.disjoint_trials) {
                int k = std::uniform_int_distribution<int>{ 3, 4 }(rng);
                int n = std::uniform_int_distribution<int>{ 3, 7 }(rng);
                double symmetric = std::uniform_real_distribution<double>{ 0.15, 0.6 }(rng);
                double asymmetric = std::uniform_real_distribution<double>{ 0.0, 0.25 }(rng);

                vector<Arc> arcs;
                for (Vertex i = 0 ; i < n ; ++i)
                    for (Vertex j = i + 1 ; j < n ; ++j) {
                        double u = std::uniform_real_distribution<double>{ 0.0, 1.0 }(rng);
                        if (u < symmetric) {
                            arcs.emplace_back(i, j);
                            arcs.emplace_back(j, i);
                        }
                        else if (u < symmetric + asymmetric)
                            arcs.emplace_back(i, j);
                        else if (u < symmetric + 2 * asymmetric)
                            arcs.emplace_back(j, i);
                    }
                Digraph d{ n, arcs };
                if (! conjecture_premise_holds(d, k))
                    continue;
                auto cycles = enumerate_simple_cycles(d);
                if (std::none_of(cycles.begin(), cycles.end(), [] (const Cycle & c) { return c.length() >= 3; }))
                    continue;

                ++digraphs;
                for (uint64_t t = 0 ; t < per_digraph && trials < options.disjoint_trials ; ++t, ++trials) {
                    auto & host = cycles[std::uniform_int_distribution<std::size_t>{ 0, cycles.size() - 1 }(rng)];
                    auto instance = random_disjoint_instance(host, k, rng);
                    if (std::any_of(instance.paths.begin(), instance.paths.end(), [] (const auto & p) { return p.size() > 2; }))
                        ++nontrivial;
                    if (! check_disjoint_lemma_instance(d, k, instance.closure_cycle, instance.paths)) {
                        ++failures;
                        if (! first_failure)
                            first_failure = "k=" + to_string(k) + " [" + one_line(d) + "]";
                    }
                }
            }

            CheckResult r;
            r.passed = failures == 0;
            r.detail = to_string(trials) + " realisations over " + to_string(digraphs) + " digraphs ("
                + to_string(nontrivial) + " using a path longer than one arc), " + to_string(failures) + " failures";
            if (first_failure)
                r.detail += "; first failure: " + *first_failure;
            return r;
        });
    }

    auto check_harness_determinism(const VerificationOptions & options) -> CheckResult
    {
        return timed(9, "hunt(k = 3, n = 4) is independent of sharding and of kill-and-resume", [&] {
            auto run = [] (unsigned shards, optional<uint64_t> stop, optional<SearchCheckpoint> resume) {
                HuntOptions o;
                o.k = 3;
                o.n = 4;
                o.shards = shards;
                o.stop_at = stop;
                o.flush_every = 512;
                return hunt(o, std::move(resume));
            };

            CheckResult r;
            r.passed = true;
            auto reference = serialise_checkpoint(run(1, std::nullopt, std::nullopt));
            for (unsigned shards : { 4u, 8u })
                if (serialise_checkpoint(run(shards, std::nullopt, std::nullopt)) != reference) {
                    r.passed = false;
                    r.detail += "shards=" + to_string(shards) + " differs from shards=1; ";
                }

            std::mt19937_64 rng{ options.seed };
            uint64_t total = labelled_digraph_count(4);
            vector<uint64_t> stops;
            for (int i = 0 ; i < 3 ; ++i)
                stops.push_back(std::uniform_int_distribution<uint64_t>{ 1, total - 1 }(rng));
            for (uint64_t stop : stops) {
                auto paused = run(3, stop, std::nullopt);
                // round-trip through the file format, as a real resume would
                auto reloaded = checkpoint_from_json(nlohmann::json::parse(serialise_checkpoint(paused)));
                if (serialise_checkpoint(run(5, std::nullopt, reloaded)) != reference) {
                    r.passed = false;
                    r.detail += "resume from cursor " + to_string(stop) + " differs; ";
                }
            }

            std::sort(stops.begin(), stops.end());
            optional<SearchCheckpoint> chained;
            for (uint64_t stop : stops)
                chained = run(2, stop, chained);
            if (serialise_checkpoint(run(8, std::nullopt, chained)) != reference) {
                r.passed = false;
                r.detail += "chained resume differs; ";
            }

            if (r.passed)
                r.detail = "shards 1/4/8 byte-identical; resumed at cursors " + to_string(stops[0]) + ", " + to_string(stops[1])
                    + ", " + to_string(stops[2]) + " and reproduced the uninterrupted checkpoint";
            return r;
        });
    }

    auto check_sharpness_narrative(const VerificationOptions & options) -> CheckResult
    {
        return timed(10, "H_k reports state premise margin -1 together with kernel absence (k = 3..6)", [&] {
            CheckResult r;
            r.passed = true;
            for (int k = 3 ; k <= 6 ; ++k) {
                auto report = verify_h_k(options.hooks.build_family(k));
                auto text = report.narrative();
                bool ok = report.passed && text.find("premise margin -1") != string::npos
                    && text.find("no " + to_string(k) + "-kernel exists") != string::npos;
                if (! ok)
                    r.passed = false;
                r.detail += text + (k < 6 ? " " : "");
            }
            return r;
        });
    }

    auto run_verification(const VerificationOptions & options) -> vector<CheckResult>
    {
        return {
            check_family_exactness(options),
            check_closure_reduction(options),
            check_duchet(options),
            check_three_kernels(options),
            check_four_kernels(options),
            check_short_cycles_symmetric(options),
            check_path_pairs(options),
            check_disjoint_paths(options),
            check_harness_determinism(options),
            check_sharpness_narrative(options)
        };
    }
}
