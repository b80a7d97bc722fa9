/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/cycles.hh>
#include <kkernel/digraph.hh>
#include <kkernel/families.hh>
#include <kkernel/io.hh>
#include <kkernel/kernel.hh>
#include <kkernel/premise.hh>
#include <kkernel/search.hh>
#include <kkernel/verification.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

using nlohmann::json;
using std::cerr;
using std::cout;
using std::optional;
using std::string;

using namespace kkernel;

namespace
{
    enum ExitCode { ok = 0, property_failure = 1, usage_error = 2 };

    struct Input
    {
        string bytes;
        Digraph digraph;
    };

    auto load_input(const string & path) -> Input
    {
        string bytes;
        if (path == "-") {
            std::ostringstream s;
            s << std::cin.rdbuf();
            bytes = s.str();
        }
        else
            bytes = read_file(path);
        auto d = parse_edge_list(bytes);
        return Input{ std::move(bytes), std::move(d) };
    }

    auto emit_report(const string & command, const optional<string> & input_bytes, json result,
            std::chrono::steady_clock::time_point start) -> void
    {
        json report{
            { "command", command },
            { "input_digest", input_bytes ? json(content_digest(*input_bytes)) : json(nullptr) },
            { "result", std::move(result) },
            { "seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() }
        };
        cout << report.dump(2) << '\n';
    }

    auto digraph_json(const Digraph & d) -> json
    {
        json arcs = json::array();
        for (auto & [u, v] : d.arcs())
            arcs.push_back({ u, v });
        return json{ { "n", d.size() }, { "arcs", arcs } };
    }

    auto checkpoint_writer(const string & path) -> FlushCallback
    {
        if (path.empty())
            return {};
        return [path] (const SearchCheckpoint & c) {
            write_file_atomically(path, serialise_checkpoint(c));
            cerr << "checkpoint: cursor " << c.cursor << " / " << c.end << ", " << c.counterexamples.size()
                << " counterexamples\n";
        };
    }

    auto load_checkpoint(const string & path) -> optional<SearchCheckpoint>
    {
        if (path.empty())
            return std::nullopt;
        return checkpoint_from_json(json::parse(read_file(path)));
    }

    auto hunt_result(const SearchCheckpoint & c, bool dedup) -> json
    {
        json result = to_json(c);
        if (dedup) {
            json distinct = json::array();
            for (auto & d : distinct_up_to_isomorphism(c.counterexamples))
                distinct.push_back(write_edge_list(d));
            result["distinct_counterexamples"] = distinct;
        }
        return result;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "k-kernels, closures and symmetric-arc cycle conditions in digraphs" };
    app.require_subcommand(1);

    string input_path = "-";
    int m = 1, k = 2, family_k = 3;
    optional<int> l, cap;
    string format = "edge", resume_path, checkpoint_path;
    unsigned shards = 1;
    int n = 4;
    std::uint64_t trials = 0, seed = 0;
    double sym_bias = 0.5;
    bool dedup = false, verify = false;
    optional<std::uint64_t> from, to, stop_at;
    std::uint64_t disjoint_trials = 100000;
    int sweep_max_n = 5;

    auto closure_cmd = app.add_subcommand("closure", "m-closure of a digraph");
    closure_cmd->add_option("input", input_path, "edge-list file, - for stdin");
    closure_cmd->add_option("--m", m, "closure order (>= 1)")->required();

    auto kernel_cmd = app.add_subcommand("kernel", "find a k-kernel, or a (k,l)-kernel with --l");
    kernel_cmd->add_option("input", input_path, "edge-list file, - for stdin");
    kernel_cmd->add_option("--k", k, "independence distance (>= 2)");
    kernel_cmd->add_option("--l", l, "absorbency distance (default k-1)");

    auto premise_cmd = app.add_subcommand("check-premise", "check the symmetric-arc cycle condition for k");
    premise_cmd->add_option("input", input_path, "edge-list file, - for stdin");
    premise_cmd->add_option("--k", k, "k (>= 2)")->required();

    auto cycles_cmd = app.add_subcommand("cycles", "list simple cycles with their symmetric-arc counts");
    cycles_cmd->add_option("input", input_path, "edge-list file, - for stdin");
    cycles_cmd->add_option("--cap", cap, "maximum cycle length");

    auto family_cmd = app.add_subcommand("family", "emit the sharpness digraph H_k");
    family_cmd->add_option("--k", family_k, "k (>= 3)")->required();
    family_cmd->add_option("--format", format, "edge, dot or json")->check(CLI::IsMember({ "edge", "dot", "json" }));
    family_cmd->add_flag("--verify", verify, "check its claimed properties instead of printing it");

    auto hunt_cmd = app.add_subcommand("hunt", "exhaustive counterexample search over labelled digraphs");
    hunt_cmd->add_option("--k", k, "k (>= 3)")->required();
    hunt_cmd->add_option("--n", n, "vertex count (1..6)")->required();
    hunt_cmd->add_option("--shards", shards, "worker threads");
    hunt_cmd->add_option("--resume", resume_path, "checkpoint to continue from");
    hunt_cmd->add_option("--checkpoint", checkpoint_path, "checkpoint file to keep updated (default: the --resume file)");
    hunt_cmd->add_option("--from", from, "first cursor");
    hunt_cmd->add_option("--to", to, "one past the last cursor");
    hunt_cmd->add_option("--stop-at", stop_at, "pause when the cursor reaches this value");
    hunt_cmd->add_flag("--dedup", dedup, "also report counterexamples up to isomorphism");

    auto random_cmd = app.add_subcommand("random-hunt", "randomised counterexample search");
    random_cmd->add_option("--k", k, "k (>= 3)")->required();
    random_cmd->add_option("--n", n, "vertex count")->required();
    random_cmd->add_option("--trials", trials, "number of sampled digraphs")->required();
    random_cmd->add_option("--seed", seed, "random seed");
    random_cmd->add_option("--sym-bias", sym_bias, "probability that a pair is symmetric");
    random_cmd->add_option("--shards", shards, "worker threads");
    random_cmd->add_option("--resume", resume_path, "checkpoint to continue from");
    random_cmd->add_option("--checkpoint", checkpoint_path, "checkpoint file to keep updated (default: the --resume file)");
    random_cmd->add_option("--stop-at", stop_at, "pause after this many trials");
    random_cmd->add_flag("--dedup", dedup, "also report counterexamples up to isomorphism");

    auto verify_cmd = app.add_subcommand("verify-paper", "run the full verification suite");
    verify_cmd->add_option("--shards", shards, "worker threads for the sweeps");
    verify_cmd->add_option("--seed", seed, "seed for the randomised items");
    verify_cmd->add_option("--disjoint-trials", disjoint_trials, "randomised realisations for the disjoint-path item");
    verify_cmd->add_option("--sweep-max-n", sweep_max_n, "largest vertex count in the exhaustive sweeps");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage_error;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (*closure_cmd) {
            auto input = load_input(input_path);
            auto h = closure(input.digraph, m);
            emit_report("closure", input.bytes, json{ { "m", m }, { "digraph", digraph_json(h) },
                    { "edge_list", write_edge_list(h) } }, start);
        }
        else if (*kernel_cmd) {
            auto input = load_input(input_path);
            int absorb = l.value_or(k - 1);
            auto cert = find_kl_kernel(input.digraph, k, absorb);
            emit_report("kernel", input.bytes, json{ { "k", k }, { "l", absorb }, { "found", cert.has_value() },
                    { "certificate", cert ? to_json(*cert) : json(nullptr) } }, start);
        }
        else if (*premise_cmd) {
            auto input = load_input(input_path);
            emit_report("check-premise", input.bytes, json{ { "k", k }, { "duchet", duchet_premise(input.digraph) },
                    { "verdict", to_json(conjecture_premise(input.digraph, k)) } }, start);
        }
        else if (*cycles_cmd) {
            auto input = load_input(input_path);
            json cycles = json::array();
            for_each_simple_cycle(input.digraph, cap, [&] (const Cycle & c) {
                cycles.push_back(json{ { "cycle", c.vertices }, { "len", c.length() },
                        { "sym", cycle_symmetric_count(input.digraph, c) } });
                return true;
            });
            emit_report("cycles", input.bytes, json{ { "count", cycles.size() }, { "cycles", cycles } }, start);
        }
        else if (*family_cmd) {
            auto instance = build_h_k(family_k);
            if (verify) {
                auto report = verify_h_k(instance);
                emit_report("family", std::nullopt, json{ { "k", family_k }, { "passed", report.passed },
                        { "mismatches", report.mismatches }, { "narrative", report.narrative() } }, start);
                return report.passed ? ok : property_failure;
            }
            if (format == "dot")
                cout << write_dot(instance.digraph, instance.labels);
            else if (format == "json")
                emit_report("family", std::nullopt, json{ { "k", family_k }, { "digraph", digraph_json(instance.digraph) },
                        { "labels", instance.labels } }, start);
            else
                cout << write_edge_list(instance.digraph, instance.labels);
        }
        else if (*hunt_cmd) {
            HuntOptions o;
            o.k = k;
            o.n = n;
            o.shards = shards;
            o.from = from;
            o.to = to;
            o.stop_at = stop_at;
            o.on_flush = checkpoint_writer(checkpoint_path.empty() ? resume_path : checkpoint_path);
            auto result = hunt(o, load_checkpoint(resume_path));
            emit_report("hunt", std::nullopt, hunt_result(result, dedup), start);
            return result.counterexamples.empty() ? ok : property_failure;
        }
        else if (*random_cmd) {
            RandomHuntOptions o;
            o.k = k;
            o.n = n;
            o.trials = trials;
            o.seed = seed;
            o.sym_bias = sym_bias;
            o.shards = shards;
            o.stop_at = stop_at;
            o.on_flush = checkpoint_writer(checkpoint_path.empty() ? resume_path : checkpoint_path);
            auto result = random_hunt(o, load_checkpoint(resume_path));
            emit_report("random-hunt", std::nullopt, hunt_result(result, dedup), start);
            return result.counterexamples.empty() ? ok : property_failure;
        }
        else if (*verify_cmd) {
            VerificationOptions o;
            o.shards = shards;
            o.disjoint_trials = disjoint_trials;
            o.sweep_max_n = sweep_max_n;
            if (seed != 0)
                o.seed = seed;
            json items = json::array();
            bool all_passed = true;
            for (auto & r : run_verification(o)) {
                cerr << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.seconds << " s)\n"
                    << "      " << r.detail << '\n';
                items.push_back(json{ { "id", r.id }, { "name", r.name }, { "passed", r.passed }, { "detail", r.detail },
                        { "seconds", r.seconds } });
                all_passed = all_passed && r.passed;
            }
            emit_report("verify-paper", std::nullopt, json{ { "passed", all_passed }, { "items", items } }, start);
            return all_passed ? ok : property_failure;
        }
    }
    catch (const ParseError & e) {
        cerr << "input error: " << e.what() << '\n';
        return usage_error;
    }
    catch (const CheckpointError & e) {
        cerr << "checkpoint error: " << e.what() << '\n';
        return usage_error;
    }
    catch (const std::invalid_argument & e) {
        cerr << "error: " << e.what() << '\n';
        return usage_error;
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << '\n';
        return usage_error;
    }
    return ok;
}
