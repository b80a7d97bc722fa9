/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// Runs every acceptance item and prints one PASS/FAIL line per item.

#include <kkernel/verification.hh>

#include <cstdlib>
#include <iostream>
#include <thread>

using namespace kkernel;

auto main(int argc, char * argv[]) -> int
{
    VerificationOptions options;
    options.shards = std::max(8u, std::thread::hardware_concurrency());
    if (argc > 1)
        options.shards = static_cast<unsigned>(std::atoi(argv[1]));

    bool all = true;
    for (auto & r : run_verification(options)) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name
            << "  [" << r.seconds << " s]\n        " << r.detail << '\n';
        all = all && r.passed;
    }
    std::cout << (all ? "all acceptance criteria passed" : "acceptance criteria FAILED") << std::endl;
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
