// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance [name-or-id ...] [--seed N] [--verbose]

#include "suites.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

using namespace mwtate::checks;

int main(int argc, char** argv)
{
    std::vector<const Suite*> selected;
    std::uint64_t seed = 20240611;
    bool verbose = false;
    for (int a = 1; a < argc; ++a) {
        std::string arg = argv[a];
        if (arg == "--seed" && a + 1 < argc) {
            seed = std::stoull(argv[++a]);
        } else if (arg == "--verbose") {
            verbose = true;
        } else if (const Suite* s = find_suite(arg)) {
            selected.push_back(s);
        } else {
            std::cerr << "unknown criterion '" << arg << "'\n";
            return 64;
        }
    }
    if (selected.empty())
        for (const auto& s : acceptance_suites())
            selected.push_back(&s);

    bool all = true;
    for (const Suite* s : selected) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteOutcome out;
        try {
            out = s->run(seed);
        } catch (const std::exception& e) {
            out.pass = false;
            out.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << " [" << s->id << "] " << s->name << ": " << s->title << " ("
                  << out.cases - out.failed << "/" << out.cases << " cases, " << std::fixed << std::setprecision(2) << secs << "s)\n";
        if (!out.pass || verbose) {
            for (const auto& f : out.failures)
                std::cout << "    failure: " << f << "\n";
            if (out.failed > out.failures.size())
                std::cout << "    ... " << out.failed - out.failures.size() << " more\n";
        }
        for (const auto& n : out.notes)
            std::cout << "    note: " << n << "\n";
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
