#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mwtate::checks {

struct SuiteOutcome {
    bool pass = true;
    std::size_t cases = 0;
    std::size_t failed = 0;
    /// The first few failure descriptions.
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    /// Counts one case; records msg() when ok is false.
    template <class Msg>
    void expect(bool ok, Msg&& msg)
    {
        ++cases;
        if (ok)
            return;
        pass = false;
        if (++failed <= 8)
            failures.push_back(msg());
    }
};

struct Suite {
    int id;
    std::string name;
    std::string title;
    std::function<SuiteOutcome(std::uint64_t seed)> run;
};

/// The acceptance criteria in order, ids 1..13. Criteria 2 and 3 draw the same corpus from seed.
const std::vector<Suite>& acceptance_suites();
/// By name or by decimal id; nullptr if unknown.
const Suite* find_suite(std::string_view key);

}  // namespace mwtate::checks
