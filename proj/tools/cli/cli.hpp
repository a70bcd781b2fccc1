#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace primestar::cli {

enum ExitCode : int {
    kAffirmative = 0,
    kNegative = 1,
    kUsage = 2,
    kBudget = 3,
};

enum class OutputMode { json, human };

struct RunConfig {
    unsigned base = 10;
    std::uint64_t k_budget = 100'000;
    std::uint64_t n_limit = 64;
    unsigned max_len = 18;
    std::uint64_t order_bound = 100'000'000;
    /// Largest bK whose (bK)!+1 is written out in full.
    std::uint64_t factorial_bound = 20;
    OutputMode mode = OutputMode::json;
    std::uint64_t seed = 0x5eed'0f'b1u;
    unsigned rounds = 16;
};

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out`, diagnostics and usage to `err`; `in` backs the "-" file argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace primestar::cli
