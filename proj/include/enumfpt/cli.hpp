#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace enumfpt::cli {

enum class Mode { All, Min };
enum class Format { Text, JsonLines };

struct RunConfig {
    std::string problem;   // cluster-editing, chordal-completion, triangle-deletion,
                           // closest-string, weak-backdoor, strong-backdoor, minones
    std::string input_path;
    std::optional<int> parameter; // k; for closest-string an optional override of d
    Mode mode = Mode::All;
    std::optional<std::uint64_t> limit; // stop after this many solutions
    std::string base_class = "horn";    // backdoor problems only
    bool stats = false;
    bool oracle_check = false;
    Format format = Format::Text;
};

// Wall-clock delays around each emission: entry 0 is the precalculation time,
// the last entry the postcalculation time, so there is always one more delay
// than solutions.
struct DelayReport {
    std::vector<std::chrono::microseconds> delays;
    std::chrono::microseconds max_delay{0};
    std::uint64_t solutions = 0;
};

// Streams solutions to `out` (one per line, enumeration order); diagnostics
// and the optional DelayReport go to `err`. Exit status: 0 success, 1 oracle
// divergence, 2 parse/config error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

const std::vector<std::string>& problem_names();

} // namespace enumfpt::cli
