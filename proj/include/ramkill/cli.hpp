#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ramkill::cli {

struct RunConfig {
    std::string command;           // validate | color | verify | export-dot
    std::string input_path;        // unused with random = true
    std::optional<int> dimension;  // overrides the file's dim line
    std::string scheme = "square";
    long long r = 2;
    bool symbolic_check = false;
    bool json = false;
    bool serial = false;  // disable the parallel scenario loop
    bool random = false;  // generate the arrangement instead of reading it
    std::uint64_t seed = 1;
    int random_vertices = 8;
    std::string output_path;  // export-dot destination, empty = stdout
};

// Exit codes: 0 success/certified, 1 verification found a counterexample,
// 2 invalid input or configuration, 3 internal invariant violation.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ramkill::cli
