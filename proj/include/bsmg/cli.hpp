#pragma once

#include <cstdint>
#include <string>

namespace bsmg {

struct RunConfig {
    std::string command;
    char type = 'A';
    int rank = 2;
    bool affine = false;
    std::uint32_t characteristic = 0;
    std::string word;   // comma-separated simple indices
    std::string target; // word for the target element x
    int n = 1;
    std::string cache_dir; // empty = no cache
    int threads = 1;
    bool pretty = false;
    bool allow_nonreduced = false;
    bool verify_cache = false;
};

struct RunResult {
    std::string json_text;
    int exit_code = 0;
};

// Executes one CLI command and renders the result (or a machine-readable
// error document). Exit codes: 0 success, 2 GKM refusal, 1 anything else.
RunResult dispatch(const RunConfig& config);

} // namespace bsmg
