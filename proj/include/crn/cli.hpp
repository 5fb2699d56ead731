#pragma once

#include <cstdint>
#include <string>

namespace crn {

// One reproducible run of the tool. `run` never touches the process
// environment: it reads the input files, produces the full report text and
// an exit status, and leaves I/O of the report to the caller.
struct RunConfig {
    enum class Command { analyze, translate, basis, verify, oracle };
    enum class Format { text, json };

    Command command = Command::analyze;
    std::string network_path;
    std::string scheme_path;  // required for translate/basis/verify/oracle
    std::string output;       // empty -> stdout (handled by the caller)
    Format format = Format::text;
    uint64_t seed = 0;
    int trials = 20;
    double tol = 1e-6;
};

struct RunResult {
    int exit_code = 0;  // 0 pass, 1 analysis failure, 2 input error
    std::string output; // report, newline terminated
};

RunResult run(const RunConfig& config);

}  // namespace crn
