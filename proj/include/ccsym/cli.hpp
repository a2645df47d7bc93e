#pragma once

#include <string>
#include <vector>

namespace ccsym {

struct CliResult {
    int exit_code;
    std::string output;
};

// Runs one command (args exclude the program name) and returns its stdout
// payload.  Exit codes: 0 computation done / law holds, 1 assertion failed,
// 2 usage or parse error.
CliResult run_cli(std::vector<std::string> args);

}  // namespace ccsym
