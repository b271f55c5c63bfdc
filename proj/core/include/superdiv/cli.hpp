#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace superdiv {

struct CommandReport {
    std::string command;
    std::string status = "pass";              // pass | fail | error
    std::vector<std::string> witness;         // textual polynomials / payloads
    std::vector<std::pair<long, long>> dims;  // dimension pairs
    long runtime_ms = 0;
};

// Runs one command line (program name excluded). Human-readable or --json
// output goes to `out`, diagnostics to `err`. Identical argv and input files
// produce byte-identical output. Exit code: 0 = pass, 1 = completed with a
// verified mismatch, 2 = usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superdiv
