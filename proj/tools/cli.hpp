#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stabent/circuit.hpp"

namespace stabent::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kBackendMismatch = 3,
    kPromiseViolated = 4,
};

enum class Backend { Auto, Tableau, Dense };

// The backend `auto` resolves to: tableau for pure-Clifford circuits, dense
// otherwise.
Backend resolve_backend(Backend requested, const Circuit& circuit);

// Parses "1,3,4" (1-based) into zero-based qubit indices.
std::vector<std::size_t> parse_cut_list(const std::string& text, std::size_t n);

// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabent::cli
