// Command implementations behind the walshcode executable. Everything writes
// to caller-supplied streams so the commands can be driven from tests.
#ifndef WALSHCODE_TOOLS_COMMANDS_HPP
#define WALSHCODE_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "walshcode/io.hpp"
#include "walshcode/linear_code.hpp"

namespace walshcode::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A code given on the command line: a catalog name or a generator file.
struct CodeSource {
    std::string name;
    BinaryCode code;
};

/// Throws std::invalid_argument when `spec` is neither a valid catalog name
/// nor a readable generator-matrix file.
CodeSource resolve_code(const std::string& spec);

/// Minimum distance by the cheapest applicable route: enumeration of C
/// (k <= max_k), enumeration of the dual plus MacWilliams (n <= 96), or a
/// column search on the dual generator when d <= 4. Empty if none applies.
std::optional<std::size_t> minimum_distance_auto(const BinaryCode& code, std::size_t max_k);

struct Analysis {
    io::Json report;
    bool complete = false;    // every section was computed
    bool consistent = true;   // false when the two weight routes disagree
};

Analysis analyze(const std::string& name, const BinaryCode& code, std::size_t max_k);

/// Flat "table,key,value" projection of an analysis report.
std::string analysis_csv(const io::Json& report);

/// Writes `contents` to a temporary sibling and renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace walshcode::cli

#endif  // WALSHCODE_TOOLS_COMMANDS_HPP
