#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace betaturan::cli {

enum class Command { eval, coeffs, scan, identities, proofcheck, bounds, optimize };
enum class OutputFormat { csv, json };

const char* to_string(Command c);
const char* to_string(OutputFormat f);

// Parsed invocation; every field has a default and the whole struct is echoed
// into the report header.  Identical config (including seed) must produce
// byte-identical reports.
struct RunConfig {
    Command command = Command::eval;
    std::vector<double> grid_a;
    std::vector<double> grid_b;
    std::vector<double> grid_alpha;
    std::vector<double> grid_beta;
    std::vector<double> grid_x;
    int order = 50;
    double tol = 1e-9;
    std::uint64_t seed = 12345;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;                  // empty writes to stdout
    std::vector<std::string> positional;   // eval key=value args, optimize instance path
};

// Parses "1,2,3" or "lo:hi:step" into a value list.  Throws domain_error on
// malformed specs.
std::vector<double> parse_grid_spec(const std::string& spec);

// Canonical single-line echo of the parsed config (goes into report headers).
std::string config_echo(const RunConfig& config);

// Executes the selected command.  Returns 0 when every check passed, 1 when
// any violation above the noise floor was recorded.
int run(const RunConfig& config);

// argv-level entry: parse, run, map usage errors to exit code 2.
int main_entry(int argc, const char* const* argv);

}  // namespace betaturan::cli
