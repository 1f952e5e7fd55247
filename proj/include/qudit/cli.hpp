#ifndef QUDIT_CLI_HPP
#define QUDIT_CLI_HPP

#include "qudit/qcs.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qudit::cli {

/// Malformed command-line input (bad flag value, amplitude syntax, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kDomainError = 3,
    kNumericalError = 4,
    kIoError = 5,
};

enum class Family { alpha, beta, cat_even, cat_odd, gamma };
enum class Format { csv, json };

struct RunConfig {
    std::string command;
    int dim = 3;
    std::string amplitude = "Td/2";
    Family family = Family::alpha;
    StateKind cat_kind = StateKind::alpha;
    int nq = 201;
    int np = 201;
    int ntheta = 181;
    double window = 0.0;  // Wigner half-width; 0 selects outer_radius + 2
    std::string out;      // empty writes to stdout
    Format format = Format::csv;
    std::vector<int> dims = {2, 3, 4, 5, 10, 11, 20, 21, 100, 101};
    int points = 64;
};

/// "re", "re,im", "Td" or "Td/2" (resolved through quasiperiod(dim)).
Complex parse_amplitude(std::string_view token, int dim);
Family parse_family(std::string_view token);

QuditState build_state(const RunConfig& cfg);
std::string describe(const RunConfig& cfg);

/// Command bodies; each returns the file content it would write.
std::string cmd_state(const RunConfig& cfg);
std::string state_table(const QuditState& s);
std::string cmd_wigner(const RunConfig& cfg);
std::string cmd_tomogram(const RunConfig& cfg);
std::string cmd_photon_dist(const RunConfig& cfg);
std::string cmd_fidelity_table(const std::vector<int>& dims, Format format);
std::string cmd_volume_sweep(const RunConfig& cfg, int n_points);

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qudit::cli

#endif  // QUDIT_CLI_HPP
