#ifndef THETAFORM_CLI_HPP
#define THETAFORM_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <thetaform/series.hpp>

namespace thetaform
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1; // identity mismatch or tolerance breach
inline constexpr int exit_residual = 2; // cusp basis does not span the residual
inline constexpr int exit_usage = 64;

inline constexpr QSeries::exponent_t min_order = 40;

enum class OutputFormat { text, json };

struct RunConfig {
    QSeries::exponent_t order = 400;
    std::optional<double> tol; // per-check default when unset
    OutputFormat output = OutputFormat::text;
    unsigned jobs = 1;         // 0 means one per hardware thread

    // Throws invalid_argument for order < 40, tol outside (0, 1).
    void validate() const;
    unsigned worker_count() const;
};

struct VerifySelection {
    std::vector<std::string> ids;     // empty: the whole catalog
    std::optional<std::string> group; // "theta-powers", "identity-list" or "prelim"
    bool variants = false;            // run the known-wrong forms instead
};

int cmd_verify(const RunConfig &config, const VerifySelection &sel, std::ostream &out);
int cmd_decompose(long two_k, const std::optional<std::string> &basis_file, const RunConfig &config,
                  std::ostream &out);
int cmd_poly(const std::string &family, long n, const RunConfig &config, std::ostream &out);

// Parses argv-style arguments (without the program name) and runs the
// command; library errors become exit codes with a message on `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace thetaform

#endif
