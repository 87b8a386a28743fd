#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "tmts/config.hpp"
#include "tmts/entanglement.hpp"
#include "tmts/solver.hpp"

// End-to-end run drivers shared by the command-line tool and the
// integration suites. Each command writes CSV (and optionally SVG) files
// into cfg.out_dir and returns 0 on success; errors are reported as
// exceptions. Eigensolutions are cached under cfg.cache_path(), keyed by
// the physics fields of the configuration.

namespace tmts {

/// Creates the directory and probes it with a scratch file.
/// Throws UnwritableOutputDir on failure.
struct UnwritableOutputDir : std::runtime_error {
  using std::runtime_error::runtime_error;
};
void ensure_writable_dir(const std::filesystem::path& dir);

/// Cache-aware full solve at the given point.
EigenResult solve_full(const RunConfig& cfg, const ModelParams& params,
                       const BasisSpec& basis);

/// Cache-aware energies-only solve.
std::vector<double> solve_energies(const RunConfig& cfg, const ModelParams& params,
                                   const BasisSpec& basis);

/// Runs the configured ladder for `params` and returns the certification.
ConvergenceTable certify_convergence(const RunConfig& cfg, const ModelParams& params);

int cmd_spectrum(const RunConfig& cfg);
int cmd_entanglement(const RunConfig& cfg);
/// When `energies_file` is set the spectrum is read from that CSV
/// (column k,energy) instead of a solve; amplitude statistics are skipped.
int cmd_stats(const RunConfig& cfg,
              const std::optional<std::filesystem::path>& energies_file = {});
int cmd_density(const RunConfig& cfg, std::size_t k, Surface surface);
int cmd_sweep(const RunConfig& cfg);

/// Subdirectory name for one sweep point.
std::string sweep_point_dirname(double J, double theta);

}  // namespace tmts
