#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tmts/model.hpp"
#include "tmts/realspace.hpp"

namespace tmts {

struct StatsOptions {
  std::size_t window_lo = 200;   ///< first eigenindex entering statistics
  std::size_t window_hi = 0;     ///< past-the-end index; 0 = converged_upto + 1
  int unfold_degree = 6;
  int nnsd_bins = 40;
  int amplitude_bins = 60;
  double delta3_l_min = 5.0;
  double delta3_l_max = 25.0;
  int delta3_l_steps = 9;
  int delta3_windows = 200;
};

/// One run = model + basis + analysis knobs. Parsed from a key=value file;
/// every key has a default, so an empty file is a valid run.
struct RunConfig {
  ModelParams params;
  BasisSpec basis;

  std::vector<std::pair<int, int>> ladder = {{50, 50}, {60, 60}};
  double drift_tol = 1e-6;

  StatsOptions stats;
  GridSpec grid;

  std::vector<double> sweep_J;
  std::vector<double> sweep_theta;

  std::string out_dir = "out";
  std::string cache_dir;  ///< empty = <out_dir>/cache
  bool use_cache = true;
  std::uint64_t seed = 12345;
  int jobs = 2;
  bool svg = true;
  double memory_budget_gb = 8.0;

  std::filesystem::path cache_path() const {
    return cache_dir.empty() ? std::filesystem::path(out_dir) / "cache"
                             : std::filesystem::path(cache_dir);
  }
  AssemblyOptions assembly_options() const {
    return {static_cast<std::size_t>(memory_budget_gb * (1ull << 30))};
  }
};

/// Parses `key = value` lines; '#' starts a comment. Unknown keys throw.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::filesystem::path& path);

/// Canonical key=value listing of every config field, one per line, in the
/// order the parser documents them. Used for the metadata block of every
/// output file; identical configs echo identically.
std::vector<std::string> config_echo(const RunConfig& cfg);

/// Number formatted with 17 significant digits (round-trip exact).
std::string format_g17(double v);

}  // namespace tmts
