#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tmts/model.hpp"
#include "tmts/solver.hpp"

namespace tmts {

/// FNV-1a 64-bit over a byte span.
std::uint64_t fnv1a64(std::span<const unsigned char> bytes);

/// Content address of a solve: hash of every physics-relevant field of
/// params and basis, rendered with 17 significant digits.
std::string cache_key(const ModelParams& params, const BasisSpec& basis);

/// Stores energies plus the full coefficient table. Round-trips restore the
/// arrays bit-exactly. Writes are atomic (temp file + rename).
void cache_store(const std::filesystem::path& dir, const ModelParams& params,
                 const BasisSpec& basis, const EigenResult& eig);

/// Returns the cached result, or nullopt on miss, dimension mismatch or
/// checksum failure (corrupt entries are treated as misses).
std::optional<EigenResult> cache_load(const std::filesystem::path& dir,
                                      const ModelParams& params, const BasisSpec& basis);

/// Energies-only variants, used by convergence ladders.
void cache_store_energies(const std::filesystem::path& dir, const ModelParams& params,
                          const BasisSpec& basis, std::span<const double> energies);
std::optional<std::vector<double>> cache_load_energies(const std::filesystem::path& dir,
                                                       const ModelParams& params,
                                                       const BasisSpec& basis);

}  // namespace tmts
