#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tmts/model.hpp"

namespace tmts {

/// Full eigendecomposition of the two-surface Hamiltonian. Column k of
/// `coeffs` is the k-th eigenvector; its first M entries are the expansion
/// coefficients on surface A, the next M those on surface B. All
/// coefficients are real. Sign convention: in every eigenvector the first
/// entry of largest magnitude is positive.
struct EigenResult {
  std::size_t vib_dim = 0;            ///< M
  std::vector<double> energies;       ///< 2M, ascending
  std::vector<double> coeffs;         ///< (2M)x(2M), column-major, column k = eigenvector k
  std::optional<std::size_t> converged_upto;  ///< highest certified eigenindex, if scanned

  std::size_t dim() const { return energies.size(); }

  std::span<const double> vector(std::size_t k) const {
    return {coeffs.data() + k * dim(), dim()};
  }
  std::span<const double> coeffs_A(std::size_t k) const {
    return {coeffs.data() + k * dim(), vib_dim};
  }
  std::span<const double> coeffs_B(std::size_t k) const {
    return {coeffs.data() + k * dim() + vib_dim, vib_dim};
  }
};

/// All eigenpairs of a dense symmetric matrix (LAPACK dsyevr).
/// Throws std::runtime_error with the failing index on non-convergence.
EigenResult eigensolve_sym(const SymMatrix& H);

/// Eigenvalues only; cheaper when no coefficients are needed.
std::vector<double> eigenvalues_sym(const SymMatrix& H);

/// Electronic basis change |A>,|B> -> |1>>,|2>> with
/// |1>> = (|A>+|B>)/sqrt2, |2>> = (-|A>+|B>)/sqrt2:
/// c1 = (a+b)/sqrt2, c2 = (b-a)/sqrt2. Throws on length mismatch.
void to_rotated_basis(std::span<const double> a, std::span<const double> b,
                      std::span<double> c1, std::span<double> c2);

/// Inverse transform: a = (c1-c2)/sqrt2, b = (c1+c2)/sqrt2.
void from_rotated_basis(std::span<const double> c1, std::span<const double> c2,
                        std::span<double> a, std::span<double> b);

/// Per-level energy drift between consecutive basis rungs.
struct ConvergenceTable {
  std::vector<BasisSpec> ladder;
  /// drift[r][k] = |E_k(rung r+1) - E_k(rung r)|, length = dim of rung r.
  std::vector<std::vector<double>> drift;
  /// Energies of coarse and fine rung of the final pair.
  std::vector<double> energies_coarse;
  std::vector<double> energies_fine;
  double tolerance = 1e-6;
  /// Largest k such that every drift of the final pair up to k is below
  /// tolerance; empty when not even k = 0 qualifies.
  std::optional<std::size_t> converged_upto;
};

using EnergySolver =
    std::function<std::vector<double>(const ModelParams&, const BasisSpec&)>;

/// Runs the ladder and certifies the converged portion of the spectrum.
/// Rungs must grow monotonically in (n_max_x, n_max_y) and share the basis
/// frequencies. `solve` may be empty, in which case each rung is assembled
/// and diagonalized directly.
ConvergenceTable convergence_scan(const ModelParams& params,
                                  std::span<const BasisSpec> ladder,
                                  double tolerance = 1e-6,
                                  const EnergySolver& solve = {});

}  // namespace tmts
