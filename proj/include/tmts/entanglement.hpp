#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "tmts/solver.hpp"

namespace tmts {

/// 2x2 electronic reduced density matrix in the rotated basis {|1>>,|2>>}.
/// Coefficients are real, so rho21 = rho12.
struct DensityMatrix2 {
  double rho11 = 0.0;
  double rho22 = 0.0;
  double rho12 = 0.0;

  double trace() const { return rho11 + rho22; }
  /// Eigenvalues, larger first.
  std::array<double, 2> eigenvalues() const;
};

/// Surface-resolved decomposition of an eigenstate: s_ab is the overlap of
/// the vibrational components on surfaces A and B, dp_ab half their
/// population difference. Note rho12 = -dp_ab for the stored rotated-basis
/// density matrix; only the magnitude enters the entropy.
struct SurfaceSplit {
  double s_ab = 0.0;
  double dp_ab = 0.0;
};

struct EntanglementRecord {
  std::size_t k = 0;
  double energy = 0.0;
  double s_vn = 0.0;
  double s_ab = 0.0;
  double dp_ab = 0.0;
};

/// Half-open index interval [lo, hi).
struct IndexRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t size() const { return hi > lo ? hi - lo : 0; }
};

/// rho11 = sum c1^2, rho22 = sum c2^2, rho12 = sum c1 c2.
/// Throws if the combined vector is not normalized to 1 within 1e-10.
DensityMatrix2 reduced_density(std::span<const double> c1, std::span<const double> c2);

/// -l1 ln l1 - l2 ln l2 in nats, with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix2& rho);

/// s_ab = sum cA cB, dp_ab = (|cA|^2 - |cB|^2)/2. Throws on non-normalized input.
SurfaceSplit surface_decomposition(std::span<const double> ca, std::span<const double> cb);

/// Entropy through the closed-form eigenvalues 1/2 +- sqrt(s_ab^2 + dp_ab^2).
/// Throws when the radicand exceeds 1/4 beyond tolerance.
double entropy_from_decomposition(double s_ab, double dp_ab);

struct EntanglementSpectrum {
  std::vector<EntanglementRecord> records;
  /// max over k of |entropy(direct) - entropy(decomposition)|
  double max_identity_dev = 0.0;
};

/// One record per eigenstate in `range`, parallel over k with deterministic
/// output. The entropy is computed along both routes (reduced density matrix
/// and surface decomposition); a disagreement beyond identity_tol throws,
/// since it signals an assembly bug. Records store the direct value.
EntanglementSpectrum entanglement_spectrum(const EigenResult& eig, IndexRange range,
                                           double identity_tol = 1e-10);

namespace serial {
/// Single-threaded twin of entanglement_spectrum, bitwise-identical output.
EntanglementSpectrum entanglement_spectrum(const EigenResult& eig, IndexRange range,
                                           double identity_tol = 1e-10);
}  // namespace serial

}  // namespace tmts
