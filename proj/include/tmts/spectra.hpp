#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tmts/entanglement.hpp"
#include "tmts/solver.hpp"

// Spectral fluctuation diagnostics: unfolding, nearest-neighbor spacing
// distribution, Delta3 rigidity and eigenvector amplitude statistics, with
// the standard Wigner/Poisson/Gaussian reference curves.

namespace tmts {

/// Spectrum mapped to unit mean level density.
struct UnfoldedSpectrum {
  std::vector<double> values;  ///< strictly increasing, unit mean spacing
  int fit_degree = 0;

  double mean_spacing() const;
};

struct Histogram {
  std::vector<double> edges;    ///< bins + 1 ascending edges
  std::vector<std::size_t> counts;
  std::vector<double> density;  ///< normalized so that sum(density * width) = 1

  double center(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
};

/// Histogram over [min(samples), max(samples)] with `bins` uniform bins.
Histogram make_histogram(std::span<const double> samples, int bins);

/// Wigner surmise P(s) = (pi s / 2) exp(-pi s^2 / 4) and its CDF.
double wigner_pdf(double s);
double wigner_cdf(double s);
/// Poisson reference P(s) = exp(-s) and its CDF.
double poisson_pdf(double s);
double poisson_cdf(double s);
/// Standard normal pdf/cdf.
double normal_pdf(double z);
double normal_cdf(double z);

/// Kolmogorov-Smirnov distance between a sample and a reference CDF.
double ks_distance(std::vector<double> samples, double (*cdf)(double));

/// Maps energies through a Chebyshev least-squares fit of the cumulative
/// staircase N(E) (counted at k + 1/2). Requires >= 50 levels and degree in
/// [3, 12]; throws on a degenerate fit or a non-monotonic result.
UnfoldedSpectrum unfold(std::span<const double> energies, int degree);

struct NnsdResult {
  std::vector<double> spacings;
  Histogram hist;
  double ks_wigner = 0.0;
  double ks_poisson = 0.0;
};

/// Nearest-neighbor spacing distribution of the unfolded spectrum.
/// Requires >= 200 spacings.
NnsdResult nnsd(const UnfoldedSpectrum& spec, int bins);

/// Mean least-squares deviation of the spectral staircase from its best
/// linear fit over n_windows random intervals of length L; the staircase
/// integral is evaluated in closed form. Window starts are drawn from a
/// generator seeded with `seed`, so results are reproducible. Requires
/// L >= 1 and a spectral span of at least 2L.
double delta3(const UnfoldedSpectrum& spec, double L, int n_windows, std::uint64_t seed);

namespace serial {
/// Single-threaded twin of delta3, bitwise-identical output.
double delta3(const UnfoldedSpectrum& spec, double L, int n_windows, std::uint64_t seed);
}  // namespace serial

struct AmplitudeStats {
  Histogram hist;
  double ks_normal = 0.0;
  std::size_t pooled = 0;  ///< number of pooled coefficients
};

/// Pools all expansion coefficients of the eigenvectors in `window`,
/// standardized per eigenstate to zero mean and unit variance, and compares
/// against the standard normal. Throws on an empty window.
AmplitudeStats amplitude_stats(const EigenResult& eig, IndexRange window, int bins);

}  // namespace tmts
