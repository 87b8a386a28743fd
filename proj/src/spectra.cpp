#include "tmts/spectra.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace tmts {

double UnfoldedSpectrum::mean_spacing() const {
  if (values.size() < 2) return 0.0;
  return (values.back() - values.front()) / static_cast<double>(values.size() - 1);
}

Histogram make_histogram(std::span<const double> samples, int bins) {
  if (samples.empty()) throw std::invalid_argument("histogram of empty sample");
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
  const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
  double lo = *mn, hi = *mx;
  if (hi <= lo) hi = lo + 1.0;  // degenerate sample: one unit-wide bin range
  // nudge the top edge so the maximum falls inside the last bin
  hi += (hi - lo) * 1e-12;

  Histogram h;
  h.edges.resize(bins + 1);
  for (int i = 0; i <= bins; ++i)
    h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / bins;
  h.counts.assign(bins, 0);
  const double width = (hi - lo) / bins;
  for (double s : samples) {
    auto b = static_cast<std::size_t>((s - lo) / width);
    if (b >= static_cast<std::size_t>(bins)) b = bins - 1;
    ++h.counts[b];
  }
  h.density.resize(bins);
  const double norm = 1.0 / (static_cast<double>(samples.size()) * width);
  for (int i = 0; i < bins; ++i) h.density[i] = static_cast<double>(h.counts[i]) * norm;
  return h;
}

double wigner_pdf(double s) {
  const double q = std::numbers::pi * s / 2.0;
  return q * std::exp(-0.5 * q * s);
}
double wigner_cdf(double s) {
  return s <= 0.0 ? 0.0 : 1.0 - std::exp(-std::numbers::pi * s * s / 4.0);
}
double poisson_pdf(double s) { return std::exp(-s); }
double poisson_cdf(double s) { return s <= 0.0 ? 0.0 : 1.0 - std::exp(-s); }
double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}
double normal_cdf(double z) { return 0.5 * std::erfc(-z * std::numbers::sqrt2 / 2.0); }

double ks_distance(std::vector<double> samples, double (*cdf)(double)) {
  if (samples.empty()) throw std::invalid_argument("KS distance of empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
    d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

namespace {

// Chebyshev value via Clenshaw; t in [-1, 1].
double cheb_eval(std::span<const double> c, double t) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t i = c.size(); i-- > 1;) {
    const double b0 = 2.0 * t * b1 - b2 + c[i];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

}  // namespace

UnfoldedSpectrum unfold(std::span<const double> energies, int degree) {
  if (energies.size() < 50) throw std::invalid_argument("unfolding needs >= 50 levels");
  if (degree < 3 || degree > 12)
    throw std::invalid_argument("unfolding degree must lie in [3, 12]");
  const std::size_t n = energies.size();
  for (std::size_t k = 1; k < n; ++k)
    if (!(energies[k] >= energies[k - 1]))
      throw std::invalid_argument("energies must be ascending");

  const double lo = energies.front(), hi = energies.back();
  if (!(hi > lo)) throw std::invalid_argument("degenerate energy span");

  // Least-squares fit of the staircase N(E_k) = k + 1/2 in the Chebyshev
  // basis on the normalized variable; scale- and shift-covariant.
  const int cols = degree + 1;
  std::vector<double> amat(n * static_cast<std::size_t>(cols));  // column-major
  std::vector<double> rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * (energies[k] - lo) / (hi - lo) - 1.0;
    double t0 = 1.0, t1 = t;
    for (int c = 0; c < cols; ++c) {
      amat[k + static_cast<std::size_t>(c) * n] = t0;
      const double t2 = 2.0 * t * t1 - t0;
      t0 = t1;
      t1 = t2;
    }
    rhs[k] = static_cast<double>(k) + 0.5;
  }
  const lapack_int info =
      LAPACKE_dgels(LAPACK_COL_MAJOR, 'N', static_cast<lapack_int>(n), cols, 1,
                    amat.data(), static_cast<lapack_int>(n), rhs.data(),
                    static_cast<lapack_int>(n));
  if (info != 0) throw std::runtime_error("unfolding fit is degenerate");
  const std::span<const double> coef(rhs.data(), static_cast<std::size_t>(cols));

  UnfoldedSpectrum u;
  u.fit_degree = degree;
  u.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * (energies[k] - lo) / (hi - lo) - 1.0;
    u.values[k] = cheb_eval(coef, t);
  }
  for (std::size_t k = 1; k < n; ++k)
    if (!(u.values[k] > u.values[k - 1]))
      throw std::runtime_error("unfolding map not monotonic at level " + std::to_string(k) +
                               "; try a different degree");
  const double ms = u.mean_spacing();
  if (std::fabs(ms - 1.0) > 0.02)
    throw std::runtime_error("unfolded mean spacing " + std::to_string(ms) +
                             " off unity; fit failed");
  return u;
}

NnsdResult nnsd(const UnfoldedSpectrum& spec, int bins) {
  if (spec.values.size() < 201)
    throw std::invalid_argument("nearest-neighbor statistics need >= 200 spacings");
  NnsdResult r;
  r.spacings.resize(spec.values.size() - 1);
  for (std::size_t k = 0; k + 1 < spec.values.size(); ++k)
    r.spacings[k] = spec.values[k + 1] - spec.values[k];
  r.hist = make_histogram(r.spacings, bins);
  r.ks_wigner = ks_distance(r.spacings, &wigner_cdf);
  r.ks_poisson = ks_distance(r.spacings, &poisson_cdf);
  return r;
}

namespace {

// Least-squares deviation of the staircase from a straight line over
// [start, start+L], in closed form. Levels inside the window are centered to
// u_i in [-L/2, L/2]; with partial sums of u_i, u_i^2 and (2i-1) u_i the
// minimized integral is I2/L - (I0/L)^2 - 12 (I1/L^2)^2.
double delta3_window(std::span<const double> x, double start, double L) {
  const double end = start + L;
  const auto first = std::lower_bound(x.begin(), x.end(), start);
  const auto last = std::lower_bound(x.begin(), x.end(), end);
  const double mid = start + 0.5 * L;
  double su = 0.0, su2 = 0.0, swu = 0.0;
  std::size_t m = 0;
  for (auto it = first; it != last; ++it, ++m) {
    const double u = *it - mid;
    su += u;
    su2 += u * u;
    swu += (2.0 * static_cast<double>(m) + 1.0) * u;  // (2i-1) with i = m+1
  }
  const double dm = static_cast<double>(m);
  const double i0 = dm * L / 2.0 - su;
  const double i1 = 0.5 * (dm * L * L / 4.0 - su2);
  const double i2 = dm * dm * L / 2.0 - swu;
  const double a = i0 / L;
  const double b = i1 / (L * L);
  return i2 / L - a * a - 12.0 * b * b;
}

double delta3_impl(const UnfoldedSpectrum& spec, double L, int n_windows,
                   std::uint64_t seed, bool parallel) {
  if (L < 1.0) throw std::invalid_argument("delta3 needs L >= 1");
  if (n_windows < 1) throw std::invalid_argument("delta3 needs at least one window");
  const auto& x = spec.values;
  if (x.size() < 2 || x.back() - x.front() < 2.0 * L)
    throw std::invalid_argument("spectrum span must be at least 2L");

  // Window starts are drawn up front so the result does not depend on the
  // parallel schedule.
  std::mt19937_64 rng(seed);
  const double lo = x.front(), span = x.back() - x.front() - L;
  std::vector<double> starts(n_windows);
  for (int w = 0; w < n_windows; ++w) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    starts[w] = lo + u * span;
  }

  std::vector<double> vals(n_windows);
#pragma omp parallel for schedule(static) if (parallel)
  for (int w = 0; w < n_windows; ++w) vals[w] = delta3_window(x, starts[w], L);

  double sum = 0.0;
  for (double v : vals) sum += v;
  return sum / static_cast<double>(n_windows);
}

}  // namespace

double delta3(const UnfoldedSpectrum& spec, double L, int n_windows, std::uint64_t seed) {
  return delta3_impl(spec, L, n_windows, seed, true);
}

namespace serial {
double delta3(const UnfoldedSpectrum& spec, double L, int n_windows, std::uint64_t seed) {
  return delta3_impl(spec, L, n_windows, seed, false);
}
}  // namespace serial

AmplitudeStats amplitude_stats(const EigenResult& eig, IndexRange window, int bins) {
  if (window.size() == 0) throw std::invalid_argument("empty amplitude window");
  if (window.hi > eig.dim()) throw std::invalid_argument("window out of bounds");
  const std::size_t n = eig.dim();
  std::vector<double> pooled(window.size() * n);

  const auto nw = static_cast<std::int64_t>(window.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nw; ++i) {
    const auto v = eig.vector(window.lo + static_cast<std::size_t>(i));
    double mean = 0.0;
    for (double c : v) mean += c;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double c : v) var += (c - mean) * (c - mean);
    var /= static_cast<double>(n - 1);
    const double inv = var > 0.0 ? 1.0 / std::sqrt(var) : 0.0;
    double* dst = pooled.data() + static_cast<std::size_t>(i) * n;
    for (std::size_t j = 0; j < n; ++j) dst[j] = (v[j] - mean) * inv;
  }

  AmplitudeStats r;
  r.pooled = pooled.size();
  r.hist = make_histogram(pooled, bins);
  r.ks_normal = ks_distance(std::move(pooled), &normal_cdf);
  return r;
}

}  // namespace tmts
