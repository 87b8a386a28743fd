#include "tmts/realspace.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tmts {

void GridSpec::validate() const {
  if (!(x_max > x_min) || !(y_max > y_min))
    throw std::invalid_argument("grid bounds must satisfy max > min");
  if (n_x_points < 2 || n_y_points < 2)
    throw std::invalid_argument("grid needs at least two points per axis");
}

std::vector<double> GridSpec::x_coords() const {
  std::vector<double> xs(n_x_points);
  for (int i = 0; i < n_x_points; ++i)
    xs[i] = x_min + (x_max - x_min) * static_cast<double>(i) / (n_x_points - 1);
  return xs;
}

std::vector<double> GridSpec::y_coords() const {
  std::vector<double> ys(n_y_points);
  for (int i = 0; i < n_y_points; ++i)
    ys[i] = y_min + (y_max - y_min) * static_cast<double>(i) / (n_y_points - 1);
  return ys;
}

double GridSpec::cell_area() const {
  return (x_max - x_min) / (n_x_points - 1) * (y_max - y_min) / (n_y_points - 1);
}

namespace {

constexpr int kMaxQuantum = 10000;

// Hermite functions h_n(xi) = H_n(xi) exp(-xi^2/2) / sqrt(2^n n! sqrt(pi))
// through the stable three-term recurrence; psi_n(x) = Omega^(1/4) h_n(sqrt(Omega) x).
double hermite_function(int n, double xi) {
  const double h0 = std::exp(-0.5 * xi * xi) * 0.75112554446494251;  // pi^(-1/4)
  if (n == 0) return h0;
  double hm = h0;
  double h = std::sqrt(2.0) * xi * h0;
  for (int k = 2; k <= n; ++k) {
    const double dk = static_cast<double>(k);
    const double hn = std::sqrt(2.0 / dk) * xi * h - std::sqrt((dk - 1.0) / dk) * hm;
    hm = h;
    h = hn;
  }
  return h;
}

}  // namespace

double ho_wavefunction(int n, double Omega, double x) {
  if (n < 0) throw std::invalid_argument("quantum number must be non-negative");
  if (n > kMaxQuantum)
    throw std::invalid_argument("quantum number " + std::to_string(n) +
                                " beyond the recurrence-stable range");
  if (!(Omega > 0.0)) throw std::invalid_argument("Omega must be positive");
  const double s = std::sqrt(Omega);
  return std::sqrt(s) * hermite_function(n, s * x);
}

std::vector<double> ho_wavefunction_table(int n_max, double Omega,
                                          std::span<const double> xs) {
  if (n_max < 0 || n_max > kMaxQuantum)
    throw std::invalid_argument("quantum number out of range");
  std::vector<double> table(static_cast<std::size_t>(n_max + 1) * xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (int n = 0; n <= n_max; ++n)
      table[static_cast<std::size_t>(n) * xs.size() + i] = ho_wavefunction(n, Omega, xs[i]);
  return table;
}

namespace {

DensityField density_impl(const EigenResult& eig, const BasisSpec& basis, std::size_t k,
                          Surface surface, const GridSpec& grid, bool parallel) {
  grid.validate();
  basis.validate();
  if (k >= eig.dim()) throw std::invalid_argument("eigenindex out of range");
  if (basis.full_dim() != eig.dim())
    throw std::invalid_argument("basis does not match the eigensolution");

  const auto c = surface == Surface::A ? eig.coeffs_A(k) : eig.coeffs_B(k);
  const auto xs = grid.x_coords();
  const auto ys = grid.y_coords();
  const auto tx = ho_wavefunction_table(basis.n_max_x, basis.Omega_x, xs);
  const auto ty = ho_wavefunction_table(basis.n_max_y, basis.Omega_y, ys);
  const std::size_t npx = xs.size(), npy = ys.size();
  const int sx = basis.n_max_x + 1, sy = basis.n_max_y + 1;

  DensityField f;
  f.grid = grid;
  f.surface = surface;
  f.k = k;
  f.values.assign(npx * npy, 0.0);

  // G[nx][iy] = sum_ny c(nx,ny) psi_ny(y_iy): one pass over the coefficient
  // table, then an (nx, ix) contraction per row of the grid.
  std::vector<double> g(static_cast<std::size_t>(sx) * npy, 0.0);
  for (int nx = 0; nx < sx; ++nx)
    for (int ny = 0; ny < sy; ++ny) {
      const double cj = c[basis.flat_index(nx, ny)];
      if (cj == 0.0) continue;
      const double* trow = ty.data() + static_cast<std::size_t>(ny) * npy;
      double* grow = g.data() + static_cast<std::size_t>(nx) * npy;
      for (std::size_t iy = 0; iy < npy; ++iy) grow[iy] += cj * trow[iy];
    }

  const auto rows = static_cast<std::int64_t>(npy);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t iy = 0; iy < rows; ++iy) {
    double* out = f.values.data() + static_cast<std::size_t>(iy) * npx;
    for (std::size_t ix = 0; ix < npx; ++ix) {
      double amp = 0.0;
      for (int nx = 0; nx < sx; ++nx)
        amp += g[static_cast<std::size_t>(nx) * npy + static_cast<std::size_t>(iy)] *
               tx[static_cast<std::size_t>(nx) * npx + ix];
      out[ix] = amp * amp;
    }
  }

  double mass = 0.0;
  for (double v : f.values) mass += v;
  f.grid_mass = mass * grid.cell_area();
  double smass = 0.0;
  for (double cj : c) smass += cj * cj;
  f.surface_mass = smass;
  f.truncated = f.grid_mass < 0.99 * f.surface_mass;
  return f;
}

}  // namespace

DensityField density_grid(const EigenResult& eig, const BasisSpec& basis, std::size_t k,
                          Surface surface, const GridSpec& grid) {
  return density_impl(eig, basis, k, surface, grid, true);
}

namespace serial {
DensityField density_grid(const EigenResult& eig, const BasisSpec& basis, std::size_t k,
                          Surface surface, const GridSpec& grid) {
  return density_impl(eig, basis, k, surface, grid, false);
}
}  // namespace serial

}  // namespace tmts
