#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tmts/model.hpp"
#include "tmts/solver.hpp"

namespace tmts {

struct GridSpec {
  double x_min = -8.0;
  double x_max = 8.0;
  int n_x_points = 161;
  double y_min = -8.0;
  double y_max = 8.0;
  int n_y_points = 161;

  void validate() const;
  std::vector<double> x_coords() const;
  std::vector<double> y_coords() const;
  double cell_area() const;
};

/// Probability density of one eigenstate's component on one diabatic
/// surface, P(x,y) = |<x,y|phi>|^2, sampled on a rectangular grid.
struct DensityField {
  GridSpec grid;
  Surface surface = Surface::A;
  std::size_t k = 0;
  std::vector<double> values;  ///< row-major, values[iy * n_x_points + ix]
  double grid_mass = 0.0;      ///< Riemann sum over the grid
  double surface_mass = 0.0;   ///< |phi|^2 from the coefficients
  bool truncated = false;      ///< grid holds less than 99% of surface_mass
};

/// Normalized 1D harmonic-oscillator eigenfunction, evaluated through the
/// stable three-term recurrence (no factorials). Rejects n > 10000.
double ho_wavefunction(int n, double Omega, double x);

/// Table of psi_n(x_i) for n = 0..n_max, row-major [n * xs.size() + i].
std::vector<double> ho_wavefunction_table(int n_max, double Omega,
                                          std::span<const double> xs);

/// Evaluates the surface component of eigenstate k on the grid, with 1D
/// wavefunction tables computed once per axis. Parallel over grid rows.
DensityField density_grid(const EigenResult& eig, const BasisSpec& basis,
                          std::size_t k, Surface surface, const GridSpec& grid);

namespace serial {
/// Single-threaded twin of density_grid, bitwise-identical output.
DensityField density_grid(const EigenResult& eig, const BasisSpec& basis,
                          std::size_t k, Surface surface, const GridSpec& grid);
}  // namespace serial

}  // namespace tmts
