#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

// Two-mode two-state vibronic model: a pair of 2D harmonic diabatic surfaces,
// rotated against each other by a Duschinsky angle and displaced along y,
// coupled by a constant off-diagonal term. Matrix representation in a
// truncated product basis of harmonic-oscillator eigenfunctions.

namespace tmts {

enum class Surface { A, B };

/// Physical parameters of the two-surface model (hbar = m = 1).
struct ModelParams {
  double omega_x = 1.0;    ///< mode-x angular frequency
  double omega_y = 1.3;    ///< mode-y angular frequency
  double theta = 0.52359877559829882;  ///< Duschinsky angle, radians, in [0, pi/2]
  double a = 1.5;          ///< half-separation of the two minima along y
  double eps_A = 0.0;      ///< energy offset of surface A
  double eps_B = 0.173;    ///< energy offset of surface B
  double J = 1.5;          ///< diabatic coupling strength

  /// Throws std::invalid_argument if any field is out of range or non-finite.
  void validate() const;
};

/// Truncated 2D harmonic-oscillator product basis, centered at the origin.
struct BasisSpec {
  double Omega_x = 1.0;  ///< basis oscillator frequency, mode x
  double Omega_y = 1.3;  ///< basis oscillator frequency, mode y
  int n_max_x = 60;      ///< highest x quantum number (inclusive)
  int n_max_y = 60;      ///< highest y quantum number (inclusive)

  void validate() const;

  /// Vibrational basis size M = (n_max_x+1)(n_max_y+1).
  std::size_t vib_dim() const {
    return static_cast<std::size_t>(n_max_x + 1) * static_cast<std::size_t>(n_max_y + 1);
  }
  /// Full two-surface matrix dimension 2M.
  std::size_t full_dim() const { return 2 * vib_dim(); }

  /// Flat index j = n_x*(n_max_y+1) + n_y.
  std::size_t flat_index(int nx, int ny) const {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(n_max_y + 1) +
           static_cast<std::size_t>(ny);
  }
  /// Inverse of flat_index.
  std::pair<int, int> quanta(std::size_t j) const {
    const int stride = n_max_y + 1;
    return {static_cast<int>(j) / stride, static_cast<int>(j) % stride};
  }
};

/// Coefficients of V(x,y) = c_xx x^2 + c_yy y^2 + c_xy xy + c_x x + c_y y + c_0.
struct QuadraticPotential {
  double c_xx = 0.0;
  double c_yy = 0.0;
  double c_xy = 0.0;
  double c_x = 0.0;
  double c_y = 0.0;
  double c_0 = 0.0;

  double value(double x, double y) const {
    return c_xx * x * x + c_yy * y * y + c_xy * x * y + c_x * x + c_y * y + c_0;
  }
  /// True when the quadratic form is positive definite (bound surface).
  bool bound() const;
};

/// Dense real symmetric matrix, full column-major storage.
/// Mirror entries are written together, so entries(i,j) == entries(j,i) bitwise.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t dim() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i + j * n_]; }

  /// Writes both (i,j) and (j,i).
  void set_sym(std::size_t i, std::size_t j, double v) {
    a_[i + j * n_] = v;
    a_[j + i * n_] = v;
  }

  std::span<const double> data() const { return a_; }
  std::span<double> data() { return a_; }

  double trace() const;
  double frobenius_norm() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

enum class Op1D { Position, PositionSq, MomentumSq };

/// Quadratic expansion of the rotated-displaced harmonic surface.
QuadraticPotential quadratic_expand(const ModelParams& params, Surface surface);

/// Same surface evaluated directly through the rotated coordinates,
/// without expanding; the second route for cross-checking the expansion.
double potential_value(const ModelParams& params, Surface surface, double x, double y);

/// Matrix of x, x^2 or p^2 in the 1D oscillator eigenbasis of frequency
/// Omega, sizes (n_max+1)^2. Position is tridiagonal with zero diagonal;
/// the squares are pentadiagonal with zero first off-diagonal.
SymMatrix op_matrix_1d(Op1D kind, double Omega, int n_max);

struct AssemblyOptions {
  std::size_t memory_budget_bytes = 8ull << 30;
};

/// Full 2M x 2M Hamiltonian in the diabatic basis: blocks [[H_AA, J*I], [J*I, H_BB]].
/// Deterministic and exactly symmetric by construction; parallel over columns.
SymMatrix build_hamiltonian(const ModelParams& params, const BasisSpec& basis,
                            const AssemblyOptions& opts = {});

namespace serial {
/// Single-threaded twin of build_hamiltonian, bitwise-identical output.
SymMatrix build_hamiltonian(const ModelParams& params, const BasisSpec& basis,
                            const AssemblyOptions& opts = {});
}  // namespace serial

}  // namespace tmts
