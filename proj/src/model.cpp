#include "tmts/model.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tmts {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void ModelParams::validate() const {
  for (double v : {omega_x, omega_y, theta, a, eps_A, eps_B, J})
    require(std::isfinite(v), "model parameter not finite");
  require(omega_x > 0.0, "omega_x must be positive");
  require(omega_y > 0.0, "omega_y must be positive");
  require(a >= 0.0, "a must be non-negative");
  require(theta >= 0.0 && theta <= std::asin(1.0), "theta must lie in [0, pi/2]");
}

void BasisSpec::validate() const {
  require(std::isfinite(Omega_x) && Omega_x > 0.0, "Omega_x must be positive");
  require(std::isfinite(Omega_y) && Omega_y > 0.0, "Omega_y must be positive");
  require(n_max_x >= 0, "n_max_x must be non-negative");
  require(n_max_y >= 0, "n_max_y must be non-negative");
}

bool QuadraticPotential::bound() const {
  // Hessian [[2c_xx, c_xy], [c_xy, 2c_yy]] positive definite.
  return c_xx > 0.0 && 4.0 * c_xx * c_yy - c_xy * c_xy > 0.0;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i + i * n_];
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

QuadraticPotential quadratic_expand(const ModelParams& params, Surface surface) {
  params.validate();
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  const double wx2 = params.omega_x * params.omega_x;
  const double wy2 = params.omega_y * params.omega_y;
  // V = alpha/2 x^2 + beta/2 (y -+ a)^2 +- gamma x (y -+ a) + eps
  const double alpha = wx2 * c * c + wy2 * s * s;
  const double beta = wx2 * s * s + wy2 * c * c;
  const double gamma = (wy2 - wx2) * s * c;

  QuadraticPotential q;
  q.c_xx = 0.5 * alpha;
  q.c_yy = 0.5 * beta;
  if (surface == Surface::A) {
    q.c_xy = gamma;
    q.c_x = -gamma * params.a;
    q.c_y = -beta * params.a;
    q.c_0 = 0.5 * beta * params.a * params.a + params.eps_A;
  } else {
    q.c_xy = -gamma;
    q.c_x = -gamma * params.a;
    q.c_y = beta * params.a;
    q.c_0 = 0.5 * beta * params.a * params.a + params.eps_B;
  }
  return q;
}

double potential_value(const ModelParams& params, Surface surface, double x, double y) {
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  double xi, eta, eps;
  if (surface == Surface::A) {
    xi = x * c - (y - params.a) * s;
    eta = x * s + (y - params.a) * c;
    eps = params.eps_A;
  } else {
    xi = x * c + (y + params.a) * s;
    eta = -x * s + (y + params.a) * c;
    eps = params.eps_B;
  }
  const double wx = params.omega_x;
  const double wy = params.omega_y;
  return 0.5 * (wx * wx * xi * xi + wy * wy * eta * eta) + eps;
}

SymMatrix op_matrix_1d(Op1D kind, double Omega, int n_max) {
  require(std::isfinite(Omega) && Omega > 0.0, "Omega must be positive");
  require(n_max >= 0, "n_max must be non-negative");
  const std::size_t n = static_cast<std::size_t>(n_max) + 1;
  SymMatrix m(n);
  switch (kind) {
    case Op1D::Position:
      for (std::size_t i = 0; i + 1 < n; ++i)
        m.set_sym(i, i + 1, std::sqrt((static_cast<double>(i) + 1.0) / (2.0 * Omega)));
      break;
    case Op1D::PositionSq:
      for (std::size_t i = 0; i < n; ++i)
        m.set_sym(i, i, (2.0 * static_cast<double>(i) + 1.0) / (2.0 * Omega));
      for (std::size_t i = 0; i + 2 < n; ++i) {
        const double d = static_cast<double>(i);
        m.set_sym(i, i + 2, std::sqrt((d + 1.0) * (d + 2.0)) / (2.0 * Omega));
      }
      break;
    case Op1D::MomentumSq:
      for (std::size_t i = 0; i < n; ++i)
        m.set_sym(i, i, Omega * (static_cast<double>(i) + 0.5));
      for (std::size_t i = 0; i + 2 < n; ++i) {
        const double d = static_cast<double>(i);
        m.set_sym(i, i + 2, -Omega * std::sqrt((d + 1.0) * (d + 2.0)) / 2.0);
      }
      break;
  }
  return m;
}

namespace {

struct AssemblyData {
  SymMatrix X, X2, P2x;  // mode x operators in the Omega_x basis
  SymMatrix Y, Y2, P2y;  // mode y operators in the Omega_y basis
  QuadraticPotential qa, qb;
};

AssemblyData prepare_assembly(const ModelParams& params, const BasisSpec& basis) {
  return {op_matrix_1d(Op1D::Position, basis.Omega_x, basis.n_max_x),
          op_matrix_1d(Op1D::PositionSq, basis.Omega_x, basis.n_max_x),
          op_matrix_1d(Op1D::MomentumSq, basis.Omega_x, basis.n_max_x),
          op_matrix_1d(Op1D::Position, basis.Omega_y, basis.n_max_y),
          op_matrix_1d(Op1D::PositionSq, basis.Omega_y, basis.n_max_y),
          op_matrix_1d(Op1D::MomentumSq, basis.Omega_y, basis.n_max_y),
          quadratic_expand(params, Surface::A),
          quadratic_expand(params, Surface::B)};
}

// One surface-block element <n_x n_y | T + V | m_x m_y>. The 1D operators
// are banded, so the value vanishes unless |n_x-m_x| <= 2 and |n_y-m_y| <= 2.
// The summation order is fixed to keep assembly bitwise deterministic.
inline double block_element(const AssemblyData& d, const QuadraticPotential& q,
                            int nx, int ny, int mx, int my) {
  double v = 0.0;
  const auto ux = static_cast<std::size_t>(nx), uy = static_cast<std::size_t>(ny);
  const auto vx = static_cast<std::size_t>(mx), vy = static_cast<std::size_t>(my);
  if (nx == mx && ny == my) v += q.c_0;
  if (ny == my)
    v += 0.5 * d.P2x(ux, vx) + q.c_xx * d.X2(ux, vx) + q.c_x * d.X(ux, vx);
  if (nx == mx)
    v += 0.5 * d.P2y(uy, vy) + q.c_yy * d.Y2(uy, vy) + q.c_y * d.Y(uy, vy);
  v += q.c_xy * d.X(ux, vx) * d.Y(uy, vy);
  return v;
}

// Fills rows j <= jp of column jp within one surface block; `off` is the
// block offset (0 for A, M for B). Only the pentadiagonal neighborhood of
// (mx, my) is visited.
inline void fill_column(SymMatrix& h, const AssemblyData& d, const QuadraticPotential& q,
                        const BasisSpec& basis, std::size_t off, std::size_t jp) {
  const auto [mx, my] = basis.quanta(jp);
  for (int nx = std::max(0, mx - 2); nx <= std::min(basis.n_max_x, mx + 2); ++nx) {
    for (int ny = std::max(0, my - 2); ny <= std::min(basis.n_max_y, my + 2); ++ny) {
      const std::size_t j = basis.flat_index(nx, ny);
      if (j > jp) continue;
      const double v = block_element(d, q, nx, ny, mx, my);
      if (v != 0.0) h.set_sym(off + j, off + jp, v);
    }
  }
}

SymMatrix assemble(const ModelParams& params, const BasisSpec& basis,
                   const AssemblyOptions& opts, bool parallel) {
  params.validate();
  basis.validate();
  const std::size_t n = basis.full_dim();
  const std::size_t bytes = n * n * sizeof(double);
  if (bytes > opts.memory_budget_bytes)
    throw std::length_error("hamiltonian of dimension " + std::to_string(n) + " needs " +
                            std::to_string(bytes) + " bytes, over the memory budget of " +
                            std::to_string(opts.memory_budget_bytes));

  const AssemblyData d = prepare_assembly(params, basis);
  const std::size_t m = basis.vib_dim();
  SymMatrix h(n);

  const auto im = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t jp = 0; jp < im; ++jp) {
    fill_column(h, d, d.qa, basis, 0, static_cast<std::size_t>(jp));
    fill_column(h, d, d.qb, basis, m, static_cast<std::size_t>(jp));
  }
  if (params.J != 0.0)
    for (std::size_t j = 0; j < m; ++j) h.set_sym(j, m + j, params.J);
  return h;
}

}  // namespace

SymMatrix build_hamiltonian(const ModelParams& params, const BasisSpec& basis,
                            const AssemblyOptions& opts) {
  return assemble(params, basis, opts, true);
}

namespace serial {
SymMatrix build_hamiltonian(const ModelParams& params, const BasisSpec& basis,
                            const AssemblyOptions& opts) {
  return assemble(params, basis, opts, false);
}
}  // namespace serial

}  // namespace tmts
