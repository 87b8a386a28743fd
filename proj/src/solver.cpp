#include "tmts/solver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>

namespace tmts {

namespace {

// OpenBLAS threading gives nothing for these solve sizes on small core
// counts and run-to-run determinism is simpler with a fixed thread count.
// Respects a value already present in the environment.
void pin_blas_threads_once() {
  static std::once_flag flag;
  std::call_once(flag, [] { setenv("OPENBLAS_NUM_THREADS", "1", /*overwrite=*/0); });
}

void apply_sign_convention(std::vector<double>& coeffs, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    double* col = coeffs.data() + k * n;
    std::size_t imax = 0;
    double amax = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::fabs(col[i]);
      if (a > amax) {
        amax = a;
        imax = i;
      }
    }
    if (col[imax] < 0.0)
      for (std::size_t i = 0; i < n; ++i) col[i] = -col[i];
  }
}

}  // namespace

EigenResult eigensolve_sym(const SymMatrix& H) {
  pin_blas_threads_once();
  const std::size_t n = H.dim();
  if (n == 0) throw std::invalid_argument("empty matrix");
  for (double v : H.data())
    if (!std::isfinite(v)) throw std::invalid_argument("matrix entry not finite");

  std::vector<double> a(H.data().begin(), H.data().end());  // destroyed by LAPACK
  EigenResult r;
  r.vib_dim = n / 2;
  r.energies.assign(n, 0.0);
  r.coeffs.assign(n * n, 0.0);
  std::vector<lapack_int> isuppz(2 * n);
  lapack_int found = 0;
  const lapack_int ln = static_cast<lapack_int>(n);
  const lapack_int info = LAPACKE_dsyevr(
      LAPACK_COL_MAJOR, 'V', 'A', 'L', ln, a.data(), ln, 0.0, 0.0, 0, 0,
      /*abstol=*/0.0, &found, r.energies.data(), r.coeffs.data(), ln, isuppz.data());
  if (info > 0)
    throw std::runtime_error("eigensolve did not converge, failing index " +
                             std::to_string(info));
  if (info < 0)
    throw std::logic_error("eigensolve invalid argument " + std::to_string(-info));
  if (static_cast<std::size_t>(found) != n)
    throw std::runtime_error("eigensolve returned " + std::to_string(found) + " of " +
                             std::to_string(n) + " pairs");

  apply_sign_convention(r.coeffs, n);
  return r;
}

std::vector<double> eigenvalues_sym(const SymMatrix& H) {
  pin_blas_threads_once();
  const std::size_t n = H.dim();
  if (n == 0) throw std::invalid_argument("empty matrix");
  std::vector<double> a(H.data().begin(), H.data().end());
  std::vector<double> w(n, 0.0);
  lapack_int found = 0;
  std::vector<lapack_int> isuppz(2 * n);
  const lapack_int ln = static_cast<lapack_int>(n);
  const lapack_int info =
      LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'N', 'A', 'L', ln, a.data(), ln, 0.0, 0.0, 0, 0,
                     0.0, &found, w.data(), nullptr, ln, isuppz.data());
  if (info > 0)
    throw std::runtime_error("eigensolve did not converge, failing index " +
                             std::to_string(info));
  if (info < 0)
    throw std::logic_error("eigensolve invalid argument " + std::to_string(-info));
  return w;
}

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

void to_rotated_basis(std::span<const double> a, std::span<const double> b,
                      std::span<double> c1, std::span<double> c2) {
  if (a.size() != b.size() || a.size() != c1.size() || a.size() != c2.size())
    throw std::invalid_argument("coefficient vectors differ in length");
  for (std::size_t j = 0; j < a.size(); ++j) {
    c1[j] = (a[j] + b[j]) * kInvSqrt2;
    c2[j] = (b[j] - a[j]) * kInvSqrt2;
  }
}

void from_rotated_basis(std::span<const double> c1, std::span<const double> c2,
                        std::span<double> a, std::span<double> b) {
  if (c1.size() != c2.size() || c1.size() != a.size() || c1.size() != b.size())
    throw std::invalid_argument("coefficient vectors differ in length");
  for (std::size_t j = 0; j < c1.size(); ++j) {
    a[j] = (c1[j] - c2[j]) * kInvSqrt2;
    b[j] = (c1[j] + c2[j]) * kInvSqrt2;
  }
}

ConvergenceTable convergence_scan(const ModelParams& params,
                                  std::span<const BasisSpec> ladder, double tolerance,
                                  const EnergySolver& solve) {
  if (ladder.size() < 2)
    throw std::invalid_argument("convergence ladder needs at least two rungs");
  for (std::size_t r = 0; r + 1 < ladder.size(); ++r) {
    const auto& lo = ladder[r];
    const auto& hi = ladder[r + 1];
    if (hi.n_max_x < lo.n_max_x || hi.n_max_y < lo.n_max_y ||
        (hi.n_max_x == lo.n_max_x && hi.n_max_y == lo.n_max_y))
      throw std::invalid_argument("ladder must grow in (n_max_x, n_max_y)");
    if (hi.Omega_x != lo.Omega_x || hi.Omega_y != lo.Omega_y)
      throw std::invalid_argument("ladder rungs must share basis frequencies");
  }

  const EnergySolver direct = [](const ModelParams& p, const BasisSpec& b) {
    return eigenvalues_sym(build_hamiltonian(p, b));
  };
  const EnergySolver& run = solve ? solve : direct;

  ConvergenceTable table;
  table.ladder.assign(ladder.begin(), ladder.end());
  table.tolerance = tolerance;

  std::vector<double> prev = run(params, ladder[0]);
  for (std::size_t r = 1; r < ladder.size(); ++r) {
    std::vector<double> cur = run(params, ladder[r]);
    std::vector<double> drift(prev.size());
    for (std::size_t k = 0; k < prev.size(); ++k) drift[k] = std::fabs(cur[k] - prev[k]);
    if (r + 1 == ladder.size()) {
      table.energies_coarse = prev;
      table.energies_fine = cur;
    }
    table.drift.push_back(std::move(drift));
    prev = std::move(cur);
  }

  const auto& final_drift = table.drift.back();
  std::size_t k = 0;
  while (k < final_drift.size() && final_drift[k] < tolerance) ++k;
  if (k > 0) table.converged_upto = k - 1;
  return table;
}

}  // namespace tmts
