#include "tmts/entanglement.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tmts {

namespace {

double xlogx(double v) { return v > 0.0 ? v * std::log(v) : 0.0; }

double norm_sq(std::span<const double> u, std::span<const double> v) {
  double s = 0.0;
  for (double x : u) s += x * x;
  for (double x : v) s += x * x;
  return s;
}

void require_normalized(std::span<const double> u, std::span<const double> v) {
  const double n = norm_sq(u, v);
  if (std::fabs(n - 1.0) > 1e-10)
    throw std::invalid_argument("coefficient vector not normalized, |c|^2 = " +
                                std::to_string(n));
}

}  // namespace

std::array<double, 2> DensityMatrix2::eigenvalues() const {
  const double mid = 0.5 * (rho11 + rho22);
  const double half = 0.5 * (rho11 - rho22);
  const double r = std::sqrt(half * half + rho12 * rho12);
  return {mid + r, mid - r};
}

DensityMatrix2 reduced_density(std::span<const double> c1, std::span<const double> c2) {
  if (c1.size() != c2.size())
    throw std::invalid_argument("coefficient vectors differ in length");
  require_normalized(c1, c2);
  DensityMatrix2 rho;
  for (std::size_t j = 0; j < c1.size(); ++j) {
    rho.rho11 += c1[j] * c1[j];
    rho.rho22 += c2[j] * c2[j];
    rho.rho12 += c1[j] * c2[j];
  }
  return rho;
}

double von_neumann_entropy(const DensityMatrix2& rho) {
  const auto [l1, l2] = rho.eigenvalues();
  return -xlogx(l1) - xlogx(l2);
}

SurfaceSplit surface_decomposition(std::span<const double> ca, std::span<const double> cb) {
  if (ca.size() != cb.size())
    throw std::invalid_argument("coefficient vectors differ in length");
  require_normalized(ca, cb);
  double overlap = 0.0, pa = 0.0, pb = 0.0;
  for (std::size_t j = 0; j < ca.size(); ++j) {
    overlap += ca[j] * cb[j];
    pa += ca[j] * ca[j];
    pb += cb[j] * cb[j];
  }
  return {overlap, 0.5 * (pa - pb)};
}

double entropy_from_decomposition(double s_ab, double dp_ab) {
  const double r2 = s_ab * s_ab + dp_ab * dp_ab;
  if (r2 > 0.25 + 1e-12)
    throw std::invalid_argument("radicand " + std::to_string(r2) + " exceeds 1/4");
  const double r = std::sqrt(std::min(r2, 0.25));
  return -xlogx(0.5 + r) - xlogx(0.5 - r);
}

namespace {

EntanglementSpectrum spectrum_impl(const EigenResult& eig, IndexRange range,
                                   double identity_tol, bool parallel) {
  if (range.hi > eig.dim() || range.lo > range.hi)
    throw std::invalid_argument("index range out of bounds");
  if (eig.converged_upto && range.hi > *eig.converged_upto + 1)
    throw std::invalid_argument("index range exceeds the converged window");

  EntanglementSpectrum out;
  out.records.resize(range.size());
  std::vector<double> devs(range.size(), 0.0);

  std::exception_ptr first_error;
  const auto n = static_cast<std::int64_t>(range.size());
#pragma omp parallel if (parallel)
  {
    std::vector<double> c1(eig.vib_dim), c2(eig.vib_dim);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        const std::size_t k = range.lo + static_cast<std::size_t>(i);
        const auto ca = eig.coeffs_A(k);
        const auto cb = eig.coeffs_B(k);
        to_rotated_basis(ca, cb, c1, c2);
        const DensityMatrix2 rho = reduced_density(c1, c2);
        const double s_direct = von_neumann_entropy(rho);
        const SurfaceSplit split = surface_decomposition(ca, cb);
        const double s_decomp = entropy_from_decomposition(split.s_ab, split.dp_ab);
        devs[i] = std::fabs(s_direct - s_decomp);
        out.records[i] = {k, eig.energies[k], s_direct, split.s_ab, split.dp_ab};
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  for (std::size_t i = 0; i < devs.size(); ++i)
    if (devs[i] > out.max_identity_dev) out.max_identity_dev = devs[i];
  if (out.max_identity_dev > identity_tol)
    throw std::runtime_error("entropy routes disagree by " +
                             std::to_string(out.max_identity_dev) +
                             "; the eigenvector table is inconsistent");
  return out;
}

}  // namespace

EntanglementSpectrum entanglement_spectrum(const EigenResult& eig, IndexRange range,
                                           double identity_tol) {
  return spectrum_impl(eig, range, identity_tol, true);
}

namespace serial {
EntanglementSpectrum entanglement_spectrum(const EigenResult& eig, IndexRange range,
                                           double identity_tol) {
  return spectrum_impl(eig, range, identity_tol, false);
}
}  // namespace serial

}  // namespace tmts
