#include "ar1band/precision.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace ar1band {

double rho_pow(double rho, std::int64_t g) noexcept {
  assert(g >= 0);
  if (g == 0) return 1.0;
  const double mag = std::pow(std::fabs(rho), static_cast<double>(g));
  return (rho < 0.0 && (g & 1)) ? -mag : mag;
}

double one_minus_rho_sq_pow(double rho, std::int64_t g) noexcept {
  assert(g >= 0);
  if (g == 0) return 0.0;
  if (rho == 0.0) return 1.0;
  // rho^(2g) is always positive, so the sign of rho is irrelevant here.
  return -std::expm1(2.0 * static_cast<double>(g) * std::log(std::fabs(rho)));
}

double stationary_variance(const Ar1Params& params) noexcept {
  return params.sigma * params.sigma / one_minus_rho_sq_pow(params.rho, 1);
}

TridiagSym build_precision(const Ar1Params& params, const TimeGrid& grid) {
  params.validate();
  const std::size_t m = grid.size();
  const double rho = params.rho;
  const double sigma2 = params.sigma * params.sigma;
  const double c = one_minus_rho_sq_pow(rho, 1);  // 1 - rho^2

  std::vector<double> diag(m);
  std::vector<double> offdiag(m > 0 ? m - 1 : 0);

  if (m == 1) {
    // Stationary marginal precision, the 1x1 inverse of the covariance.
    diag[0] = c / sigma2;
    return TridiagSym(std::move(diag), std::move(offdiag));
  }

  // Per-gap quantities: r[i] = rho^(g_i), a[i] = 1 - rho^(2 g_i).
  std::vector<double> r(m - 1), a(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const std::int64_t g = grid.gap(i);
    r[i] = rho_pow(rho, g);
    a[i] = one_minus_rho_sq_pow(rho, g);
  }

  diag[0] = (c / a[0]) / sigma2;
  diag[m - 1] = (c / a[m - 2]) / sigma2;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    // 1 - rho^(2(g_{i-1} + g_i)) = a + b - a*b with a, b the per-gap
    // values; all terms are positive so there is no cancellation.
    const double joint = a[i - 1] + a[i] - a[i - 1] * a[i];
    diag[i] = (c * joint / (a[i - 1] * a[i])) / sigma2;
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    offdiag[i] = (-c * r[i] / a[i]) / sigma2;
  }

  return TridiagSym(std::move(diag), std::move(offdiag));
}

namespace {

void check_dense_cap(std::size_t rows, std::size_t cols, std::size_t cap) {
  if (rows > cap || cols > cap) {
    throw ValidationError("dense matrix size " + std::to_string(rows) + " x " +
                          std::to_string(cols) + " exceeds cap " +
                          std::to_string(cap));
  }
}

}  // namespace

DenseMat build_covariance(const Ar1Params& params, const TimeGrid& grid,
                          std::size_t dense_cap) {
  params.validate();
  const std::size_t m = grid.size();
  check_dense_cap(m, m, dense_cap);

  const double v = stationary_variance(params);
  DenseMat cov(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    cov.at(i, i) = v;
    for (std::size_t j = i + 1; j < m; ++j) {
      const double e = v * rho_pow(params.rho, grid[j] - grid[i]);
      cov.at(i, j) = e;
      cov.at(j, i) = e;
    }
  }
  return cov;
}

DenseMat build_cross_covariance(const Ar1Params& params, const TimeGrid& grid_p,
                                const TimeGrid& grid_o, std::size_t dense_cap) {
  params.validate();
  const std::size_t k = grid_p.size();
  const std::size_t m = grid_o.size();
  check_dense_cap(k, m, dense_cap);

  const double v = stationary_variance(params);
  DenseMat cross(k, m);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t d = grid_p[i] >= grid_o[j] ? grid_p[i] - grid_o[j]
                                                    : grid_o[j] - grid_p[i];
      cross.at(i, j) = v * rho_pow(params.rho, d);
    }
  }
  return cross;
}

}  // namespace ar1band
