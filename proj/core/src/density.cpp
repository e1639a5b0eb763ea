#include "ar1band/density.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ar1band/banded.hpp"
#include "ar1band/precision.hpp"

namespace ar1band {

namespace {

const double kLog2Pi = std::log(2.0 * std::numbers::pi);

void check_x_length(std::size_t got, std::size_t want) {
  if (got != want) {
    throw ValidationError("x length " + std::to_string(got) +
                          " does not match dimension " + std::to_string(want));
  }
}

}  // namespace

double log_density(const TridiagSym& q, const BandLowerBi& l,
                   const MeanSpec& mean, std::span<const double> x) {
  const std::size_t m = q.dim();
  check_x_length(x.size(), m);
  if (l.dim() != m) {
    throw ValidationError("factor dimension " + std::to_string(l.dim()) +
                          " does not match matrix dimension " +
                          std::to_string(m));
  }
  mean.check_length(m);

  std::vector<double> d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = x[i] - mean.at(i, m);
  const double quad = quadratic_form(q, d);
  return -0.5 * static_cast<double>(m) * kLog2Pi + log_det_from_chol(l) -
         0.5 * quad;
}

double log_density(const Ar1Params& params, const TimeGrid& grid,
                   const MeanSpec& mean, std::span<const double> x) {
  const TridiagSym q = build_precision(params, grid);
  const BandLowerBi l = band_cholesky(q);
  return log_density(q, l, mean, x);
}

double log_density_from_noise(const BandLowerBi& l, std::span<const double> z) {
  const std::size_t m = l.dim();
  check_x_length(z.size(), m);

  double quad = 0.0;
  for (double zi : z) quad += zi * zi;
  return -0.5 * static_cast<double>(m) * kLog2Pi + log_det_from_chol(l) -
         0.5 * quad;
}

double full_conditional_mean(const Ar1Params& params, const TimeGrid& grid,
                             const MeanSpec& mean, std::span<const double> y,
                             std::size_t i) {
  const std::size_t m = grid.size();
  check_x_length(y.size(), m);
  mean.check_length(m);
  if (i >= m) {
    throw ValidationError("index " + std::to_string(i) +
                          " out of range for dimension " + std::to_string(m));
  }

  const double rho = params.rho;
  if (m == 1) {
    return mean.at(0, m);  // conditioning on nothing
  }
  if (i == 0) {
    return mean.at(0, m) +
           rho_pow(rho, grid.gap(0)) * (y[1] - mean.at(1, m));
  }
  if (i == m - 1) {
    return mean.at(m - 1, m) +
           rho_pow(rho, grid.gap(m - 2)) * (y[m - 2] - mean.at(m - 2, m));
  }

  // Interior: weights on the two neighbours, sharing the denominator
  // 1 - rho^(2(g_prev + g_next)).
  const std::int64_t g_prev = grid.gap(i - 1);
  const std::int64_t g_next = grid.gap(i);
  const double denom = one_minus_rho_sq_pow(rho, g_prev + g_next);
  const double w_prev =
      rho_pow(rho, g_prev) * one_minus_rho_sq_pow(rho, g_next) / denom;
  const double w_next =
      rho_pow(rho, g_next) * one_minus_rho_sq_pow(rho, g_prev) / denom;
  return mean.at(i, m) + w_prev * (y[i - 1] - mean.at(i - 1, m)) +
         w_next * (y[i + 1] - mean.at(i + 1, m));
}

double full_conditional_precision(const TridiagSym& q, std::size_t i) {
  if (i >= q.dim()) {
    throw ValidationError("index " + std::to_string(i) +
                          " out of range for dimension " +
                          std::to_string(q.dim()));
  }
  return q.diag()[i];
}

}  // namespace ar1band
