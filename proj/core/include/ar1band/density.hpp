#ifndef AR1BAND_DENSITY_HPP
#define AR1BAND_DENSITY_HPP

#include <span>

#include "ar1band/types.hpp"

namespace ar1band {

/// log p(x) = -(m/2) log 2pi + sum_i log L_ii - q/2 with
/// q = (x - mu)^T Q (x - mu). Builds Q and its factor on every call; O(m).
double log_density(const Ar1Params& params, const TimeGrid& grid,
                   const MeanSpec& mean, std::span<const double> x);

/// Precomputed-factor entry point for callers that evaluate the density
/// repeatedly while Q stays fixed (only x or mu changes). l must be the
/// Cholesky factor of q.
double log_density(const TridiagSym& q, const BandLowerBi& l,
                   const MeanSpec& mean, std::span<const double> x);

/// Log-density of a sample produced from noise z, where the quadratic form
/// collapses to z^T z: -(m/2) log 2pi + sum_i log L_ii - z^T z / 2.
double log_density_from_noise(const BandLowerBi& l, std::span<const double> z);

/// E[Y_i | y_{-i}] in closed form. Endpoints depend on the single
/// neighbouring value; interior points combine both neighbours with
/// gap-dependent weights. i is a 0-based index; m = 1 returns the mean.
double full_conditional_mean(const Ar1Params& params, const TimeGrid& grid,
                             const MeanSpec& mean, std::span<const double> y,
                             std::size_t i);

/// Prec(X_i | x_{-i}), read directly off the precision diagonal.
double full_conditional_precision(const TridiagSym& q, std::size_t i);

}  // namespace ar1band

#endif  // AR1BAND_DENSITY_HPP
