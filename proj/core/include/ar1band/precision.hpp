#ifndef AR1BAND_PRECISION_HPP
#define AR1BAND_PRECISION_HPP

#include <cstddef>
#include <cstdint>

#include "ar1band/types.hpp"

namespace ar1band {

/// Default row/column cap on any dense construction. Guards the O(m)
/// promise of the banded paths against accidental O(m^2) blowup.
inline constexpr std::size_t kDenseCapDefault = 10000;

/// rho^g for integer g >= 0. Correctly signed for negative rho and odd g;
/// silently underflows to 0 for large g, which is the independence limit.
double rho_pow(double rho, std::int64_t g) noexcept;

/// 1 - rho^(2g) for integer g >= 0, computed as -expm1(2g * ln|rho|) so the
/// result keeps relative accuracy when rho is close to +-1.
double one_minus_rho_sq_pow(double rho, std::int64_t g) noexcept;

/// Stationary marginal variance sigma^2 / (1 - rho^2).
double stationary_variance(const Ar1Params& params) noexcept;

/// Precision matrix Q of the process sampled at the grid times. Q is
/// tridiagonal with entries determined by the gaps alone:
///
///   Q_11 = (1-rho^2) / (1-rho^(2 g_1)) / sigma^2
///   Q_mm = (1-rho^2) / (1-rho^(2 g_{m-1})) / sigma^2
///   Q_ii = (1-rho^2)(1-rho^(2(g_{i-1}+g_i)))
///          / [(1-rho^(2 g_{i-1}))(1-rho^(2 g_i))] / sigma^2
///   Q_{i,i+1} = -(1-rho^2) rho^(g_i) / (1-rho^(2 g_i)) / sigma^2
///
/// with g_i = t_{i+1} - t_i. For m = 1 the result is the scalar stationary
/// marginal precision (1-rho^2)/sigma^2. Construction is O(m) time and
/// space.
TridiagSym build_precision(const Ar1Params& params, const TimeGrid& grid);

/// Dense m x m covariance with entries sigma^2/(1-rho^2) * rho^|t_i - t_j|.
/// Refuses m > dense_cap.
DenseMat build_covariance(const Ar1Params& params, const TimeGrid& grid,
                          std::size_t dense_cap = kDenseCapDefault);

/// Dense k x m cross-covariance between the processes at grid_p (rows) and
/// grid_o (columns); entry (i,j) is sigma^2/(1-rho^2) * rho^|s_i - t_j|.
/// The grids may overlap here; disjointness is the conditional sampler's
/// concern. Refuses k > dense_cap or m > dense_cap.
DenseMat build_cross_covariance(const Ar1Params& params, const TimeGrid& grid_p,
                                const TimeGrid& grid_o,
                                std::size_t dense_cap = kDenseCapDefault);

}  // namespace ar1band

#endif  // AR1BAND_PRECISION_HPP
