#ifndef AR1BAND_BANDED_HPP
#define AR1BAND_BANDED_HPP

#include <span>
#include <vector>

#include "ar1band/types.hpp"

namespace ar1band {

/// Cholesky factor L of a tridiagonal SPD matrix, Q = L L^T. L keeps the
/// bandwidth, so only its diagonal and subdiagonal are stored. O(m).
/// Throws NotPositiveDefiniteError with the failing column on a
/// non-positive pivot.
BandLowerBi band_cholesky(const TridiagSym& q);

/// Solve L^T v = z by back substitution, 3m-2 flops.
std::vector<double> back_substitute(const BandLowerBi& l,
                                    std::span<const double> z);

/// Solve L w = b by forward substitution.
std::vector<double> forward_substitute(const BandLowerBi& l,
                                       std::span<const double> b);

/// d^T Q d using only the stored bands, O(m).
double quadratic_form(const TridiagSym& q, std::span<const double> d);

/// sum_i log L_ii, which equals (1/2) log det Q.
double log_det_from_chol(const BandLowerBi& l);

/// Q v for a tridiagonal Q, O(m).
std::vector<double> tridiag_matvec(const TridiagSym& q,
                                   std::span<const double> v);

}  // namespace ar1band

#endif  // AR1BAND_BANDED_HPP
