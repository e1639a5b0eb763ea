#ifndef AR1BAND_DENSE_HPP
#define AR1BAND_DENSE_HPP

#include <span>
#include <vector>

#include "ar1band/rng.hpp"
#include "ar1band/types.hpp"

// Slow, obviously-correct dense reference path. Everything here is textbook
// O(m^3) linear algebra; it exists to verify the banded implementations and
// to serve as the benchmark baseline, not to be fast.

namespace ar1band {

/// Lower-triangular L with L L^T = A. A must be square and symmetric to
/// 1e-12 (relative to its largest entry). Throws NotPositiveDefiniteError
/// with the failing pivot index.
DenseMat dense_cholesky(const DenseMat& a);

/// SPD inverse via dense_cholesky and two triangular solves per column.
DenseMat dense_inverse(const DenseMat& a);

/// Multivariate normal log-density with a covariance parameterization.
double dense_log_pdf(std::span<const double> mean, const DenseMat& cov,
                     std::span<const double> x);

/// mean + L z with L the dense Cholesky factor of cov and z standard normal.
std::vector<double> dense_sample(std::span<const double> mean,
                                 const DenseMat& cov, NormalSource& rng);

/// Deterministic variant taking the noise vector explicitly.
std::vector<double> dense_sample_with_noise(std::span<const double> mean,
                                            const DenseMat& cov,
                                            std::span<const double> z);

// Dense utilities shared by the reference path, the benchmark baseline and
// the test suite.

DenseMat dense_identity(std::size_t m);
DenseMat dense_matmul(const DenseMat& a, const DenseMat& b);
std::vector<double> dense_matvec(const DenseMat& a, std::span<const double> v);
DenseMat to_dense(const TridiagSym& q);
DenseMat to_dense(const BandLowerBi& l);

}  // namespace ar1band

#endif  // AR1BAND_DENSE_HPP
