#ifndef AR1BAND_SAMPLING_HPP
#define AR1BAND_SAMPLING_HPP

#include <span>
#include <vector>

#include "ar1band/precision.hpp"
#include "ar1band/rng.hpp"
#include "ar1band/types.hpp"

namespace ar1band {

/// Draw x ~ Normal(mu, Q^-1) on the grid: build Q, factor it, solve
/// L^T v = z for standard-normal z and return mu + v. O(m).
std::vector<double> sample_unconditional(const Ar1Params& params,
                                         const TimeGrid& grid,
                                         const MeanSpec& mean,
                                         NormalSource& rng);

/// Same path with the noise vector supplied explicitly (the deterministic
/// testing seam). z must have length m; z = 0 returns mu exactly.
std::vector<double> sample_unconditional_with_noise(const Ar1Params& params,
                                                    const TimeGrid& grid,
                                                    const MeanSpec& mean,
                                                    std::span<const double> z);

/// Sorted union of two disjoint grids plus the position of every input
/// point in the merged grid.
struct GridMerge {
  TimeGrid merged;
  std::vector<std::size_t> p_positions;  // merged index of grid_p[i]
  std::vector<std::size_t> o_positions;  // merged index of grid_o[j]
};

/// Merge disjoint grids; throws ValidationError naming the duplicated time
/// on overlap. O(k + m) since both inputs are sorted.
GridMerge merge_grids(const TimeGrid& grid_p, const TimeGrid& grid_o);

/// A conditional simulation problem: observed values x_o at grid_o, and a
/// disjoint prediction grid_p. Disjointness and length consistency are
/// checked at construction.
class ConditionalProblem {
 public:
  ConditionalProblem(Ar1Params params, TimeGrid grid_o, TimeGrid grid_p,
                     MeanSpec mean_o, MeanSpec mean_p,
                     std::vector<double> x_o);

  const Ar1Params& params() const noexcept { return params_; }
  const TimeGrid& grid_o() const noexcept { return grid_o_; }
  const TimeGrid& grid_p() const noexcept { return grid_p_; }
  const MeanSpec& mean_o() const noexcept { return mean_o_; }
  const MeanSpec& mean_p() const noexcept { return mean_p_; }
  const std::vector<double>& x_o() const noexcept { return x_o_; }
  const GridMerge& merge() const noexcept { return merge_; }

 private:
  Ar1Params params_;
  TimeGrid grid_o_;
  TimeGrid grid_p_;
  MeanSpec mean_o_;
  MeanSpec mean_p_;
  std::vector<double> x_o_;
  GridMerge merge_;
};

/// Exact conditional sampler for x_p | x_o. A joint draw x*_a over the
/// merged grid is corrected with
///
///   x_p = x*_p + Sigma_po Q_o (x_o - x*_o),
///
/// where Q_o is tridiagonal, so Q_o w costs O(m) and the dense k x m
/// product costs O(km). The factors are computed once at construction;
/// draw() costs O(k + m + km) per sample with no refactorization.
class ConditionalSampler {
 public:
  explicit ConditionalSampler(const ConditionalProblem& problem,
                              std::size_t dense_cap = kDenseCapDefault);

  std::vector<double> draw(NormalSource& rng) const;

  /// z supplies the joint draw's noise, length k + m in merged-grid order.
  /// With z = 0 the result is exactly the conditional mean mu_p|o.
  std::vector<double> draw_with_noise(std::span<const double> z) const;

 private:
  std::vector<std::size_t> p_positions_;
  std::vector<std::size_t> o_positions_;
  std::vector<double> mean_merged_;
  std::vector<double> x_o_;
  BandLowerBi chol_merged_;
  TridiagSym q_o_;
  DenseMat cross_po_;
};

/// One-shot form of the conditional sampler.
std::vector<double> sample_conditional(const ConditionalProblem& problem,
                                       NormalSource& rng,
                                       std::size_t dense_cap = kDenseCapDefault);

/// One-shot form of the testing seam; z has length k + m.
std::vector<double> sample_conditional_with_noise(
    const ConditionalProblem& problem, std::span<const double> z,
    std::size_t dense_cap = kDenseCapDefault);

}  // namespace ar1band

#endif  // AR1BAND_SAMPLING_HPP
