#include "ar1band/sampling.hpp"

#include <string>
#include <utility>

#include "ar1band/banded.hpp"
#include "ar1band/dense.hpp"

namespace ar1band {

std::vector<double> sample_unconditional_with_noise(const Ar1Params& params,
                                                    const TimeGrid& grid,
                                                    const MeanSpec& mean,
                                                    std::span<const double> z) {
  const std::size_t m = grid.size();
  mean.check_length(m);
  if (z.size() != m) {
    throw ValidationError("z length " + std::to_string(z.size()) +
                          " does not match grid length " + std::to_string(m));
  }

  const TridiagSym q = build_precision(params, grid);
  const BandLowerBi l = band_cholesky(q);
  std::vector<double> x = back_substitute(l, z);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] += mean.at(i, m);
  }
  return x;
}

std::vector<double> sample_unconditional(const Ar1Params& params,
                                         const TimeGrid& grid,
                                         const MeanSpec& mean,
                                         NormalSource& rng) {
  return sample_unconditional_with_noise(params, grid, mean,
                                         rng.draw(grid.size()));
}

GridMerge merge_grids(const TimeGrid& grid_p, const TimeGrid& grid_o) {
  const std::size_t k = grid_p.size();
  const std::size_t m = grid_o.size();

  std::vector<std::int64_t> merged;
  merged.reserve(k + m);
  std::vector<std::size_t> p_pos(k), o_pos(m);

  std::size_t i = 0, j = 0;
  while (i < k || j < m) {
    if (i < k && j < m && grid_p[i] == grid_o[j]) {
      throw ValidationError("duplicate time " + std::to_string(grid_p[i]));
    }
    if (j >= m || (i < k && grid_p[i] < grid_o[j])) {
      p_pos[i] = merged.size();
      merged.push_back(grid_p[i]);
      ++i;
    } else {
      o_pos[j] = merged.size();
      merged.push_back(grid_o[j]);
      ++j;
    }
  }
  return GridMerge{TimeGrid(std::move(merged)), std::move(p_pos),
                   std::move(o_pos)};
}

ConditionalProblem::ConditionalProblem(Ar1Params params, TimeGrid grid_o,
                                       TimeGrid grid_p, MeanSpec mean_o,
                                       MeanSpec mean_p, std::vector<double> x_o)
    : params_(params),
      grid_o_(std::move(grid_o)),
      grid_p_(std::move(grid_p)),
      mean_o_(std::move(mean_o)),
      mean_p_(std::move(mean_p)),
      x_o_(std::move(x_o)),
      merge_(merge_grids(grid_p_, grid_o_)) {
  mean_o_.check_length(grid_o_.size());
  mean_p_.check_length(grid_p_.size());
  if (x_o_.size() != grid_o_.size()) {
    throw ValidationError("x_o length " + std::to_string(x_o_.size()) +
                          " does not match observed grid length " +
                          std::to_string(grid_o_.size()));
  }
}

ConditionalSampler::ConditionalSampler(const ConditionalProblem& problem,
                                       std::size_t dense_cap)
    : p_positions_(problem.merge().p_positions),
      o_positions_(problem.merge().o_positions),
      mean_merged_(problem.merge().merged.size()),
      x_o_(problem.x_o()),
      chol_merged_(
          band_cholesky(build_precision(problem.params(),
                                        problem.merge().merged))),
      q_o_(build_precision(problem.params(), problem.grid_o())),
      cross_po_(build_cross_covariance(problem.params(), problem.grid_p(),
                                       problem.grid_o(), dense_cap)) {
  // Merged means are assembled by permuting the supplied means, never
  // recomputed.
  const std::size_t k = problem.grid_p().size();
  const std::size_t m = problem.grid_o().size();
  for (std::size_t i = 0; i < k; ++i) {
    mean_merged_[p_positions_[i]] = problem.mean_p().at(i, k);
  }
  for (std::size_t j = 0; j < m; ++j) {
    mean_merged_[o_positions_[j]] = problem.mean_o().at(j, m);
  }
}

std::vector<double> ConditionalSampler::draw_with_noise(
    std::span<const double> z) const {
  const std::size_t a = mean_merged_.size();
  const std::size_t k = p_positions_.size();
  const std::size_t m = o_positions_.size();
  if (z.size() != a) {
    throw ValidationError("z length " + std::to_string(z.size()) +
                          " does not match merged grid length " +
                          std::to_string(a));
  }

  // Joint draw over the merged grid.
  std::vector<double> x_star = back_substitute(chol_merged_, z);
  for (std::size_t i = 0; i < a; ++i) x_star[i] += mean_merged_[i];

  // Un-merge and apply the correction Sigma_po Q_o (x_o - x*_o),
  // tridiagonal product first.
  std::vector<double> diff(m);
  for (std::size_t j = 0; j < m; ++j) {
    diff[j] = x_o_[j] - x_star[o_positions_[j]];
  }
  const std::vector<double> w = tridiag_matvec(q_o_, diff);
  const std::vector<double> corr = dense_matvec(cross_po_, w);

  std::vector<double> x_p(k);
  for (std::size_t i = 0; i < k; ++i) {
    x_p[i] = x_star[p_positions_[i]] + corr[i];
  }
  return x_p;
}

std::vector<double> ConditionalSampler::draw(NormalSource& rng) const {
  return draw_with_noise(rng.draw(mean_merged_.size()));
}

std::vector<double> sample_conditional(const ConditionalProblem& problem,
                                       NormalSource& rng,
                                       std::size_t dense_cap) {
  return ConditionalSampler(problem, dense_cap).draw(rng);
}

std::vector<double> sample_conditional_with_noise(
    const ConditionalProblem& problem, std::span<const double> z,
    std::size_t dense_cap) {
  return ConditionalSampler(problem, dense_cap).draw_with_noise(z);
}

}  // namespace ar1band
