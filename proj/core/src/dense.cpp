#include "ar1band/dense.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ar1band {

namespace {

void check_square(const DenseMat& a) {
  if (a.rows != a.cols) {
    throw ValidationError("matrix must be square, got " +
                          std::to_string(a.rows) + " x " +
                          std::to_string(a.cols));
  }
}

void check_symmetric(const DenseMat& a) {
  double max_abs = 0.0;
  for (double v : a.data) max_abs = std::max(max_abs, std::fabs(v));
  const double tol = 1e-12 * std::max(1.0, max_abs);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = i + 1; j < a.cols; ++j) {
      if (std::fabs(a.at(i, j) - a.at(j, i)) > tol) {
        throw ValidationError("matrix is not symmetric at (" +
                              std::to_string(i) + ", " + std::to_string(j) +
                              ")");
      }
    }
  }
}

// Solve L y = b for lower-triangular dense L.
std::vector<double> lower_solve(const DenseMat& l, std::span<const double> b) {
  const std::size_t m = l.rows;
  std::vector<double> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    double acc = b[i];
    for (std::size_t k = 0; k < i; ++k) acc -= l.at(i, k) * y[k];
    y[i] = acc / l.at(i, i);
  }
  return y;
}

// Solve L^T x = y for lower-triangular dense L.
std::vector<double> upper_solve(const DenseMat& l, std::span<const double> y) {
  const std::size_t m = l.rows;
  std::vector<double> x(m);
  for (std::size_t i = m; i-- > 0;) {
    double acc = y[i];
    for (std::size_t k = i + 1; k < m; ++k) acc -= l.at(k, i) * x[k];
    x[i] = acc / l.at(i, i);
  }
  return x;
}

void check_vec_length(std::size_t got, std::size_t want, const char* name) {
  if (got != want) {
    throw ValidationError(std::string(name) + " length " +
                          std::to_string(got) + " does not match dimension " +
                          std::to_string(want));
  }
}

}  // namespace

DenseMat dense_cholesky(const DenseMat& a) {
  check_square(a);
  check_symmetric(a);

  const std::size_t m = a.rows;
  DenseMat l(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    double pivot = a.at(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l.at(j, k) * l.at(j, k);
    if (!(pivot > 0.0)) {
      throw NotPositiveDefiniteError(
          "matrix not positive definite: pivot " + std::to_string(pivot) +
              " at column " + std::to_string(j),
          j);
    }
    const double s = std::sqrt(pivot);
    l.at(j, j) = s;
    for (std::size_t i = j + 1; i < m; ++i) {
      double acc = a.at(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= l.at(i, k) * l.at(j, k);
      l.at(i, j) = acc / s;
    }
  }
  return l;
}

DenseMat dense_inverse(const DenseMat& a) {
  const DenseMat l = dense_cholesky(a);
  const std::size_t m = a.rows;

  DenseMat inv(m, m);
  std::vector<double> e(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    e[j] = 1.0;
    const std::vector<double> y = lower_solve(l, e);
    const std::vector<double> x = upper_solve(l, y);
    for (std::size_t i = 0; i < m; ++i) inv.at(i, j) = x[i];
    e[j] = 0.0;
  }
  return inv;
}

double dense_log_pdf(std::span<const double> mean, const DenseMat& cov,
                     std::span<const double> x) {
  check_square(cov);
  const std::size_t m = cov.rows;
  check_vec_length(mean.size(), m, "mean");
  check_vec_length(x.size(), m, "x");

  const DenseMat l = dense_cholesky(cov);
  std::vector<double> d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = x[i] - mean[i];
  const std::vector<double> u = lower_solve(l, d);

  double log_det_half = 0.0;
  for (std::size_t i = 0; i < m; ++i) log_det_half += std::log(l.at(i, i));
  double quad = 0.0;
  for (double ui : u) quad += ui * ui;

  return -0.5 * static_cast<double>(m) * std::log(2.0 * std::numbers::pi) -
         log_det_half - 0.5 * quad;
}

std::vector<double> dense_sample_with_noise(std::span<const double> mean,
                                            const DenseMat& cov,
                                            std::span<const double> z) {
  check_square(cov);
  const std::size_t m = cov.rows;
  check_vec_length(mean.size(), m, "mean");
  check_vec_length(z.size(), m, "z");

  const DenseMat l = dense_cholesky(cov);
  std::vector<double> x(m);
  for (std::size_t i = 0; i < m; ++i) {
    double acc = mean[i];
    for (std::size_t k = 0; k <= i; ++k) acc += l.at(i, k) * z[k];
    x[i] = acc;
  }
  return x;
}

std::vector<double> dense_sample(std::span<const double> mean,
                                 const DenseMat& cov, NormalSource& rng) {
  return dense_sample_with_noise(mean, cov, rng.draw(cov.rows));
}

DenseMat dense_identity(std::size_t m) {
  DenseMat id(m, m);
  for (std::size_t i = 0; i < m; ++i) id.at(i, i) = 1.0;
  return id;
}

DenseMat dense_matmul(const DenseMat& a, const DenseMat& b) {
  if (a.cols != b.rows) {
    throw ValidationError("matmul dimension mismatch: " +
                          std::to_string(a.cols) + " vs " +
                          std::to_string(b.rows));
  }
  DenseMat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

std::vector<double> dense_matvec(const DenseMat& a, std::span<const double> v) {
  check_vec_length(v.size(), a.cols, "v");
  std::vector<double> out(a.rows, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) acc += a.at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

DenseMat to_dense(const TridiagSym& q) {
  const std::size_t m = q.dim();
  DenseMat a(m, m);
  for (std::size_t i = 0; i < m; ++i) a.at(i, i) = q.diag()[i];
  for (std::size_t i = 0; i + 1 < m; ++i) {
    a.at(i, i + 1) = q.offdiag()[i];
    a.at(i + 1, i) = q.offdiag()[i];
  }
  return a;
}

DenseMat to_dense(const BandLowerBi& l) {
  const std::size_t m = l.dim();
  DenseMat a(m, m);
  for (std::size_t i = 0; i < m; ++i) a.at(i, i) = l.diag()[i];
  for (std::size_t i = 0; i + 1 < m; ++i) a.at(i + 1, i) = l.subdiag()[i];
  return a;
}

}  // namespace ar1band
