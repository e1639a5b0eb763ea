#include "ar1band/banded.hpp"

#include <cmath>
#include <string>

namespace ar1band {

namespace {

void check_length(std::size_t got, std::size_t want, const char* name) {
  if (got != want) {
    throw ValidationError(std::string(name) + " length " +
                          std::to_string(got) + " does not match dimension " +
                          std::to_string(want));
  }
}

}  // namespace

BandLowerBi band_cholesky(const TridiagSym& q) {
  const std::size_t m = q.dim();
  std::vector<double> diag(m);
  std::vector<double> subdiag(m - 1);

  // Column sweep: load column j of Q, subtract the square of the already
  // computed subdiagonal entry from the pivot, scale by 1/sqrt(pivot).
  for (std::size_t j = 0; j < m; ++j) {
    double vj = q.diag()[j];
    if (j > 0) {
      vj -= subdiag[j - 1] * subdiag[j - 1];
    }
    if (!(vj > 0.0)) {
      throw NotPositiveDefiniteError(
          "matrix not positive definite: pivot " + std::to_string(vj) +
              " at column " + std::to_string(j),
          j);
    }
    const double s = std::sqrt(vj);
    diag[j] = s;
    if (j + 1 < m) {
      subdiag[j] = q.offdiag()[j] / s;
    }
  }
  return BandLowerBi(std::move(diag), std::move(subdiag));
}

std::vector<double> back_substitute(const BandLowerBi& l,
                                    std::span<const double> z) {
  const std::size_t m = l.dim();
  check_length(z.size(), m, "z");

  std::vector<double> v(m);
  v[m - 1] = z[m - 1] / l.diag()[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) {
    v[i] = (z[i] - l.subdiag()[i] * v[i + 1]) / l.diag()[i];
  }
  return v;
}

std::vector<double> forward_substitute(const BandLowerBi& l,
                                       std::span<const double> b) {
  const std::size_t m = l.dim();
  check_length(b.size(), m, "b");

  std::vector<double> w(m);
  w[0] = b[0] / l.diag()[0];
  for (std::size_t i = 1; i < m; ++i) {
    w[i] = (b[i] - l.subdiag()[i - 1] * w[i - 1]) / l.diag()[i];
  }
  return w;
}

double quadratic_form(const TridiagSym& q, std::span<const double> d) {
  const std::size_t m = q.dim();
  check_length(d.size(), m, "d");

  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    acc += q.diag()[i] * d[i] * d[i];
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    acc += 2.0 * q.offdiag()[i] * d[i] * d[i + 1];
  }
  return acc;
}

double log_det_from_chol(const BandLowerBi& l) {
  double acc = 0.0;
  for (double d : l.diag()) {
    acc += std::log(d);
  }
  return acc;
}

std::vector<double> tridiag_matvec(const TridiagSym& q,
                                   std::span<const double> v) {
  const std::size_t m = q.dim();
  check_length(v.size(), m, "v");

  std::vector<double> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    double acc = q.diag()[i] * v[i];
    if (i > 0) acc += q.offdiag()[i - 1] * v[i - 1];
    if (i + 1 < m) acc += q.offdiag()[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

}  // namespace ar1band
