#ifndef AR1BAND_TYPES_HPP
#define AR1BAND_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ar1band {

/// Thrown when an input violates a documented invariant. The message names
/// the violated invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by Cholesky routines on a non-positive pivot. column() is the
/// 0-based index of the failing column.
class NotPositiveDefiniteError : public std::runtime_error {
 public:
  NotPositiveDefiniteError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Parameters of a stationary Gaussian AR(1) process: correlation rho and
/// innovation standard deviation sigma. The stationary marginal variance is
/// sigma^2 / (1 - rho^2).
struct Ar1Params {
  double rho;
  double sigma;

  Ar1Params(double rho_in, double sigma_in) : rho(rho_in), sigma(sigma_in) {
    validate();
  }

  void validate() const {
    if (!(rho > -1.0 && rho < 1.0)) {
      throw ValidationError("rho must satisfy |rho| < 1");
    }
    if (!(sigma > 0.0)) {
      throw ValidationError("sigma must be > 0");
    }
  }
};

/// Strictly increasing integer sample times t_1 < ... < t_m. Only the gaps
/// t_{i+1} - t_i ever enter a formula, so the times may be arbitrary signed
/// 64-bit integers.
class TimeGrid {
 public:
  explicit TimeGrid(std::vector<std::int64_t> times) : times_(std::move(times)) {
    if (times_.empty()) {
      throw ValidationError("times must be non-empty");
    }
    for (std::size_t i = 0; i + 1 < times_.size(); ++i) {
      if (times_[i] >= times_[i + 1]) {
        throw ValidationError("times must be strictly increasing");
      }
    }
  }

  std::size_t size() const noexcept { return times_.size(); }
  std::int64_t operator[](std::size_t i) const { return times_[i]; }
  const std::vector<std::int64_t>& times() const noexcept { return times_; }

  /// Gap g_i = times[i+1] - times[i], 0 <= i < size()-1. Always >= 1.
  std::int64_t gap(std::size_t i) const { return times_[i + 1] - times_[i]; }

 private:
  std::vector<std::int64_t> times_;
};

/// Symmetric tridiagonal matrix stored as its diagonal and single
/// off-diagonal band. offdiag[i] couples positions i and i+1.
class TridiagSym {
 public:
  TridiagSym(std::vector<double> diag, std::vector<double> offdiag)
      : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
    if (diag_.empty()) {
      throw ValidationError("matrix dimension must be positive");
    }
    if (offdiag_.size() + 1 != diag_.size()) {
      throw ValidationError("offdiag length must be diag length - 1");
    }
    for (double d : diag_) {
      if (!(d > 0.0)) {
        throw ValidationError("diagonal entries must be strictly positive");
      }
    }
  }

  std::size_t dim() const noexcept { return diag_.size(); }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<double>& offdiag() const noexcept { return offdiag_; }

 private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

/// Lower bidiagonal matrix (diagonal plus first subdiagonal), the shape of
/// the Cholesky factor of a tridiagonal SPD matrix.
class BandLowerBi {
 public:
  BandLowerBi(std::vector<double> diag, std::vector<double> subdiag)
      : diag_(std::move(diag)), subdiag_(std::move(subdiag)) {
    if (diag_.empty()) {
      throw ValidationError("matrix dimension must be positive");
    }
    if (subdiag_.size() + 1 != diag_.size()) {
      throw ValidationError("subdiag length must be diag length - 1");
    }
    for (double d : diag_) {
      if (!(d > 0.0)) {
        throw ValidationError("diagonal entries must be strictly positive");
      }
    }
  }

  std::size_t dim() const noexcept { return diag_.size(); }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<double>& subdiag() const noexcept { return subdiag_; }

 private:
  std::vector<double> diag_;
  std::vector<double> subdiag_;
};

/// Mean specification: either a constant applied to every time point or a
/// per-time vector whose length must match the grid.
class MeanSpec {
 public:
  MeanSpec() : value_(0.0) {}
  MeanSpec(double constant) : value_(constant) {}  // NOLINT(google-explicit-constructor)
  explicit MeanSpec(std::vector<double> values) : value_(std::move(values)) {}

  bool is_constant() const noexcept {
    return std::holds_alternative<double>(value_);
  }

  /// Mean at position i of a grid with m points; validates the length.
  double at(std::size_t i, std::size_t m) const {
    check_length(m);
    if (is_constant()) return std::get<double>(value_);
    return std::get<std::vector<double>>(value_)[i];
  }

  /// Expand to a length-m vector.
  std::vector<double> materialize(std::size_t m) const {
    check_length(m);
    if (is_constant()) {
      return std::vector<double>(m, std::get<double>(value_));
    }
    return std::get<std::vector<double>>(value_);
  }

  void check_length(std::size_t m) const {
    if (!is_constant() && std::get<std::vector<double>>(value_).size() != m) {
      throw ValidationError(
          "mean vector length " +
          std::to_string(std::get<std::vector<double>>(value_).size()) +
          " does not match grid length " + std::to_string(m));
    }
  }

 private:
  std::variant<double, std::vector<double>> value_;
};

/// Row-major dense matrix. Used by cross-covariance blocks and the dense
/// reference path only; everything else stays banded.
struct DenseMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major, rows * cols entries

  DenseMat(std::size_t r, std::size_t c)
      : rows(r), cols(c), data(r * c, 0.0) {
    if (r == 0 || c == 0) {
      throw ValidationError("matrix dimensions must be positive");
    }
  }

  DenseMat(std::size_t r, std::size_t c, std::vector<double> d)
      : rows(r), cols(c), data(std::move(d)) {
    if (r == 0 || c == 0) {
      throw ValidationError("matrix dimensions must be positive");
    }
    if (data.size() != rows * cols) {
      throw ValidationError("data length must equal rows * cols");
    }
  }

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

}  // namespace ar1band

#endif  // AR1BAND_TYPES_HPP
