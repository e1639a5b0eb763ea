#ifndef AR1BAND_RNG_HPP
#define AR1BAND_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ar1band/types.hpp"

namespace ar1band {

/// Source of independent standard-normal deviates. The draw sequence for a
/// fixed seed is the determinism contract, so a single source must not be
/// shared across concurrent calls.
class NormalSource {
 public:
  virtual ~NormalSource() = default;
  virtual double next() = 0;

  std::vector<double> draw(std::size_t n) {
    std::vector<double> z(n);
    for (double& zi : z) zi = next();
    return z;
  }
};

/// Seeded generator; identical seed and draw sequence give an identical
/// output stream within one build of the library.
class StdNormalSource final : public NormalSource {
 public:
  explicit StdNormalSource(std::uint64_t seed) : engine_(seed) {}
  double next() override { return dist_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> dist_;
};

/// Replays a fixed sequence instead of drawing. This is the deterministic
/// noise-injection seam used by tests; exhausting the sequence throws.
class InjectedNormalSource final : public NormalSource {
 public:
  explicit InjectedNormalSource(std::vector<double> values)
      : values_(std::move(values)) {}

  double next() override {
    if (pos_ >= values_.size()) {
      throw ValidationError("injected noise sequence exhausted");
    }
    return values_[pos_++];
  }

 private:
  std::vector<double> values_;
  std::size_t pos_ = 0;
};

}  // namespace ar1band

#endif  // AR1BAND_RNG_HPP
