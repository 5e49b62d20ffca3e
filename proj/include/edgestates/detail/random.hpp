#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "edgestates/types.hpp"

namespace edgestates::detail {

/// Seeded sampler built on mt19937_64 raw bits. Uniform and Gaussian
/// draws avoid std:: distributions, whose output is implementation
/// defined; the same seed yields the same stream on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im);
  }

  ComplexVector complex_gaussian_vector(Index dim) {
    ComplexVector v(dim);
    for (Index k = 0; k < dim; ++k) v(k) = complex_gaussian();
    return v;
  }

  /// Uniform point on the unit sphere of C^dim.
  ComplexVector unit_vector(Index dim) {
    ComplexVector v = complex_gaussian_vector(dim);
    double norm = v.norm();
    while (norm < 1e-8) {
      v = complex_gaussian_vector(dim);
      norm = v.norm();
    }
    return v / norm;
  }

 private:
  std::mt19937_64 gen_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace edgestates::detail
