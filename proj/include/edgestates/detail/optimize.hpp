#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "edgestates/types.hpp"

namespace edgestates::detail {

// Gauge-fixed coordinates for the unit sphere of C^m modulo a global
// phase: m-1 hyperspherical angles for the moduli followed by m-1
// relative phases on components 1..m-1. 2m-2 real parameters in total.

inline ComplexVector sphere_point(const RealVector& p, Index m) {
  RealVector moduli(m);
  double sines = 1.0;
  for (Index j = 0; j < m - 1; ++j) {
    moduli(j) = sines * std::cos(p(j));
    sines *= std::sin(p(j));
  }
  moduli(m - 1) = sines;
  ComplexVector x(m);
  x(0) = moduli(0);
  for (Index j = 1; j < m; ++j) {
    const double phase = p(m - 1 + j - 1);
    x(j) = moduli(j) * Complex(std::cos(phase), std::sin(phase));
  }
  return x;
}

inline RealVector sphere_params(const ComplexVector& x) {
  const Index m = x.size();
  const ComplexVector u = x / x.norm();
  // rotate the first component real-nonnegative
  Complex phase(1.0, 0.0);
  for (Index j = 0; j < m; ++j) {
    if (std::abs(u(j)) > 1e-14) {
      phase = std::abs(u(j)) / u(j);
      break;
    }
  }
  const ComplexVector g = phase * u;
  RealVector p(2 * m - 2);
  double tail = 0.0;
  for (Index j = m - 1; j >= 0; --j) {
    if (j < m - 1) p(j) = std::atan2(std::sqrt(tail), std::abs(g(j)));
    tail += std::norm(g(j));
  }
  for (Index j = 1; j < m; ++j) p(m - 1 + j - 1) = std::arg(g(j));
  return p;
}

struct NelderMeadOptions {
  int max_iterations = 500;
  double step_tolerance = 1e-12;  // simplex diameter
  double initial_step = 0.3;
};

struct NelderMeadResult {
  RealVector x;
  double f = 0.0;
  int iterations = 0;
};

/// Deterministic Nelder-Mead simplex descent. Ties in the vertex ordering
/// break by insertion index so the trajectory is reproducible bit for bit.
inline NelderMeadResult nelder_mead(const std::function<double(const RealVector&)>& f,
                                    const RealVector& x0, const NelderMeadOptions& opts) {
  const Index n = x0.size();
  std::vector<RealVector> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (Index j = 0; j < n; ++j) xs[j + 1](j) += opts.initial_step;
  for (Index j = 0; j <= n; ++j) fs[j] = f(xs[j]);

  std::vector<int> order(n + 1);
  auto sort_order = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fs[a] < fs[b]; });
  };

  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    sort_order();
    const int best = order[0], worst = order[n], second_worst = order[n - 1];

    double diameter = 0.0;
    for (Index j = 1; j <= n; ++j)
      diameter = std::max(diameter, (xs[order[j]] - xs[best]).cwiseAbs().maxCoeff());
    if (diameter < opts.step_tolerance) break;

    RealVector centroid = RealVector::Zero(n);
    for (Index j = 0; j < n; ++j) centroid += xs[order[j]];
    centroid /= static_cast<double>(n);

    const RealVector reflected = centroid + (centroid - xs[worst]);
    const double f_reflected = f(reflected);

    if (f_reflected < fs[best]) {
      const RealVector expanded = centroid + 2.0 * (centroid - xs[worst]);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        xs[worst] = expanded;
        fs[worst] = f_expanded;
      } else {
        xs[worst] = reflected;
        fs[worst] = f_reflected;
      }
    } else if (f_reflected < fs[second_worst]) {
      xs[worst] = reflected;
      fs[worst] = f_reflected;
    } else {
      const bool outside = f_reflected < fs[worst];
      const RealVector contracted =
          outside ? RealVector(centroid + 0.5 * (centroid - xs[worst]))
                  : RealVector(centroid - 0.5 * (centroid - xs[worst]));
      const double f_contracted = f(contracted);
      if (f_contracted < std::min(f_reflected, fs[worst])) {
        xs[worst] = contracted;
        fs[worst] = f_contracted;
      } else {
        for (Index j = 1; j <= n; ++j) {
          const int k = order[j];
          xs[k] = xs[best] + 0.5 * (xs[k] - xs[best]);
          fs[k] = f(xs[k]);
        }
      }
    }
  }

  sort_order();
  return NelderMeadResult{xs[order[0]], fs[order[0]], iter};
}

}  // namespace edgestates::detail
