#include "nlcs/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlcs/errors.hpp"

namespace nlcs {

std::complex<double> polynomial_eval(std::span<const double> ascending,
                                     std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

namespace {

std::complex<double> derivative_eval(std::span<const double> ascending,
                                     std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = ascending.size(); i-- > 1;) {
    acc = acc * z + static_cast<double>(i) * ascending[i];
  }
  return acc;
}

double magnitude_scale(std::span<const double> ascending,
                       std::complex<double> z) {
  double r = std::abs(z);
  double acc = 0.0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
    acc = acc * r + std::abs(*it);
  }
  return acc;
}

// Replace near-conjugate partners by an exact conjugate pair and snap
// nearly-real roots onto the real axis.
void pair_conjugates(std::vector<std::complex<double>>& roots) {
  const std::size_t n = roots.size();
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    const auto z = roots[i];
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= 1e-12 * scale) {
      roots[i] = {z.real(), 0.0};
      done[i] = true;
      continue;
    }
    std::size_t best = n;
    double best_dist = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || done[k]) continue;
      const double d = std::abs(roots[k] - std::conj(z));
      if (best == n || d < best_dist) {
        best = k;
        best_dist = d;
      }
    }
    if (best == n || best_dist > 1e-6 * scale) {
      done[i] = true;
      continue;
    }
    const auto avg = 0.5 * (z + std::conj(roots[best]));
    roots[i] = avg;
    roots[best] = std::conj(avg);
    done[i] = done[best] = true;
  }
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(
    std::span<const double> ascending, const RootSolveOptions& opts) {
  // Drop exact zero high-order coefficients.
  std::size_t len = ascending.size();
  while (len > 0 && ascending[len - 1] == 0.0) --len;
  if (len == 0) throw RootSolveFailure("polynomial_roots: zero polynomial");
  const auto poly = ascending.first(len);
  const std::size_t degree = len - 1;
  if (degree == 0) return {};

  // Initial guesses on a circle whose radius is the Cauchy bound.
  const double lead = poly[degree];
  double radius = 0.0;
  for (std::size_t i = 0; i < degree; ++i) {
    radius = std::max(radius, std::abs(poly[i] / lead));
  }
  radius = 1.0 + radius;
  std::vector<std::complex<double>> z(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(i) / degree + 0.4;
    z[i] = std::polar(0.5 * radius, angle);
  }

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < degree; ++i) {
      const auto value = polynomial_eval(poly, z[i]);
      if (std::abs(value) <= opts.residual_tol * magnitude_scale(poly, z[i])) {
        continue;
      }
      converged = false;
      const auto ratio = value / derivative_eval(poly, z[i]);
      std::complex<double> repulsion = 0.0;
      for (std::size_t k = 0; k < degree; ++k) {
        if (k != i) repulsion += 1.0 / (z[i] - z[k]);
      }
      const auto step = ratio / (1.0 - ratio * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[i] -= step;
      } else {
        z[i] += std::polar(1e-3 * radius, 0.7 * static_cast<double>(i + 1));
      }
    }
    if (converged) {
      pair_conjugates(z);
      return z;
    }
  }
  throw RootSolveFailure("polynomial_roots: no convergence after " +
                         std::to_string(opts.max_iterations) + " iterations");
}

}  // namespace nlcs
