#pragma once

#include <complex>
#include <span>
#include <vector>

namespace nlcs {

struct RootSolveOptions {
  double residual_tol = 1e-12;  // relative to sum |c_i| |z|^i
  int max_iterations = 500;
};

// All complex roots of a real polynomial given by its monomial coefficients
// in ascending order. Uses the Aberth-Ehrlich simultaneous iteration and
// then pairs near-conjugate roots so the returned set is closed under
// conjugation. Throws RootSolveFailure after max_iterations.
std::vector<std::complex<double>> polynomial_roots(
    std::span<const double> ascending, const RootSolveOptions& opts = {});

// Horner evaluation of a real polynomial at a complex point.
std::complex<double> polynomial_eval(std::span<const double> ascending,
                                     std::complex<double> z);

}  // namespace nlcs
