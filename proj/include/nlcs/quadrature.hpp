#pragma once

#include <vector>

namespace nlcs {

// Generalised Gauss-Laguerre rule for the weight x^alpha e^{-x} on [0, inf).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights by the Golub-Welsch eigenvalue method. alpha > -1.
GaussRule gauss_laguerre(int points, double alpha);

/// sum_i w_i x_i^n for the rule above; the exact value is Gamma(n+alpha+1).
double laguerre_moment(const GaussRule& rule, int n);

}  // namespace nlcs
