#include "nlcs/quadrature.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "nlcs/errors.hpp"
#include "nlcs/hypergeom.hpp"

namespace nlcs {

GaussRule gauss_laguerre(int points, double alpha) {
  if (points < 1) throw DomainError("gauss_laguerre: need at least one node");
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre: alpha must exceed -1");

  // Jacobi matrix of the monic Laguerre recurrence.
  Eigen::VectorXd diag(points);
  Eigen::VectorXd sub(points > 1 ? points - 1 : 0);
  for (int i = 0; i < points; ++i) diag(i) = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < points; ++i) sub(i - 1) = std::sqrt(i * (i + alpha));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw QuadratureFailure("gauss_laguerre: eigenvalue solver failed");
  }
  const double mu0 = std::exp(log_gamma(alpha + 1.0));
  GaussRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  for (int i = 0; i < points; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

double laguerre_moment(const GaussRule& rule, int n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * std::pow(rule.nodes[i], n);
  }
  return acc;
}

}  // namespace nlcs
