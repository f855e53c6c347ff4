#pragma once

#include <complex>
#include <vector>

#include "nlcs/coherent_state.hpp"

namespace nlcs {

/// Real A such that <psi| d/dt |psi> = A (conj(a) da/dt - conj(da/dt) a) for
/// the amplitude a(t) of the state. Built as the family prefactor times the
/// ratio of the once-shifted to the unshifted normalisation series.
double connection_coefficient(const CSSpec& spec);

// Circular loop a(t) = radius * exp(i * angular_rate * t), t in [0, period],
// period = 2 pi / |angular_rate|. A negative rate runs clockwise.
struct LoopSpec {
  double radius = 1.0;
  double angular_rate = 1.0;
  int samples = 64;

  double period() const;
  cplx amplitude_at(double t) const;
  cplx velocity_at(double t) const;
  void validate() const;
};

struct BerryPhase {
  double gamma = 0.0;
  double imag_residual = 0.0;  // |Im| of the integrated phase
};

/// gamma = i * integral_0^T <psi|d/dt|psi> dt over the loop, composite
/// trapezoid on `samples` uniform intervals. Only the family and
/// deformation of `spec_template` are used.
BerryPhase berry_phase_loop(const CSSpec& spec_template, const LoopSpec& loop);

/// d/ds <psi(a)|psi(a + v s)> at s = 0 by a fourth-order central stencil
/// on truncated coefficient vectors. dt <= 0 selects 3e-5 |a| / |v|.
cplx connection_fd_oracle(const CSSpec& spec, cplx velocity, double dt = 0.0,
                          double eps = 1e-15);

// Finite su(1,1) state sum_n c_n |k, n> probed through the
// Barut-Girardello and Perelomov generating functions.
struct LaplaceProbe {
  std::vector<cplx> coeffs;
  DeformationSpec deformation;  // Su11Like; its label is k
  double Z = 1.0;
  int quad_nodes = 64;

  double k() const { return deformation.rep_label(); }
  void validate() const;
};

/// F(xi) = sum_n c_n (Gamma(2k) / (n! Gamma(n+2k) [rho_n]!))^(1/2) xi^n.
cplx bg_series_F(const LaplaceProbe& probe, double xi);

/// G(1/Z) = sum_n c_n (Gamma(n+2k) / (n! Gamma(2k) [rho_n]!))^(1/2) Z^-n.
cplx pcs_series_G(const LaplaceProbe& probe);

struct LaplaceCheck {
  cplx lhs;   // G(1/Z)
  cplx rhs;   // Z^{2k}/Gamma(2k) * int_0^inf xi^{2k-1} F(xi) e^{-Z xi} dxi
  double gap = 0.0;
  // The same integral with prefactor Z^{2k}/sqrt(Gamma(2k)) instead.
  cplx rhs_sqrt_gamma_prefactor;
  bool used_fallback = false;  // adaptive exp-sinh integration was needed
};

/// Throws QuadratureFailure when neither Gauss-Laguerre nor the adaptive
/// fallback reaches 1e-10 relative accuracy.
LaplaceCheck laplace_check(const LaplaceProbe& probe);

}  // namespace nlcs
