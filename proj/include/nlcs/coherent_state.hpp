#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "nlcs/algebra.hpp"
#include "nlcs/hypergeom.hpp"

namespace nlcs {

enum class Family { Su2PCS, Su11BGCS, Su11PCS };

std::string_view family_name(Family f);

// One coherent state: family, deformation and complex amplitude
// (zeta, xi or eta depending on the family).
class CSSpec {
 public:
  CSSpec(Family family, DeformationSpec deformation, cplx amplitude);

  // Builds the state with a real, non-negative amplitude whose series
  // variable equals xbar.
  static CSSpec from_series_variable(Family family, DeformationSpec deformation,
                                     double xbar);

  Family family() const noexcept { return family_; }
  const DeformationSpec& deformation() const noexcept { return deformation_; }
  cplx amplitude() const noexcept { return amplitude_; }

  // d xbar / d|amplitude|^2: alpha_p for Su2PCS, 1/beta_p otherwise.
  double variable_scale() const noexcept;
  // x = alpha_p |zeta|^2, y = |xi|^2 / beta_p or z = |eta|^2 / beta_p.
  double series_variable() const noexcept;

  CSSpec with_amplitude(cplx amplitude) const {
    return CSSpec(family_, deformation_, amplitude);
  }

 private:
  Family family_;
  DeformationSpec deformation_;
  cplx amplitude_;
};

// Truncated state over the integer basis |0>, ..., |N>.
struct CoefficientVector {
  std::vector<cplx> coeffs;
  long truncation = 0;      // N; coeffs.size() == N + 1
  double tail_bound = 0.0;  // estimated norm of components n >= N relative to the state
  // ln( sum_n |u_n|^2 / |u_0|^2 ) for the unnormalised coefficients u_n, i.e.
  // the normalisation constant obtained by direct summation.
  double log_direct_norm = 0.0;

  double norm_sq() const;
};

inline constexpr double kDefaultCoefficientEps = 1e-13;
inline constexpr long kMaxTruncation = 10000;

/// pFq request whose value is the normalisation N(xbar), with the argument
/// sign folded in (arg = -x for Su2PCS).
SeriesParams normalization_params(const CSSpec& spec);

/// Sign relating the pFq argument to the series variable (-1 for Su2PCS).
double argument_sign(Family family);

/// Normalisation constant N(xbar) through the hypergeometric series.
double normalization(const CSSpec& spec);

/// Normalised expansion coefficients built by the ratio recurrence.
/// Su2PCS stops at N = 2j; the su(1,1) families stop once the estimated
/// norm of the remaining components drops below eps.
CoefficientVector coefficients(const CSSpec& spec,
                               double eps = kDefaultCoefficientEps);

/// (X- v)_n = sqrt(ladder_sq(n+1)) v_{n+1}. Not renormalised.
CoefficientVector apply_lowering(const DeformationSpec& spec,
                                 const CoefficientVector& v);

/// (X+ v)_{n+1} = sqrt(ladder_sq(n+1)) v_n. The su(1,1) result grows by one
/// component; the su(2) result keeps its 2j+1 components. Not renormalised.
CoefficientVector apply_raising(const DeformationSpec& spec,
                                const CoefficientVector& v);

/// || K- |xi> - xi |xi> || on the truncated Barut-Girardello vector.
double bg_eigen_residual(const CSSpec& spec, double eps = 1e-12);

/// ||a - b|| with the shorter vector padded by zeros.
double distance(const CoefficientVector& a, const CoefficientVector& b);

/// <a|b> with the shorter vector padded by zeros.
cplx inner_product(const CoefficientVector& a, const CoefficientVector& b);

}  // namespace nlcs
