#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace nlcs {

enum class AlgebraKind { Su2Like, Su11Like };

// Odd-degree (2p-1) polynomial deformation of su(2) or su(1,1) together
// with the irreducible representation it acts on.
//
// coeffs holds alpha_1..alpha_p (Su2Like) or beta_1..beta_p (Su11Like).
// rep_label is j for Su2Like (2j a non-negative integer) and the Bargmann
// index k > 0 for Su11Like.
class DeformationSpec {
 public:
  DeformationSpec(AlgebraKind kind, std::vector<double> coeffs,
                  double rep_label);

  static DeformationSpec linear_su2(double j) { return {AlgebraKind::Su2Like, {1.0}, j}; }
  static DeformationSpec higgs_su2(double j, double alpha2 = 2.0) {
    return {AlgebraKind::Su2Like, {1.0, alpha2}, j};
  }
  static DeformationSpec linear_su11(double k) { return {AlgebraKind::Su11Like, {1.0}, k}; }
  static DeformationSpec higgs_su11(double k, double beta2 = 2.0) {
    return {AlgebraKind::Su11Like, {1.0, beta2}, k};
  }

  // Same validation except that the leading coefficient may be negative.
  // Only the algebra (ladder elements, unitarity) is meaningful for such a
  // spec; it cannot parametrize a coherent state.
  static DeformationSpec unchecked_sign(AlgebraKind kind, std::vector<double> coeffs,
                                        double rep_label) {
    return DeformationSpec(kind, std::move(coeffs), rep_label, false);
  }

  AlgebraKind kind() const noexcept { return kind_; }
  bool compact() const noexcept { return kind_ == AlgebraKind::Su2Like; }
  int p() const noexcept { return static_cast<int>(coeffs_.size()); }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  double leading() const noexcept { return coeffs_.back(); }
  double rep_label() const noexcept { return label_; }
  bool linear() const noexcept { return coeffs_.size() == 1; }

  // 2j for Su2Like. Undefined for Su11Like.
  long two_j() const noexcept { return two_j_; }

 private:
  DeformationSpec(AlgebraKind kind, std::vector<double> coeffs, double rep_label,
                  bool require_positive_leading);

  AlgebraKind kind_;
  std::vector<double> coeffs_;
  double label_;
  long two_j_ = 0;
};

// Complex roots of the deformation factor viewed as a polynomial in n:
// factor(n) = leading * prod_i (n - roots[i]).
struct RootSet {
  double leading = 1.0;
  std::vector<std::complex<double>> roots;

  std::complex<double> evaluate(double n) const;
};

/// Structure function g(m) = sum_r c_r [m(m+1)]^r.
double structure_g(const DeformationSpec& spec, double m);

/// Deformed commutator [X+, X-] on the diagonal eigenvalue m, computed from
/// differences of g: g(m)-g(m-1) (Su2Like) or g(m-1)-g(m) (Su11Like).
double poly_P(const DeformationSpec& spec, double m);

/// The same commutator polynomial written out explicitly as
/// +-2 sum_r c_r m^r sum_s (m+1)^(r-s) (m-1)^(s-1).
double poly_P_expanded(const DeformationSpec& spec, double m);

/// Eigenvalue of the diagonal generator on basis index n: -j+n or k+n.
double diagonal_eigenvalue(const DeformationSpec& spec, long n);

/// Squared ladder matrix element psi_n (Su2Like) or phi_n (Su11Like).
/// Values within rounding of zero are clamped to exactly 0; genuinely
/// negative values throw UnitarityViolation. For Su2Like n must lie in
/// [0, 2j+1].
double ladder_sq(const DeformationSpec& spec, long n);

/// Deformation factor chi_n / rho_n as the double sum over (r, s). Accepts
/// real n. Equals coeffs[0] for every n when p = 1.
double deformation_factor(const DeformationSpec& spec, double n);

/// Monomial coefficients (ascending powers of n) of the deformation factor.
std::vector<double> deformation_polynomial(const DeformationSpec& spec);

/// Roots of the deformation factor. Closed quadratic form for p = 2, an
/// Aberth iteration for p > 2 and an empty set for p = 1.
RootSet deformation_roots(const DeformationSpec& spec);

/// Checks ladder_sq >= 0 on n = 1..2j (Su2Like) or n = 1..n_cap (Su11Like).
/// Throws UnitarityViolation naming the first offending n.
void validate_unitarity(const DeformationSpec& spec, long n_cap = 1000);

/// Casimir eigenvalue: g(j) for Su2Like, g(k-1) for Su11Like.
double casimir_eigenvalue(const DeformationSpec& spec);

/// The Casimir operator evaluated on basis vector n through the ladder
/// elements and g, i.e. 1/2[{X+,X-} +- (g(m) + g(m-1))] reduced to a scalar.
double casimir_on_basis(const DeformationSpec& spec, long n);

}  // namespace nlcs
