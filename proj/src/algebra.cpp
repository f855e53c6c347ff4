#include "nlcs/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlcs/errors.hpp"
#include "nlcs/poly_roots.hpp"

namespace nlcs {

namespace {

constexpr double kHalfIntegerTol = 1e-12;
constexpr double kClampTol = 1e-12;

// The (A, B) pair of the double-sum form: the factor is
// sum_r c_r sum_s A^(r-s) B^(s-1) with A the Casimir-like constant.
struct FactorArgs {
  double a;
  double b;
};

FactorArgs factor_args(const DeformationSpec& spec, double n) {
  const double l = spec.rep_label();
  if (spec.compact()) {
    return {l * (l + 1.0), (l - n) * (l - n + 1.0)};
  }
  return {l * (l - 1.0), (l + n) * (l + n - 1.0)};
}

std::vector<double> poly_mul(const std::vector<double>& x,
                             const std::vector<double>& y) {
  std::vector<double> out(x.size() + y.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < y.size(); ++k) out[i + k] += x[i] * y[k];
  }
  return out;
}

void poly_add_scaled(std::vector<double>& acc, const std::vector<double>& x,
                     double scale) {
  if (acc.size() < x.size()) acc.resize(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += scale * x[i];
}

}  // namespace

DeformationSpec::DeformationSpec(AlgebraKind kind, std::vector<double> coeffs,
                                 double rep_label)
    : DeformationSpec(kind, std::move(coeffs), rep_label, true) {}

DeformationSpec::DeformationSpec(AlgebraKind kind, std::vector<double> coeffs,
                                 double rep_label, bool require_positive_leading)
    : kind_(kind), coeffs_(std::move(coeffs)), label_(rep_label) {
  if (coeffs_.empty()) {
    throw InvalidSpec("deformation needs at least one coefficient");
  }
  for (std::size_t r = 0; r < coeffs_.size(); ++r) {
    if (!std::isfinite(coeffs_[r]) || coeffs_[r] == 0.0) {
      throw InvalidSpec("deformation coefficient " + std::to_string(r + 1) +
                        " must be finite and nonzero");
    }
  }
  if (require_positive_leading && !(coeffs_.back() > 0.0)) {
    throw InvalidSpec("leading deformation coefficient must be positive");
  }
  if (!std::isfinite(label_) || !(label_ > 0.0)) {
    throw InvalidSpec("representation label must be positive");
  }
  if (kind_ == AlgebraKind::Su2Like) {
    const double twice = 2.0 * label_;
    const double rounded = std::round(twice);
    if (std::abs(twice - rounded) > kHalfIntegerTol) {
      throw InvalidSpec("su(2) label j must be a half-integer");
    }
    two_j_ = static_cast<long>(rounded);
    label_ = 0.5 * rounded;
  }
}

std::complex<double> RootSet::evaluate(double n) const {
  std::complex<double> acc = leading;
  for (const auto& r : roots) acc *= (n - r);
  return acc;
}

double structure_g(const DeformationSpec& spec, double m) {
  const double u = m * (m + 1.0);
  const auto& c = spec.coeffs();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc + *it) * u;
  return acc;
}

double poly_P(const DeformationSpec& spec, double m) {
  const double diff = structure_g(spec, m) - structure_g(spec, m - 1.0);
  return spec.compact() ? diff : -diff;
}

double poly_P_expanded(const DeformationSpec& spec, double m) {
  const auto& c = spec.coeffs();
  double total = 0.0;
  for (int r = 1; r <= spec.p(); ++r) {
    double inner = 0.0;
    for (int s = 1; s <= r; ++s) {
      inner += std::pow(m + 1.0, r - s) * std::pow(m - 1.0, s - 1);
    }
    total += c[r - 1] * std::pow(m, r) * inner;
  }
  return (spec.compact() ? 2.0 : -2.0) * total;
}

double diagonal_eigenvalue(const DeformationSpec& spec, long n) {
  const double l = spec.rep_label();
  return spec.compact() ? -l + static_cast<double>(n)
                        : l + static_cast<double>(n);
}

double ladder_sq(const DeformationSpec& spec, long n) {
  if (n < 0) throw DomainError("ladder_sq: negative basis index");
  const double l = spec.rep_label();
  const double dn = static_cast<double>(n);
  double hi;
  double lo;
  if (spec.compact()) {
    if (n > spec.two_j() + 1) {
      throw DomainError("ladder_sq: index " + std::to_string(n) +
                        " outside the 2j+1 dimensional representation");
    }
    hi = structure_g(spec, l);
    lo = structure_g(spec, -l + dn - 1.0);
  } else {
    hi = structure_g(spec, l + dn - 1.0);
    lo = structure_g(spec, l - 1.0);
  }
  const double value = hi - lo;
  if (value >= 0.0) return value;
  const double scale = std::max({1.0, std::abs(hi), std::abs(lo)});
  if (value >= -kClampTol * scale) return 0.0;
  throw UnitarityViolation(n, value);
}

double deformation_factor(const DeformationSpec& spec, double n) {
  const auto [a, b] = factor_args(spec, n);
  const auto& c = spec.coeffs();
  double total = 0.0;
  for (int r = 1; r <= spec.p(); ++r) {
    double inner = 0.0;
    for (int s = 1; s <= r; ++s) {
      inner += std::pow(a, r - s) * std::pow(b, s - 1);
    }
    total += c[r - 1] * inner;
  }
  return total;
}

std::vector<double> deformation_polynomial(const DeformationSpec& spec) {
  const double l = spec.rep_label();
  double a;
  std::vector<double> b;
  if (spec.compact()) {
    a = l * (l + 1.0);
    b = {l * (l + 1.0), -(2.0 * l + 1.0), 1.0};
  } else {
    a = l * (l - 1.0);
    b = {l * (l - 1.0), 2.0 * l - 1.0, 1.0};
  }
  const int p = spec.p();
  // powers of B: b_pow[s] = B^s
  std::vector<std::vector<double>> b_pow{{1.0}};
  for (int s = 1; s < p; ++s) b_pow.push_back(poly_mul(b_pow.back(), b));

  std::vector<double> out{0.0};
  const auto& c = spec.coeffs();
  for (int r = 1; r <= p; ++r) {
    for (int s = 1; s <= r; ++s) {
      poly_add_scaled(out, b_pow[s - 1], c[r - 1] * std::pow(a, r - s));
    }
  }
  return out;
}

RootSet deformation_roots(const DeformationSpec& spec) {
  RootSet set;
  set.leading = spec.leading();
  if (spec.p() == 1) return set;

  if (spec.p() == 2) {
    const double l = spec.rep_label();
    const double ratio = spec.coeffs()[0] / spec.coeffs()[1];
    if (spec.compact()) {
      const double center = 2.0 * l + 1.0;
      const auto disc = std::sqrt(std::complex<double>(
          center * center - 8.0 * l * (l + 1.0) - 4.0 * ratio, 0.0));
      set.roots = {0.5 * (center + disc), 0.5 * (center - disc)};
    } else {
      const double center = 2.0 * l - 1.0;
      const auto disc = std::sqrt(std::complex<double>(
          center * center - 8.0 * l * (l - 1.0) - 4.0 * ratio, 0.0));
      set.roots = {-0.5 * (center + disc), -0.5 * (center - disc)};
    }
    return set;
  }

  const auto poly = deformation_polynomial(spec);
  set.roots = polynomial_roots(poly);
  return set;
}

void validate_unitarity(const DeformationSpec& spec, long n_cap) {
  const long last = spec.compact() ? spec.two_j() : n_cap;
  for (long n = 1; n <= last; ++n) (void)ladder_sq(spec, n);
}

double casimir_eigenvalue(const DeformationSpec& spec) {
  const double l = spec.rep_label();
  return spec.compact() ? structure_g(spec, l) : structure_g(spec, l - 1.0);
}

double casimir_on_basis(const DeformationSpec& spec, long n) {
  const double m = diagonal_eigenvalue(spec, n);
  const double anti = ladder_sq(spec, n) + ladder_sq(spec, n + 1);
  const double gs = structure_g(spec, m) + structure_g(spec, m - 1.0);
  return spec.compact() ? 0.5 * (anti + gs) : 0.5 * (gs - anti);
}

}  // namespace nlcs
