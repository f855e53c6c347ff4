#include "nlcs/coherent_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlcs/errors.hpp"

namespace nlcs {

namespace {

constexpr double kRescaleAbove = 1e150;

AlgebraKind kind_for(Family f) {
  return f == Family::Su2PCS ? AlgebraKind::Su2Like : AlgebraKind::Su11Like;
}

cplx one_minus(cplx r) { return 1.0 - r; }

// Ratio u_{n+1}/u_n of the unnormalised coefficients without the amplitude.
double coefficient_ratio(const CSSpec& spec, long n) {
  const auto& def = spec.deformation();
  const double next = ladder_sq(def, n + 1);
  const double dn = static_cast<double>(n);
  switch (spec.family()) {
    case Family::Su2PCS:
      return std::sqrt(next) / (dn + 1.0);
    case Family::Su11BGCS:
      if (next == 0.0) {
        throw DomainError("Barut-Girardello state undefined: phi_" +
                          std::to_string(n + 1) + " = 0");
      }
      return 1.0 / std::sqrt(next);
    case Family::Su11PCS:
      if (next == 0.0) {
        throw DomainError("su(1,1) Perelomov state undefined: phi_" +
                          std::to_string(n + 1) + " = 0");
      }
      return (2.0 * def.rep_label() + dn) / std::sqrt(next);
  }
  return 0.0;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Su2PCS:
      return "su2-pcs";
    case Family::Su11BGCS:
      return "su11-bgcs";
    case Family::Su11PCS:
      return "su11-pcs";
  }
  return "?";
}

CSSpec::CSSpec(Family family, DeformationSpec deformation, cplx amplitude)
    : family_(family), deformation_(std::move(deformation)), amplitude_(amplitude) {
  if (deformation_.kind() != kind_for(family_)) {
    throw InvalidSpec("deformation kind does not match the coherent-state family");
  }
  if (!(deformation_.leading() > 0.0)) {
    throw InvalidSpec("leading deformation coefficient must be positive");
  }
  if (!std::isfinite(amplitude_.real()) || !std::isfinite(amplitude_.imag())) {
    throw InvalidSpec("amplitude must be finite");
  }
  if (family_ == Family::Su11PCS && deformation_.linear() &&
      !(series_variable() < 1.0)) {
    throw DomainError("linear su(1,1) Perelomov state needs z < 1");
  }
}

CSSpec CSSpec::from_series_variable(Family family, DeformationSpec deformation,
                                    double xbar) {
  if (!(xbar >= 0.0)) throw DomainError("series variable must be >= 0");
  if (!(deformation.leading() > 0.0)) {
    throw InvalidSpec("leading deformation coefficient must be positive");
  }
  const double scale = family == Family::Su2PCS ? deformation.leading()
                                                : 1.0 / deformation.leading();
  return CSSpec(family, std::move(deformation), std::sqrt(xbar / scale));
}

double CSSpec::variable_scale() const noexcept {
  return family_ == Family::Su2PCS ? deformation_.leading()
                                   : 1.0 / deformation_.leading();
}

double CSSpec::series_variable() const noexcept {
  return variable_scale() * std::norm(amplitude_);
}

double CoefficientVector::norm_sq() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return s;
}

double argument_sign(Family family) {
  return family == Family::Su2PCS ? -1.0 : 1.0;
}

SeriesParams normalization_params(const CSSpec& spec) {
  const auto& def = spec.deformation();
  const RootSet roots = deformation_roots(def);
  SeriesParams params;
  params.arg = argument_sign(spec.family()) * spec.series_variable();
  const double l = def.rep_label();
  switch (spec.family()) {
    case Family::Su2PCS:
      params.numer.push_back(-2.0 * l);
      for (const auto& r : roots.roots) params.numer.push_back(one_minus(r));
      break;
    case Family::Su11BGCS:
      params.denom.push_back(2.0 * l);
      for (const auto& r : roots.roots) params.denom.push_back(one_minus(r));
      break;
    case Family::Su11PCS:
      params.numer.push_back(2.0 * l);
      for (const auto& r : roots.roots) params.denom.push_back(one_minus(r));
      break;
  }
  return params;
}

double normalization(const CSSpec& spec) {
  return pfq(normalization_params(spec)).value.real();
}

CoefficientVector coefficients(const CSSpec& spec, double eps) {
  if (!(eps > 0.0)) throw DomainError("coefficients: eps must be positive");
  const auto& def = spec.deformation();
  const cplx amp = spec.amplitude();
  const double amp_sq = std::norm(amp);
  const bool compact = spec.family() == Family::Su2PCS;
  // Limit of the squared coefficient ratio as n grows: only the linear
  // su(1,1) Perelomov state has a non-zero one (z).
  const double asymptotic =
      spec.family() == Family::Su11PCS && def.linear() ? spec.series_variable()
                                                       : 0.0;

  CoefficientVector out;
  std::vector<cplx> u{cplx(1.0)};
  double sum = 1.0;
  double log_shift = 0.0;
  double prev_ratio_sq = std::numeric_limits<double>::infinity();
  long n = 0;
  for (;; ++n) {
    if (compact && n == def.two_j()) {
      out.tail_bound = 0.0;
      break;
    }
    const double ratio = coefficient_ratio(spec, n);
    const double ratio_sq = ratio * ratio * amp_sq;
    if (!compact) {
      const double bound = std::max(ratio_sq, asymptotic);
      const bool settled = ratio_sq <= prev_ratio_sq || ratio_sq <= asymptotic;
      if (bound < 1.0 && settled) {
        const double remaining = std::norm(u.back()) / (1.0 - bound) / sum;
        if (remaining < eps * eps) {
          out.tail_bound = std::sqrt(remaining);
          break;
        }
      }
      if (n + 1 >= kMaxTruncation) {
        throw ConvergenceFailure("coefficients: truncation cap reached");
      }
    }
    prev_ratio_sq = ratio_sq;
    const cplx next = u.back() * ratio * amp;
    u.push_back(next);
    sum += std::norm(next);
    if (std::abs(next) > kRescaleAbove) {
      const double s = 1.0 / kRescaleAbove;
      for (auto& c : u) c *= s;
      sum *= s * s;
      log_shift += std::log(kRescaleAbove);
    }
  }

  out.truncation = n;
  out.log_direct_norm = std::log(sum) + 2.0 * log_shift;
  const double inv = 1.0 / std::sqrt(sum);
  out.coeffs.reserve(u.size());
  for (const auto& c : u) out.coeffs.push_back(c * inv);
  return out;
}

CoefficientVector apply_lowering(const DeformationSpec& spec,
                                 const CoefficientVector& v) {
  CoefficientVector out = v;
  const std::size_t size = v.coeffs.size();
  for (std::size_t n = 0; n < size; ++n) {
    out.coeffs[n] = n + 1 < size
                        ? std::sqrt(ladder_sq(spec, static_cast<long>(n) + 1)) *
                              v.coeffs[n + 1]
                        : cplx(0.0);
  }
  return out;
}

CoefficientVector apply_raising(const DeformationSpec& spec,
                                const CoefficientVector& v) {
  CoefficientVector out = v;
  std::size_t size = v.coeffs.size();
  if (!spec.compact()) {
    ++size;
    out.truncation += 1;
  }
  out.coeffs.assign(size, cplx(0.0));
  for (std::size_t n = 0; n + 1 < size && n < v.coeffs.size(); ++n) {
    out.coeffs[n + 1] =
        std::sqrt(ladder_sq(spec, static_cast<long>(n) + 1)) * v.coeffs[n];
  }
  return out;
}

double bg_eigen_residual(const CSSpec& spec, double eps) {
  if (spec.family() != Family::Su11BGCS) {
    throw DomainError("bg_eigen_residual needs a Barut-Girardello state");
  }
  const auto v = coefficients(spec, eps);
  const auto lowered = apply_lowering(spec.deformation(), v);
  double acc = 0.0;
  for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
    acc += std::norm(lowered.coeffs[n] - spec.amplitude() * v.coeffs[n]);
  }
  return std::sqrt(acc);
}

double distance(const CoefficientVector& a, const CoefficientVector& b) {
  const std::size_t size = std::max(a.coeffs.size(), b.coeffs.size());
  double acc = 0.0;
  for (std::size_t n = 0; n < size; ++n) {
    const cplx x = n < a.coeffs.size() ? a.coeffs[n] : cplx(0.0);
    const cplx y = n < b.coeffs.size() ? b.coeffs[n] : cplx(0.0);
    acc += std::norm(x - y);
  }
  return std::sqrt(acc);
}

cplx inner_product(const CoefficientVector& a, const CoefficientVector& b) {
  const std::size_t size = std::min(a.coeffs.size(), b.coeffs.size());
  cplx acc = 0.0;
  for (std::size_t n = 0; n < size; ++n) acc += std::conj(a.coeffs[n]) * b.coeffs[n];
  return acc;
}

}  // namespace nlcs
