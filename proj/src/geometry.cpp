#include "nlcs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "nlcs/errors.hpp"
#include "nlcs/quadrature.hpp"

namespace nlcs {

namespace {

SeriesParams shift_params(const SeriesParams& params, int by) {
  SeriesParams out = params;
  for (auto& a : out.numer) a += static_cast<double>(by);
  for (auto& b : out.denom) b += static_cast<double>(by);
  return out;
}

// ln of the n-independent-free part shared by F and G:
// w_n = -1/2 (ln n! + ln [rho_n]!) for n = 0..size-1.
std::vector<double> log_factorial_weights(const LaplaceProbe& probe) {
  std::vector<double> out(probe.coeffs.size());
  double log_rho_fact = 0.0;
  for (std::size_t n = 0; n < out.size(); ++n) {
    if (n > 0) {
      const double rho = deformation_factor(probe.deformation, static_cast<double>(n));
      if (!(rho > 0.0)) {
        throw DomainError("Laplace probe: rho_" + std::to_string(n) + " <= 0");
      }
      log_rho_fact += std::log(rho);
    }
    out[n] = -0.5 * (log_gamma(static_cast<double>(n) + 1.0) + log_rho_fact);
  }
  return out;
}

}  // namespace

double connection_coefficient(const CSSpec& spec) {
  const auto& def = spec.deformation();
  const SeriesParams base = normalization_params(spec);
  const cplx ratio = pfq(shift_params(base, 1)).value / pfq(base).value;
  const double k2 = 2.0 * def.rep_label();
  const double first = deformation_factor(def, 1.0);  // [chi_1]! or [rho_1]!
  switch (spec.family()) {
    case Family::Su2PCS:
      return (k2 * first / 2.0 * ratio).real();
    case Family::Su11BGCS:
      return (ratio / (2.0 * k2 * first)).real();
    case Family::Su11PCS:
      return (k2 / (2.0 * first) * ratio).real();
  }
  return 0.0;
}

double LoopSpec::period() const { return 2.0 * std::numbers::pi / std::abs(angular_rate); }

cplx LoopSpec::amplitude_at(double t) const {
  return std::polar(radius, angular_rate * t);
}

cplx LoopSpec::velocity_at(double t) const {
  return cplx(0.0, angular_rate) * amplitude_at(t);
}

void LoopSpec::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("loop radius must be positive");
  }
  if (!(angular_rate != 0.0) || !std::isfinite(angular_rate)) {
    throw DomainError("loop angular rate must be nonzero");
  }
  if (samples < 16) throw DomainError("loop needs at least 16 samples");
}

BerryPhase berry_phase_loop(const CSSpec& spec_template, const LoopSpec& loop) {
  loop.validate();
  const double period = loop.period();
  const double dt = period / loop.samples;
  // Periodic trapezoid: the endpoint samples coincide, so each interior
  // node carries full weight.
  cplx acc = 0.0;
  for (int i = 0; i < loop.samples; ++i) {
    const double t = dt * i;
    const cplx a = loop.amplitude_at(t);
    const cplx v = loop.velocity_at(t);
    const double conn = connection_coefficient(spec_template.with_amplitude(a));
    acc += cplx(0.0, 1.0) * conn * (std::conj(a) * v - std::conj(v) * a);
  }
  acc *= dt;
  return {acc.real(), std::abs(acc.imag())};
}

cplx connection_fd_oracle(const CSSpec& spec, cplx velocity, double dt,
                          double eps) {
  if (std::abs(velocity) == 0.0) return 0.0;
  const cplx a = spec.amplitude();
  if (!(dt > 0.0)) {
    dt = std::abs(a) > 0.0 ? 3e-5 * std::abs(a) / std::abs(velocity)
                           : 3e-5 / std::abs(velocity);
  }
  const auto here = coefficients(spec, eps);
  auto overlap = [&](double s) {
    return inner_product(here, coefficients(spec.with_amplitude(a + velocity * (s * dt)), eps));
  };
  // Fourth-order central stencil.
  return (8.0 * (overlap(1.0) - overlap(-1.0)) - (overlap(2.0) - overlap(-2.0))) /
         (12.0 * dt);
}

void LaplaceProbe::validate() const {
  if (deformation.compact()) {
    throw InvalidSpec("Laplace probe needs an su(1,1) deformation");
  }
  if (coeffs.empty()) throw InvalidSpec("Laplace probe needs coefficients");
  double norm = 0.0;
  for (const auto& c : coeffs) norm += std::norm(c);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw InvalidSpec("Laplace probe coefficients must be normalised");
  }
  if (!(Z > 0.0) || !std::isfinite(Z)) throw DomainError("Laplace probe needs Z > 0");
  if (quad_nodes < 1) throw DomainError("Laplace probe needs quadrature nodes");
}

cplx bg_series_F(const LaplaceProbe& probe, double xi) {
  const double k2 = 2.0 * probe.k();
  const auto w = log_factorial_weights(probe);
  const double lg2k = log_gamma(k2);
  cplx acc = 0.0;
  double power = 1.0;
  for (std::size_t n = 0; n < probe.coeffs.size(); ++n) {
    const double lg = 0.5 * (lg2k - log_gamma(static_cast<double>(n) + k2)) + w[n];
    acc += probe.coeffs[n] * std::exp(lg) * power;
    power *= xi;
  }
  return acc;
}

cplx pcs_series_G(const LaplaceProbe& probe) {
  const double k2 = 2.0 * probe.k();
  const auto w = log_factorial_weights(probe);
  const double lg2k = log_gamma(k2);
  const double log_z = std::log(probe.Z);
  cplx acc = 0.0;
  for (std::size_t n = 0; n < probe.coeffs.size(); ++n) {
    const double dn = static_cast<double>(n);
    const double lg = 0.5 * (log_gamma(dn + k2) - lg2k) + w[n] - dn * log_z;
    acc += probe.coeffs[n] * std::exp(lg);
  }
  return acc;
}

LaplaceCheck laplace_check(const LaplaceProbe& probe) {
  probe.validate();
  const double k2 = 2.0 * probe.k();
  const double alpha = k2 - 1.0;
  const double Z = probe.Z;

  // With the substitution u = Z xi the Gauss-Laguerre rule for weight
  // u^(2k-1) e^-u absorbs the Z^{2k} prefactor exactly.
  auto laguerre = [&](int nodes) {
    const auto rule = gauss_laguerre(nodes, alpha);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * bg_series_F(probe, rule.nodes[i] / Z);
    }
    return acc;
  };

  LaplaceCheck out;
  out.lhs = pcs_series_G(probe);
  const double gamma_2k = std::exp(log_gamma(k2));
  cplx integral = laguerre(probe.quad_nodes);  // = Z^{2k} * integral
  const cplx refined = laguerre(probe.quad_nodes + 16);
  const double scale = std::max(1.0, std::abs(refined));
  if (std::abs(refined - integral) > 1e-12 * scale) {
    boost::math::quadrature::exp_sinh<double> integrator;
    auto part = [&](bool imag) {
      auto f = [&](double xi) {
        if (xi == 0.0) return alpha == 0.0 ? (imag ? bg_series_F(probe, 0.0).imag()
                                                   : bg_series_F(probe, 0.0).real())
                                           : 0.0;
        const double w = std::exp(alpha * std::log(xi) - Z * xi);
        if (w == 0.0) return 0.0;
        const cplx v = w * bg_series_F(probe, xi);
        return imag ? v.imag() : v.real();
      };
      double err = 0.0;
      double l1 = 0.0;
      const double val = integrator.integrate(f, 1e-13, &err, &l1);
      if (!(err <= 1e-10 * std::max(1.0, std::abs(val)))) {
        throw QuadratureFailure("laplace_check: adaptive integration did not converge");
      }
      return val;
    };
    integral = std::pow(Z, k2) * cplx(part(false), part(true));
    out.used_fallback = true;
  }
  out.rhs = integral / gamma_2k;
  out.rhs_sqrt_gamma_prefactor = integral / std::sqrt(gamma_2k);
  out.gap = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace nlcs
