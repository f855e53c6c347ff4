#include "nlcs/statistics.hpp"

#include <cmath>
#include <numeric>

#include "nlcs/errors.hpp"

namespace nlcs {

namespace {

SeriesParams shift_params(const SeriesParams& params, int by) {
  SeriesParams out = params;
  for (auto& a : out.numer) a += static_cast<double>(by);
  for (auto& b : out.denom) b += static_cast<double>(by);
  return out;
}

// Everything the tabulated per-family expressions need: the three shifted
// series values and the root products prod(1 - r_i), prod(2 - r_i).
struct ShiftedSeries {
  cplx f0, f1, f2;
  cplx p1 = 1.0, p2 = 1.0;
  double label = 0.0;
  double xbar = 0.0;
};

ShiftedSeries shifted_series(const CSSpec& spec) {
  const SeriesParams base = normalization_params(spec);
  ShiftedSeries s;
  s.f0 = pfq(base).value;
  s.f1 = pfq(shift_params(base, 1)).value;
  // For j = 1/2 the twice-shifted su(2) series no longer terminates, but
  // every expression multiplies it by (1 - 2j) = 0.
  const bool f2_dead =
      spec.family() == Family::Su2PCS && spec.deformation().two_j() < 2;
  s.f2 = f2_dead ? cplx(0.0) : pfq(shift_params(base, 2)).value;
  for (const auto& r : deformation_roots(spec.deformation()).roots) {
    s.p1 *= 1.0 - r;
    s.p2 *= 2.0 - r;
  }
  s.label = spec.deformation().rep_label();
  s.xbar = spec.series_variable();
  return s;
}

}  // namespace

NormalizationDerivatives normalization_derivatives(const CSSpec& spec) {
  const SeriesParams params = normalization_params(spec);
  const double sign = argument_sign(spec.family());
  NormalizationDerivatives d;
  d.value = pfq(params).value.real();
  d.first = sign * pfq_shifted(params, 1).value.real();
  d.second = pfq_shifted(params, 2).value.real();
  return d;
}

std::vector<double> photon_distribution(const CSSpec& spec, long n_max,
                                        double eps) {
  if (n_max < 0) throw DomainError("photon_distribution: n_max < 0");
  const auto v = coefficients(spec, eps);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (std::size_t n = 0; n < out.size() && n < v.coeffs.size(); ++n) {
    out[n] = std::norm(v.coeffs[n]);
  }
  return out;
}

std::vector<double> photon_distribution_closed(const CSSpec& spec, long n_max) {
  if (n_max < 0) throw DomainError("photon_distribution_closed: n_max < 0");
  const SeriesParams params = normalization_params(spec);
  const double norm = pfq(params).value.real();
  const double xbar = spec.series_variable();
  const double sign = argument_sign(spec.family());
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (long n = 0; n <= n_max; ++n) {
    cplx term = std::pow(sign * xbar, static_cast<double>(n)) /
                std::exp(log_gamma(static_cast<double>(n) + 1.0));
    for (const auto& a : params.numer) term *= pochhammer(a, n);
    for (const auto& b : params.denom) term /= pochhammer(b, n);
    out[static_cast<std::size_t>(n)] = term.real() / norm;
  }
  return out;
}

double mean_photon(const CSSpec& spec) {
  const double x = spec.series_variable();
  if (x == 0.0) return 0.0;
  const auto d = normalization_derivatives(spec);
  return x * d.first / d.value;
}

double intensity_correlation(const CSSpec& spec) {
  const double x = spec.series_variable();
  if (x == 0.0) {
    throw DegenerateInput("intensity correlation is 0/0 at zero amplitude");
  }
  const auto d = normalization_derivatives(spec);
  return d.second * d.value / (d.first * d.first);
}

double mandel_q(const CSSpec& spec) {
  const double x = spec.series_variable();
  if (x == 0.0) return 0.0;
  const auto d = normalization_derivatives(spec);
  return x * (d.second / d.first - d.first / d.value);
}

double metric_factor(const CSSpec& spec) {
  const double x = spec.series_variable();
  const auto d = normalization_derivatives(spec);
  const double ratio = d.first / d.value;
  return ratio + x * (d.second / d.value - ratio * ratio);
}

namespace family_form {

double mean_photon(const CSSpec& spec) {
  const auto s = shifted_series(spec);
  const double k2 = 2.0 * s.label;
  switch (spec.family()) {
    case Family::Su2PCS:
      return (-s.xbar * (-k2) * s.f1 / s.f0 * s.p1).real();
    case Family::Su11BGCS:
      return (s.xbar / k2 * s.f1 / s.f0 / s.p1).real();
    case Family::Su11PCS:
      return (s.xbar * s.f1 / s.f0 * k2 / s.p1).real();
  }
  return 0.0;
}

double intensity_correlation(const CSSpec& spec) {
  const auto s = shifted_series(spec);
  if (s.xbar == 0.0) {
    throw DegenerateInput("intensity correlation is 0/0 at zero amplitude");
  }
  const double k2 = 2.0 * s.label;
  const cplx shape = s.f0 * s.f2 / (s.f1 * s.f1);
  switch (spec.family()) {
    case Family::Su2PCS:
      return ((-k2 + 1.0) / (-k2) * (s.p2 / s.p1) * shape).real();
    case Family::Su11BGCS:
      return (k2 / (k2 + 1.0) * (s.p1 / s.p2) * shape).real();
    case Family::Su11PCS:
      return ((k2 + 1.0) / k2 * (s.p1 / s.p2) * shape).real();
  }
  return 0.0;
}

double mandel_q(const CSSpec& spec) {
  const auto s = shifted_series(spec);
  const double k2 = 2.0 * s.label;
  switch (spec.family()) {
    case Family::Su2PCS:
      return (-s.xbar * ((-k2 + 1.0) * s.f2 / s.f1 * s.p2 -
                         (-k2) * s.f1 / s.f0 * s.p1))
          .real();
    case Family::Su11BGCS:
      return (s.xbar * (1.0 / (k2 + 1.0) * s.f2 / s.f1 / s.p2 -
                        1.0 / k2 * s.f1 / s.f0 / s.p1))
          .real();
    case Family::Su11PCS:
      return (s.xbar * (s.f2 / s.f1 * (k2 + 1.0) / s.p2 -
                        s.f1 / s.f0 * k2 / s.p1))
          .real();
  }
  return 0.0;
}

double metric_factor(const CSSpec& spec) {
  const auto s = shifted_series(spec);
  const double k2 = 2.0 * s.label;
  const double x = s.xbar;
  const cplx r1 = s.f1 / s.f0;
  const cplx r2 = s.f2 / s.f0;
  const cplx p12 = s.p1 * s.p2;  // prod (1 - r_i)_2
  switch (spec.family()) {
    case Family::Su2PCS: {
      const double poch2 = (-k2) * (-k2 + 1.0);
      return (-(-k2) * r1 * s.p1 + x * poch2 * r2 * p12 -
              x * k2 * k2 * r1 * r1 * s.p1 * s.p1)
          .real();
    }
    case Family::Su11BGCS: {
      const double poch2 = k2 * (k2 + 1.0);
      return (1.0 / k2 * r1 / s.p1 + x / poch2 * r2 / p12 -
              x / (k2 * k2) * r1 * r1 / (s.p1 * s.p1))
          .real();
    }
    case Family::Su11PCS: {
      const double poch2 = k2 * (k2 + 1.0);
      return (r1 * k2 / s.p1 + x * r2 * poch2 / p12 -
              x * r1 * r1 * k2 * k2 / (s.p1 * s.p1))
          .real();
    }
  }
  return 0.0;
}

}  // namespace family_form

Moments moments_oracle(const CoefficientVector& v) {
  Moments m;
  double second = 0.0;
  for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
    const double p = std::norm(v.coeffs[n]);
    const double dn = static_cast<double>(n);
    m.mean += dn * p;
    m.fact2 += dn * (dn - 1.0) * p;
    second += dn * dn * p;
  }
  m.var = second - m.mean * m.mean;
  return m;
}

StatRecord stat_record(const CSSpec& spec, long n_max) {
  StatRecord r;
  r.xbar = spec.series_variable();
  r.photon_dist = photon_distribution(spec, n_max);
  r.mean_n = mean_photon(spec);
  if (r.xbar > 0.0) r.intensity_corr = intensity_correlation(spec);
  r.mandel_q = mandel_q(spec);
  r.metric = metric_factor(spec);
  return r;
}

void GridSpec::validate() const {
  if (!(xbar_min >= 0.0) || !std::isfinite(xbar_max) || xbar_max < xbar_min) {
    throw DomainError("grid needs 0 <= xbar_min <= xbar_max");
  }
  if (points < 1) throw DomainError("grid needs at least one point");
  if (points == 1 && xbar_max != xbar_min) {
    throw DomainError("a one-point grid needs xbar_min == xbar_max");
  }
  if (labels.empty()) throw DomainError("grid needs at least one label");
}

std::vector<double> GridSpec::xbars() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(points));
  if (points == 1) {
    out[0] = xbar_min;
    return out;
  }
  const double step = (xbar_max - xbar_min) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = xbar_min + step * i;
  out.back() = xbar_max;
  return out;
}

}  // namespace nlcs
