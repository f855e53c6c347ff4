#include "nlcs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "nlcs/errors.hpp"
#include "nlcs/geometry.hpp"
#include "nlcs/hypergeom.hpp"
#include "nlcs/quadrature.hpp"
#include "nlcs/statistics.hpp"

namespace nlcs::verify {

namespace {

const std::vector<double> kLabels{0.5, 1.0, 3.0, 8.0};

std::string describe(const DeformationSpec& spec) {
  std::ostringstream os;
  os << (spec.compact() ? "su2" : "su11") << " p=" << spec.p() << " coeffs=(";
  for (std::size_t i = 0; i < spec.coeffs().size(); ++i) {
    os << (i ? "," : "") << spec.coeffs()[i];
  }
  os << ") label=" << spec.rep_label();
  return os.str();
}

std::string describe(const CSSpec& spec) {
  std::ostringstream os;
  os << family_name(spec.family()) << " " << describe(spec.deformation())
     << " xbar=" << spec.series_variable();
  return os.str();
}

// Tracks the worst value of a "smaller is better" quantity.
class Tracker {
 public:
  Tracker(std::string name, double tol) : result_{std::move(name), true, 0.0, tol, ""} {}

  void observe(double err, const std::string& where) {
    if (std::isnan(err)) {
      fail(where + ": NaN");
    } else if (err > result_.max_error) {
      result_.max_error = err;
      worst_ = where;
    }
  }

  void fail(const std::string& why) {
    failed_ = true;
    if (first_failure_.empty()) first_failure_ = why;
  }

  PropertyResult finish() {
    PropertyResult r = result_;
    r.passed = !failed_ && r.max_error < r.tolerance;
    if (!first_failure_.empty()) {
      r.detail = first_failure_;
    } else {
      r.detail = worst_.empty() ? "" : "worst at " + worst_;
    }
    return r;
  }

 private:
  PropertyResult result_;
  std::string worst_;
  std::string first_failure_;
  bool failed_ = false;
};

template <class F>
void guarded(Tracker& t, const std::string& where, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    t.fail(where + ": " + e.what());
  }
}

double rel(double a, double b, double scale_floor = 1.0) {
  return std::abs(a - b) / std::max({scale_floor, std::abs(a), std::abs(b)});
}

long basis_limit(const DeformationSpec& spec, long n_max) {
  return spec.compact() ? std::min(spec.two_j(), n_max) : n_max;
}

}  // namespace

std::vector<DeformationSpec> algebra_grid() {
  const std::vector<std::vector<double>> coeff_sets{{2.0}, {1.0, 2.0}, {1.0, 1.0, 2.0}};
  std::vector<DeformationSpec> out;
  for (auto kind : {AlgebraKind::Su2Like, AlgebraKind::Su11Like}) {
    for (const auto& c : coeff_sets) {
      for (double l : kLabels) out.emplace_back(kind, c, l);
    }
  }
  return out;
}

std::vector<CSSpec> random_states(Family family, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(family) * 0x9e3779b97f4a7c15ULL));
  std::uniform_int_distribution<int> pick_p(1, 2);
  std::uniform_int_distribution<std::size_t> pick_label(0, kLabels.size() - 1);
  std::uniform_real_distribution<double> coeff(0.5, 3.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const AlgebraKind kind =
      family == Family::Su2PCS ? AlgebraKind::Su2Like : AlgebraKind::Su11Like;
  std::vector<CSSpec> out;
  for (int i = 0; i < count; ++i) {
    const int p = pick_p(rng);
    std::vector<double> c{1.0};
    if (p == 2) c.push_back(coeff(rng));
    DeformationSpec def(kind, c, kLabels[pick_label(rng)]);
    const double hi = family == Family::Su11PCS && p == 1 ? 0.9 : 5.0;
    const double xbar = std::uniform_real_distribution<double>(0.05, hi)(rng);
    const auto base = CSSpec::from_series_variable(family, def, xbar);
    out.push_back(base.with_amplitude(std::polar(std::abs(base.amplitude()), phase(rng))));
  }
  return out;
}

PropertyResult check_commutator(const std::vector<DeformationSpec>& specs, long n_max) {
  Tracker t("commutator identity X+X- - X-X+ = P(diagonal)", 1e-10);
  for (const auto& spec : specs) {
    guarded(t, describe(spec), [&] {
      for (long n = 0; n <= basis_limit(spec, n_max); ++n) {
        const double m = diagonal_eigenvalue(spec, n);
        const double lo = ladder_sq(spec, n);
        const double hi = ladder_sq(spec, n + 1);
        const double p = poly_P(spec, m);
        const double scale = std::max({1.0, std::abs(lo), std::abs(hi), std::abs(p)});
        t.observe(std::abs(lo - hi - p) / scale, describe(spec) + " n=" + std::to_string(n));
        t.observe(rel(p, poly_P_expanded(spec, m)), describe(spec) + " expanded n=" + std::to_string(n));
      }
    });
  }
  return t.finish();
}

PropertyResult check_casimir(const std::vector<DeformationSpec>& specs, long n_max) {
  Tracker t("Casimir constant on every basis vector", 1e-10);
  for (const auto& spec : specs) {
    guarded(t, describe(spec), [&] {
      const double c = casimir_eigenvalue(spec);
      for (long n = 0; n <= basis_limit(spec, n_max); ++n) {
        const double m = diagonal_eigenvalue(spec, n);
        const double scale =
            std::max({1.0, std::abs(structure_g(spec, m)), std::abs(structure_g(spec, m - 1.0)),
                      ladder_sq(spec, n), ladder_sq(spec, n + 1)});
        t.observe(std::abs(casimir_on_basis(spec, n) - c) / scale,
                  describe(spec) + " n=" + std::to_string(n));
      }
    });
  }
  return t.finish();
}

PropertyResult check_root_factorization(const std::vector<DeformationSpec>& specs, long n_max) {
  Tracker t("root factorization reproduces the deformation factor", 1e-10);
  for (const auto& spec : specs) {
    guarded(t, describe(spec), [&] {
      const RootSet roots = deformation_roots(spec);
      if (roots.roots.size() != static_cast<std::size_t>(2 * spec.p() - 2)) {
        t.fail(describe(spec) + ": wrong root count");
      }
      for (long n = 0; n <= n_max; ++n) {
        const double dn = static_cast<double>(n);
        double scale = roots.leading;
        for (const auto& r : roots.roots) scale *= dn + std::abs(r);
        const cplx fac = roots.evaluate(dn);
        const double direct = deformation_factor(spec, dn);
        const double err = std::abs(fac - direct) / std::max({1.0, scale, std::abs(direct)});
        t.observe(err, describe(spec) + " n=" + std::to_string(n));
      }
    });
  }
  return t.finish();
}

PropertyResult check_conjugate_reality(const std::vector<DeformationSpec>& specs, long n_max) {
  Tracker t("prod_i (1-root_i)_n is real", 1e-10);
  for (const auto& spec : specs) {
    guarded(t, describe(spec), [&] {
      const RootSet roots = deformation_roots(spec);
      for (long n = 0; n <= n_max; ++n) {
        cplx prod = 1.0;
        for (const auto& r : roots.roots) prod *= pochhammer(1.0 - r, n);
        const double mag = std::abs(prod);
        t.observe(mag > 0.0 ? std::abs(prod.imag()) / mag : 0.0,
                  describe(spec) + " n=" + std::to_string(n));
      }
    });
  }
  return t.finish();
}

PropertyResult check_unitarity(const std::vector<DeformationSpec>& specs, long n_cap) {
  Tracker t("unitarity (non-negative squared ladder elements)", 1.0);
  for (const auto& spec : specs) {
    try {
      validate_unitarity(spec, n_cap);
    } catch (const UnitarityViolation& e) {
      t.fail(describe(spec) + ": " + e.what());
    }
  }
  return t.finish();
}

PropertyResult check_higgs_roots(const std::vector<double>& labels) {
  Tracker t("cubic roots (2j+1)(1+-i)/2 and -(2k-1)(1+-i)/2", 1e-12);
  for (double l : labels) {
    guarded(t, "label " + std::to_string(l), [&] {
      const auto su2 = deformation_roots(DeformationSpec::higgs_su2(l, 2.0));
      const cplx ap = 0.5 * (2.0 * l + 1.0) * cplx(1.0, 1.0);
      const cplx am = 0.5 * (2.0 * l + 1.0) * cplx(1.0, -1.0);
      t.observe(std::max(std::abs(su2.roots.at(0) - ap), std::abs(su2.roots.at(1) - am)),
                "su2 j=" + std::to_string(l));
      const auto su11 = deformation_roots(DeformationSpec::higgs_su11(l, 2.0));
      const cplx bp = -0.5 * (2.0 * l - 1.0) * cplx(1.0, 1.0);
      const cplx bm = -0.5 * (2.0 * l - 1.0) * cplx(1.0, -1.0);
      t.observe(std::max(std::abs(su11.roots.at(0) - bp), std::abs(su11.roots.at(1) - bm)),
                "su11 k=" + std::to_string(l));
    });
  }
  return t.finish();
}

namespace {

template <class F>
PropertyResult over_random_states(std::string name, double tol, int per_family,
                                  std::uint64_t seed, F&& body) {
  Tracker t(std::move(name), tol);
  for (Family f : {Family::Su2PCS, Family::Su11BGCS, Family::Su11PCS}) {
    for (const auto& spec : random_states(f, per_family, seed)) {
      guarded(t, describe(spec), [&] { body(t, spec); });
    }
  }
  return t.finish();
}

}  // namespace

PropertyResult check_normalization_duality(int per_family, std::uint64_t seed) {
  return over_random_states(
      "series normalisation equals direct coefficient sum", 1e-9, per_family, seed,
      [](Tracker& t, const CSSpec& spec) {
        const double series = normalization(spec);
        const double direct = std::exp(coefficients(spec).log_direct_norm);
        t.observe(std::abs(series - direct) / std::abs(direct), describe(spec));
      });
}

PropertyResult check_statistics_oracle(int per_family, std::uint64_t seed) {
  return over_random_states(
      "mean, I, Q: series route equals direct summation", 1e-8, per_family, seed,
      [](Tracker& t, const CSSpec& spec) {
        const auto m = moments_oracle(coefficients(spec));
        const std::string where = describe(spec);
        t.observe(std::abs(mean_photon(spec) - m.mean), where + " mean");
        t.observe(std::abs(intensity_correlation(spec) - m.fact2 / (m.mean * m.mean)),
                  where + " I");
        t.observe(std::abs(mandel_q(spec) - (m.var - m.mean) / m.mean), where + " Q");
        const auto dist = photon_distribution(spec, 40);
        const auto closed = photon_distribution_closed(spec, 40);
        for (std::size_t n = 0; n < dist.size(); ++n) {
          t.observe(std::abs(dist[n] - closed[n]), where + " P(" + std::to_string(n) + ")");
        }
      });
}

PropertyResult check_mandel_identity(int per_family, std::uint64_t seed) {
  return over_random_states("Q = mean (I - 1)", 1e-10, per_family, seed,
                            [](Tracker& t, const CSSpec& spec) {
                              const double q = mandel_q(spec);
                              const double n = mean_photon(spec);
                              const double i = intensity_correlation(spec);
                              t.observe(std::abs(q - n * (i - 1.0)), describe(spec));
                            });
}

PropertyResult check_family_forms(int per_family, std::uint64_t seed) {
  return over_random_states(
      "per-family shifted-series forms equal the generic derivative forms", 1e-10,
      per_family, seed, [](Tracker& t, const CSSpec& spec) {
        const std::string where = describe(spec);
        t.observe(rel(mean_photon(spec), family_form::mean_photon(spec)), where + " mean");
        t.observe(rel(intensity_correlation(spec), family_form::intensity_correlation(spec)),
                  where + " I");
        t.observe(rel(mandel_q(spec), family_form::mandel_q(spec)), where + " Q");
        t.observe(rel(metric_factor(spec), family_form::metric_factor(spec)), where + " omega");
      });
}

PropertyResult check_linear_su2_mandel() {
  Tracker t("linear su(2): Q = -x/(1+x) for every j", 1e-10);
  for (int i = 1; i <= 20; ++i) {
    const double x = 0.5 * i;
    for (double j : kLabels) {
      guarded(t, "x=" + std::to_string(x), [&] {
        const auto spec =
            CSSpec::from_series_variable(Family::Su2PCS, DeformationSpec::linear_su2(j), x);
        t.observe(std::abs(mandel_q(spec) + x / (1.0 + x)),
                  "j=" + std::to_string(j) + " x=" + std::to_string(x));
      });
    }
  }
  return t.finish();
}

PropertyResult check_sign_structure() {
  // max_error here is the largest value of the quantity required to be
  // negative: Q for the sub-Poissonian families, -Q and 1-I for the linear
  // su(1,1) Perelomov state. Passing needs it strictly below zero.
  Tracker t("sub/super-Poissonian sign structure", 0.0);
  struct Case {
    Family family;
    bool nonlinear;
  };
  const Case sub[] = {{Family::Su2PCS, false},
                      {Family::Su2PCS, true},
                      {Family::Su11BGCS, true},
                      {Family::Su11PCS, true}};
  double worst = -std::numeric_limits<double>::infinity();
  std::string where_worst;
  auto note = [&](double v, const std::string& where) {
    if (v > worst) {
      worst = v;
      where_worst = where;
    }
  };
  for (const auto& c : sub) {
    for (double l : kLabels) {
      const AlgebraKind kind =
          c.family == Family::Su2PCS ? AlgebraKind::Su2Like : AlgebraKind::Su11Like;
      const DeformationSpec def(kind, c.nonlinear ? std::vector<double>{1.0, 2.0}
                                                  : std::vector<double>{1.0},
                                l);
      for (int i = 1; i <= 20; ++i) {
        const double x = 0.5 * i;
        const std::string where = std::string(c.nonlinear ? "cubic " : "linear ") +
                                  std::string(family_name(c.family)) + " label=" +
                                  std::to_string(l) + " xbar=" + std::to_string(x);
        guarded(t, where, [&] {
          note(mandel_q(CSSpec::from_series_variable(c.family, def, x)), where + " Q");
        });
      }
    }
  }
  for (double l : kLabels) {
    for (int i = 1; i <= 9; ++i) {
      const double z = 0.1 * i;
      const std::string where = "linear su11-pcs label=" + std::to_string(l) +
                                " z=" + std::to_string(z);
      guarded(t, where, [&] {
        const auto spec = CSSpec::from_series_variable(Family::Su11PCS,
                                                       DeformationSpec::linear_su11(l), z);
        note(-mandel_q(spec), where + " -Q");
        note(1.0 - intensity_correlation(spec), where + " 1-I");
      });
    }
  }
  PropertyResult r = t.finish();
  r.max_error = worst;
  r.passed = r.detail.empty() && worst < 0.0;
  if (r.detail.empty()) r.detail = "closest to zero at " + where_worst;
  return r;
}

PropertyResult check_metric_closed_forms() {
  Tracker t("linear metric: 2j/(1+x)^2 and 2k/(1-z)^2", 1e-10);
  for (double l : kLabels) {
    for (int i = 0; i <= 20; ++i) {
      const double x = 0.5 * i;
      guarded(t, "su2", [&] {
        const auto spec =
            CSSpec::from_series_variable(Family::Su2PCS, DeformationSpec::linear_su2(l), x);
        t.observe(std::abs(metric_factor(spec) - 2.0 * l / ((1.0 + x) * (1.0 + x))),
                  "su2 j=" + std::to_string(l) + " x=" + std::to_string(x));
      });
    }
    for (int i = 0; i <= 9; ++i) {
      const double z = 0.1 * i;
      guarded(t, "su11-pcs", [&] {
        const auto spec =
            CSSpec::from_series_variable(Family::Su11PCS, DeformationSpec::linear_su11(l), z);
        t.observe(rel(metric_factor(spec), 2.0 * l / ((1.0 - z) * (1.0 - z))),
                  "su11-pcs k=" + std::to_string(l) + " z=" + std::to_string(z));
      });
    }
  }
  return t.finish();
}

PropertyResult check_metric_asymptotics(double xbar, double tol) {
  Tracker t("metric flattens: |omega(" + std::to_string(static_cast<long>(xbar)) +
                ")| for su(2) PCS and su(1,1) BGCS",
            tol);
  for (Family f : {Family::Su2PCS, Family::Su11BGCS}) {
    for (bool nonlinear : {false, true}) {
      for (double l : kLabels) {
        const AlgebraKind kind =
            f == Family::Su2PCS ? AlgebraKind::Su2Like : AlgebraKind::Su11Like;
        const DeformationSpec def(kind, nonlinear ? std::vector<double>{1.0, 2.0}
                                                  : std::vector<double>{1.0},
                                  l);
        const std::string where = std::string(nonlinear ? "cubic " : "linear ") +
                                  std::string(family_name(f)) + " label=" + std::to_string(l);
        guarded(t, where, [&] {
          t.observe(std::abs(metric_factor(CSSpec::from_series_variable(f, def, xbar))), where);
        });
      }
    }
  }
  return t.finish();
}

PropertyResult check_bg_eigen() {
  Tracker t("Barut-Girardello eigenproperty ||K- v - xi v|| at eps=1e-12", 1e-9);
  for (double k : {0.5, 1.0, 3.0}) {
    for (bool nonlinear : {false, true}) {
      const auto def = nonlinear ? DeformationSpec::higgs_su11(k) : DeformationSpec::linear_su11(k);
      for (double mag : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        for (double ph : {0.0, 1.0, std::numbers::pi}) {
          const CSSpec spec(Family::Su11BGCS, def, std::polar(mag, ph));
          const std::string where = describe(spec) + " phase=" + std::to_string(ph);
          guarded(t, where, [&] { t.observe(bg_eigen_residual(spec, 1e-12), where); });
        }
      }
    }
  }
  return t.finish();
}

PropertyResult check_ladder_matrix_identity(const std::vector<DeformationSpec>& specs) {
  Tracker t("(X+X- - X-X+) e_n = P(diagonal) e_n on truncated vectors", 1e-10);
  for (const auto& spec : specs) {
    guarded(t, describe(spec), [&] {
      const long size = spec.compact() ? spec.two_j() + 1 : 30;
      for (long n = 0; n < size; ++n) {
        CoefficientVector e;
        e.coeffs.assign(static_cast<std::size_t>(size), cplx(0.0));
        e.coeffs[static_cast<std::size_t>(n)] = 1.0;
        e.truncation = size - 1;
        const auto rl = apply_raising(spec, apply_lowering(spec, e));
        const auto lr = apply_lowering(spec, apply_raising(spec, e));
        const double p = poly_P(spec, diagonal_eigenvalue(spec, n));
        double err = 0.0;
        const std::size_t len = std::max(rl.coeffs.size(), lr.coeffs.size());
        for (std::size_t i = 0; i < len; ++i) {
          const cplx a = i < rl.coeffs.size() ? rl.coeffs[i] : cplx(0.0);
          const cplx b = i < lr.coeffs.size() ? lr.coeffs[i] : cplx(0.0);
          const double expect = i == static_cast<std::size_t>(n) ? p : 0.0;
          err = std::max(err, std::abs(a - b - expect));
        }
        const double scale = std::max({1.0, std::abs(p), ladder_sq(spec, n), ladder_sq(spec, n + 1)});
        t.observe(err / scale, describe(spec) + " n=" + std::to_string(n));
      }
    });
  }
  return t.finish();
}

PropertyResult check_berry_closed_form() {
  Tracker t("linear su(2) loop phase = -4 pi j r^2/(1+r^2)", 1e-8);
  Tracker imag("loop phase is real", 1e-10);
  for (double j : {0.5, 1.0, 3.0}) {
    for (double r : {0.5, 1.0, 2.0}) {
      const std::string where = "j=" + std::to_string(j) + " r=" + std::to_string(r);
      guarded(t, where, [&] {
        const CSSpec tmpl(Family::Su2PCS, DeformationSpec::linear_su2(j), 0.0);
        LoopSpec loop;
        loop.radius = r;
        const auto phase = berry_phase_loop(tmpl, loop);
        t.observe(std::abs(phase.gamma + 4.0 * std::numbers::pi * j * r * r / (1.0 + r * r)),
                  where);
        if (phase.imag_residual >= 1e-10) t.fail(where + ": imaginary residue");
      });
    }
  }
  return t.finish();
}

PropertyResult check_connection_oracle(int per_family, std::uint64_t seed) {
  // The tolerance is max(1e-6, 100 tail_bound); tail bounds here are <= 1e-15,
  // so 1e-6 applies throughout.
  std::mt19937_64 rng(seed + 17);
  std::uniform_real_distribution<double> comp(-1.0, 1.0);
  return over_random_states(
      "finite-difference <psi|d/dt psi> equals A (conj(a) v - conj(v) a)", 1e-6, per_family,
      seed, [&](Tracker& t, const CSSpec& spec) {
        const cplx v(comp(rng), comp(rng));
        const cplx a = spec.amplitude();
        const cplx fd = connection_fd_oracle(spec, v);
        const cplx closed = connection_coefficient(spec) * (std::conj(a) * v - std::conj(v) * a);
        t.observe(std::abs(fd - closed), describe(spec));
      });
}

PropertyResult check_connection_mean(int per_family, std::uint64_t seed) {
  return over_random_states("connection A = mean / (2 |a|^2)", 1e-10, per_family, seed,
                            [](Tracker& t, const CSSpec& spec) {
                              const double a2 = std::norm(spec.amplitude());
                              t.observe(rel(connection_coefficient(spec),
                                            mean_photon(spec) / (2.0 * a2)),
                                        describe(spec));
                            });
}

PropertyResult check_laplace(int per_config, std::uint64_t seed) {
  Tracker t("Laplace bridge |G(1/Z) - Z^2k/Gamma(2k) int xi^(2k-1) F e^(-Z xi)|", 1e-8);
  std::mt19937_64 rng(seed + 101);
  std::uniform_int_distribution<int> len(1, 6);
  std::normal_distribution<double> gauss;
  for (double k : {0.5, 1.0, 3.0}) {
    for (double Z : {1.0, 2.0}) {
      for (bool nonlinear : {false, true}) {
        for (int i = 0; i < per_config; ++i) {
          LaplaceProbe probe{{}, nonlinear ? DeformationSpec::higgs_su11(k)
                                           : DeformationSpec::linear_su11(k),
                             Z, 64};
          const int n = len(rng);
          double norm = 0.0;
          for (int m = 0; m < n; ++m) {
            probe.coeffs.emplace_back(gauss(rng), gauss(rng));
            norm += std::norm(probe.coeffs.back());
          }
          for (auto& c : probe.coeffs) c /= std::sqrt(norm);
          const std::string where = std::string(nonlinear ? "cubic" : "linear") +
                                    " k=" + std::to_string(k) + " Z=" + std::to_string(Z) +
                                    " len=" + std::to_string(n);
          guarded(t, where, [&] { t.observe(laplace_check(probe).gap, where); });
        }
      }
    }
  }
  return t.finish();
}

PropertyResult check_laplace_ground_probe() {
  Tracker t("ground probe c=(1): G(1/Z) = rhs = 1", 1e-12);
  for (double k : {0.5, 1.0, 3.0}) {
    for (double Z : {1.0, 2.0}) {
      for (bool nonlinear : {false, true}) {
        const std::string where = "k=" + std::to_string(k) + " Z=" + std::to_string(Z);
        guarded(t, where, [&] {
          LaplaceProbe probe{{cplx(1.0)},
                             nonlinear ? DeformationSpec::higgs_su11(k)
                                       : DeformationSpec::linear_su11(k),
                             Z, 64};
          const auto res = laplace_check(probe);
          t.observe(std::max(std::abs(res.lhs - 1.0), std::abs(res.rhs - 1.0)), where);
        });
      }
    }
  }
  return t.finish();
}

PropertyResult check_gamma_quadrature() {
  Tracker t("Gauss-Laguerre moments reproduce Gamma(n+2k), n <= 6", 1e-10);
  for (double k : {0.5, 1.0, 3.0}) {
    const auto rule = gauss_laguerre(64, 2.0 * k - 1.0);
    for (int n = 0; n <= 6; ++n) {
      const double exact = std::exp(log_gamma(n + 2.0 * k));
      t.observe(std::abs(laguerre_moment(rule, n) - exact) / exact,
                "k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  return t.finish();
}

std::vector<PropertyResult> run_suite(Suite suite,
                                      const std::vector<DeformationSpec>& extra_specs) {
  constexpr std::uint64_t kSeed = 20240611;
  std::vector<PropertyResult> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Algebra || !extra_specs.empty()) {
    auto specs = algebra_grid();
    out.push_back(check_unitarity(specs));
    if (!extra_specs.empty()) {
      auto user = check_unitarity(extra_specs);
      user.name = "unitarity of the requested deformation";
      out.push_back(user);
      if (user.passed) specs.insert(specs.end(), extra_specs.begin(), extra_specs.end());
    }
    if (all || suite == Suite::Algebra) {
      out.push_back(check_commutator(specs));
      out.push_back(check_casimir(specs));
      out.push_back(check_root_factorization(specs));
      out.push_back(check_conjugate_reality(specs));
      out.push_back(check_higgs_roots(kLabels));
      out.push_back(check_ladder_matrix_identity(specs));
    }
  }
  if (all || suite == Suite::Stats) {
    out.push_back(check_normalization_duality(30, kSeed));
    out.push_back(check_statistics_oracle(30, kSeed));
    out.push_back(check_mandel_identity(30, kSeed));
    out.push_back(check_family_forms(30, kSeed));
    out.push_back(check_linear_su2_mandel());
    out.push_back(check_sign_structure());
    out.push_back(check_metric_closed_forms());
    out.push_back(check_bg_eigen());
  }
  if (all || suite == Suite::Laplace) {
    out.push_back(check_laplace(5, kSeed));
    out.push_back(check_laplace_ground_probe());
    out.push_back(check_gamma_quadrature());
  }
  if (all || suite == Suite::Berry) {
    out.push_back(check_berry_closed_form());
    out.push_back(check_connection_oracle(10, kSeed));
    out.push_back(check_connection_mean(10, kSeed));
  }
  return out;
}

}  // namespace nlcs::verify
