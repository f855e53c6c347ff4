#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "nlcs/coherent_state.hpp"
#include "nlcs/errors.hpp"
#include "nlcs/hypergeom.hpp"
#include "nlcs/verify.hpp"

using namespace nlcs;
using doctest::Approx;

namespace {

CoefficientVector vec(std::vector<cplx> c) {
  CoefficientVector v;
  v.truncation = static_cast<long>(c.size()) - 1;
  v.coeffs = std::move(c);
  return v;
}

}  // namespace

TEST_CASE("spec checks") {
  CHECK_THROWS_AS(CSSpec(Family::Su2PCS, DeformationSpec::linear_su11(1.0), 0.5), InvalidSpec);
  CHECK_THROWS_AS(CSSpec(Family::Su11BGCS, DeformationSpec::linear_su2(1.0), 0.5), InvalidSpec);
  CHECK_THROWS_AS(CSSpec(Family::Su11PCS, DeformationSpec::linear_su11(1.0), 1.0), DomainError);
  CHECK_THROWS_AS(CSSpec(Family::Su11BGCS, DeformationSpec::linear_su11(1.0), cplx(NAN, 0.0)),
                  InvalidSpec);
  CHECK_THROWS_AS(
      CSSpec(Family::Su2PCS,
             DeformationSpec::unchecked_sign(AlgebraKind::Su2Like, {1.0, -1.0}, 1.0), 0.5),
      InvalidSpec);
  // Nonlinear Perelomov states exist for any z.
  CHECK_NOTHROW(CSSpec(Family::Su11PCS, DeformationSpec::higgs_su11(8.0), 5.0));
  const auto s = CSSpec::from_series_variable(Family::Su2PCS, DeformationSpec::higgs_su2(1.0), 3.0);
  CHECK(s.series_variable() == Approx(3.0));
  CHECK(std::norm(s.amplitude()) == Approx(1.5));
  CHECK(CSSpec::from_series_variable(Family::Su11BGCS, DeformationSpec::higgs_su11(1.0), 3.0)
            .amplitude()
            .real() == Approx(std::sqrt(6.0)));
}

TEST_CASE("normalization examples") {
  CHECK(normalization(CSSpec::from_series_variable(Family::Su2PCS,
                                                   DeformationSpec::higgs_su2(0.5), 1.0)) ==
        Approx(2.0));
  CHECK(normalization(CSSpec::from_series_variable(Family::Su2PCS,
                                                   DeformationSpec::linear_su2(1.0), 1.0)) ==
        Approx(4.0));
  for (Family f : {Family::Su2PCS, Family::Su11BGCS, Family::Su11PCS}) {
    const auto def = f == Family::Su2PCS ? DeformationSpec::higgs_su2(3.0)
                                         : DeformationSpec::higgs_su11(3.0);
    CHECK(normalization(CSSpec(f, def, 0.0)) == 1.0);
  }
  // Linear closed forms: (1+x)^2j, 0F1 -> Bessel, (1-z)^-2k.
  CHECK(normalization(CSSpec::from_series_variable(Family::Su2PCS,
                                                   DeformationSpec::linear_su2(3.0), 0.7)) ==
        Approx(std::pow(1.7, 6.0)).epsilon(1e-14));
  CHECK(normalization(CSSpec::from_series_variable(Family::Su11PCS,
                                                   DeformationSpec::linear_su11(1.5), 0.6)) ==
        Approx(std::pow(0.4, -3.0)).epsilon(1e-14));
  // k = 1/2 linear BGCS: sum y^n/(n!)^2 = I0(2 sqrt y).
  CHECK(normalization(CSSpec::from_series_variable(Family::Su11BGCS,
                                                   DeformationSpec::linear_su11(0.5), 2.25)) ==
        Approx(std::cyl_bessel_i(0.0, 3.0)).epsilon(1e-14));
}

TEST_CASE("coefficient examples") {
  auto v = coefficients(CSSpec(Family::Su2PCS, DeformationSpec::higgs_su2(0.5), 1.0));
  REQUIRE(v.coeffs.size() == 2);
  CHECK(v.coeffs[0].real() == Approx(1.0 / std::sqrt(3.0)));
  CHECK(v.coeffs[1].real() == Approx(std::sqrt(2.0 / 3.0)));
  CHECK(v.tail_bound == 0.0);

  v = coefficients(CSSpec(Family::Su11BGCS, DeformationSpec::higgs_su11(2.0), 0.0));
  CHECK(std::abs(v.coeffs[0]) == Approx(1.0));
  for (std::size_t n = 1; n < v.coeffs.size(); ++n) CHECK(v.coeffs[n] == cplx(0.0));

  v = coefficients(CSSpec(Family::Su11BGCS, DeformationSpec::linear_su11(0.5), 1.0));
  double fact = 1.0;
  for (std::size_t n = 0; n < 12; ++n) {
    if (n) fact *= static_cast<double>(n);
    CHECK((v.coeffs[n] / v.coeffs[0]).real() == Approx(1.0 / fact).epsilon(1e-13));
  }
}

TEST_CASE("amplitude phase is carried exactly") {
  const double phi = 0.83;
  const auto base = CSSpec(Family::Su11PCS, DeformationSpec::higgs_su11(1.0), 1.3);
  const auto v0 = coefficients(base);
  const auto v1 = coefficients(base.with_amplitude(std::polar(1.3, phi)));
  REQUIRE(v0.coeffs.size() == v1.coeffs.size());
  for (std::size_t n = 0; n < v0.coeffs.size(); ++n) {
    CHECK(std::abs(v1.coeffs[n] - v0.coeffs[n] * std::polar(1.0, phi * n)) < 1e-15);
  }
}

TEST_CASE("ladder action") {
  const auto h2 = DeformationSpec::higgs_su2(0.5);
  auto out = apply_lowering(h2, vec({0.0, 1.0}));
  CHECK(std::abs(out.coeffs[0] - std::sqrt(2.0)) < 1e-15);
  CHECK(out.coeffs[1] == cplx(0.0));
  out = apply_lowering(h2, vec({1.0, 0.0}));
  CHECK(out.coeffs[0] == cplx(0.0));
  out = apply_raising(h2, vec({0.0, 1.0}));
  CHECK(out.coeffs[0] == cplx(0.0));
  CHECK(out.coeffs[1] == cplx(0.0));
  out = apply_raising(h2, vec({1.0, 0.0}));
  CHECK(std::abs(out.coeffs[1] - std::sqrt(2.0)) < 1e-15);
  out = apply_raising(DeformationSpec::linear_su11(0.5), vec({1.0, 0.0, 0.0}));
  REQUIRE(out.coeffs.size() == 4);
  CHECK(out.coeffs[1] == cplx(1.0));
  // Linearity.
  const auto a = apply_lowering(DeformationSpec::higgs_su11(3.0), vec({0.3, 0.1, -2.0}));
  const auto b =
      apply_lowering(DeformationSpec::higgs_su11(3.0), vec({cplx(0.0, 0.6), cplx(0.0, 0.2), cplx(0.0, -4.0)}));
  for (std::size_t n = 0; n < 3; ++n) CHECK(std::abs(b.coeffs[n] - cplx(0.0, 2.0) * a.coeffs[n]) < 1e-13);
}

TEST_CASE("Barut-Girardello eigenproperty") {
  CHECK(bg_eigen_residual(CSSpec(Family::Su11BGCS, DeformationSpec::higgs_su11(1.0), 0.0)) == 0.0);
  CHECK(bg_eigen_residual(CSSpec(Family::Su11BGCS, DeformationSpec::linear_su11(1.0), 1.0),
                          1e-12) < 1e-10);
  CHECK(bg_eigen_residual(CSSpec(Family::Su11BGCS, DeformationSpec::higgs_su11(0.5), 2.0),
                          1e-12) < 1e-9);
  CHECK_THROWS_AS(bg_eigen_residual(CSSpec(Family::Su11PCS, DeformationSpec::higgs_su11(1.0), 1.0)),
                  DomainError);
}

TEST_CASE("property: normalization duality and unit norm on random states") {
  for (Family f : {Family::Su2PCS, Family::Su11BGCS, Family::Su11PCS}) {
    for (const auto& s : verify::random_states(f, 50, 99)) {
      const auto v = coefficients(s);
      CHECK(std::abs(normalization(s) / std::exp(v.log_direct_norm) - 1.0) < 1e-9);
      CHECK(std::abs(v.norm_sq() - 1.0) < 1e-13);
      CHECK(v.tail_bound <= kDefaultCoefficientEps);
      CHECK(v.coeffs.size() == static_cast<std::size_t>(v.truncation) + 1);
    }
  }
}

TEST_CASE("property: truncation tail bound is honest") {
  // Compare against a much tighter truncation: the dropped mass must stay
  // under the reported bound.
  for (Family f : {Family::Su11BGCS, Family::Su11PCS}) {
    for (const auto& s : verify::random_states(f, 20, 5)) {
      for (double eps : {1e-3, 1e-6, 1e-9}) {
        const auto coarse = coefficients(s, eps);
        const auto fine = coefficients(s, 1e-15);
        double dropped = 0.0;
        for (std::size_t n = coarse.coeffs.size(); n < fine.coeffs.size(); ++n) {
          dropped += std::norm(fine.coeffs[n]);
        }
        CHECK(std::sqrt(dropped) <= coarse.tail_bound * (1.0 + 1e-6) + 1e-15);
      }
    }
  }
}

TEST_CASE("large arguments stay finite") {
  const auto v = coefficients(
      CSSpec::from_series_variable(Family::Su11BGCS, DeformationSpec::linear_su11(8.0), 1e6));
  CHECK(std::isfinite(v.log_direct_norm));
  CHECK(std::abs(v.norm_sq() - 1.0) < 1e-12);
  const auto w = coefficients(
      CSSpec::from_series_variable(Family::Su2PCS, DeformationSpec::linear_su2(8.0), 1e6));
  CHECK(std::abs(w.norm_sq() - 1.0) < 1e-12);
}
