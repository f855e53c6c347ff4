#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "nlcs/errors.hpp"
#include "nlcs/hypergeom.hpp"

using namespace nlcs;
using doctest::Approx;
using hp = boost::multiprecision::cpp_complex_50;

namespace {

// Straight 50-digit summation, no early-exit heuristics beyond a fixed term
// budget and a 1e-40 relative cut.
cplx pfq_oracle(const SeriesParams& p, int max_terms = 4000) {
  hp sum = 1, term = 1;
  const hp z(p.arg, 0.0);
  for (int n = 0; n < max_terms; ++n) {
    hp factor = z / hp(n + 1);
    for (const auto& a : p.numer) factor *= hp(a.real() + n, a.imag());
    for (const auto& b : p.denom) factor /= hp(b.real() + n, b.imag());
    term *= factor;
    sum += term;
    if (term == 0 || abs(term) < abs(sum) * 1e-40) break;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

double relerr(cplx a, cplx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(cplx(3.7, -1.0), 0) == cplx(1.0));
  CHECK(std::abs(pochhammer(cplx(0.0, -1.0), 2) - cplx(-1.0, -1.0)) < 1e-15);
  CHECK(pochhammer(1.0, 3).real() == Approx(6.0));
  CHECK(pochhammer(-2.0, 3).real() == 0.0);
  CHECK(pochhammer(-2.0, 2).real() == Approx(2.0));
}

TEST_CASE("nonpositive integer detection") {
  CHECK(nonpositive_integer(cplx(-3.0)) == 3);
  CHECK(nonpositive_integer(cplx(0.0)) == 0);
  CHECK_FALSE(nonpositive_integer(cplx(-3.0, 1e-6)).has_value());
  CHECK_FALSE(nonpositive_integer(cplx(2.0)).has_value());
  CHECK_FALSE(nonpositive_integer(cplx(-2.5)).has_value());
}

TEST_CASE("pfq examples") {
  auto r = pfq({{-2.0}, {}, -1.0});
  CHECK(r.value.real() == Approx(4.0));
  CHECK(r.terminated);
  CHECK(pfq({{}, {1.0}, 0.0}).value.real() == 1.0);
  // Higgs su(2) j = 1/2: 3F0[-1, -i, i; ; -x] = 1 + x.
  r = pfq({{-1.0, cplx(0.0, -1.0), cplx(0.0, 1.0)}, {}, -1.0});
  CHECK(std::abs(r.value - cplx(2.0)) < 1e-15);
  // 0F0 = exp, 1F0[a;;x] = (1-x)^-a, 0F1[;3/2; x^2/4] = sinh(x)/x.
  CHECK(pfq({{}, {}, 2.5}).value.real() == Approx(std::exp(2.5)).epsilon(1e-15));
  CHECK(pfq({{1.5}, {}, 0.3}).value.real() == Approx(std::pow(0.7, -1.5)).epsilon(1e-14));
  CHECK(pfq({{}, {1.5}, 1.0}).value.real() == Approx(std::sinh(2.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("pfq error classes") {
  CHECK_THROWS_AS(pfq({{1.0, 1.0}, {}, 0.5}), DivergentSeries);
  CHECK_THROWS_AS(pfq({{1.0}, {}, 1.0}), DivergentSeries);
  CHECK_THROWS_AS(pfq({{1.0}, {-2.0}, 0.5}), DivergentSeries);
  // Numerator terminates before the denominator pole is reached.
  CHECK_NOTHROW(pfq({{-1.0}, {-2.0}, 0.5}));
  CHECK_THROWS_AS(pfq({{}, {}, 1e6}), ConvergenceFailure);
  CHECK_THROWS_AS(pfq_shifted({{1.0}, {}, 0.5}, 3), DomainError);
  CHECK_THROWS_AS(pfq_shifted({{1.0}, {-1.0}, 0.5}, 2), ZeroDenominator);
}

TEST_CASE("shifted series") {
  // d/dx 1F0[-2;;-x] at 0 is 2 after the chain-rule sign.
  CHECK(-pfq_shifted({{-2.0}, {}, 0.0}, 1).value.real() == Approx(2.0));
  CHECK(pfq_shifted({{}, {1.0}, 0.0}, 1).value.real() == Approx(1.0));
  CHECK(pfq_shifted({{-1.0}, {}, -0.7}, 2).value.real() == 0.0);
  // Finite-difference check of d/dz pFq = (prod a / prod b) pFq(a+1; b+1).
  const SeriesParams base{{cplx(0.5, 0.3), cplx(0.5, -0.3)}, {cplx(1.5), cplx(2.2)}, 0.0};
  for (double z : {0.5, 2.0, 7.5}) {
    const double h = 1e-4;
    auto at = [&](double x) {
      SeriesParams q = base;
      q.arg = x;
      return pfq(q).value;
    };
    SeriesParams q = base;
    q.arg = z;
    const cplx fd1 = (8.0 * (at(z + h) - at(z - h)) - (at(z + 2 * h) - at(z - 2 * h))) / (12 * h);
    CHECK(relerr(pfq_shifted(q, 1).value, fd1) < 1e-9);
    const cplx fd2 = (at(z + h) - 2.0 * at(z) + at(z - h)) / (h * h);
    CHECK(relerr(pfq_shifted(q, 2).value, fd2) < 1e-5);
  }
}

TEST_CASE("property: pfq against a 50-digit oracle") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.2, 4.0);
  // Shapes that occur for the three coherent-state normalizations plus
  // generic ones: (p, q, argument scale).
  struct Shape {
    int p, q;
    double scale;
  };
  const Shape shapes[] = {{0, 1, 30.0}, {0, 3, 200.0}, {1, 0, 0.9}, {1, 2, 50.0},
                          {2, 1, 0.95}, {1, 1, 20.0},  {0, 0, 25.0}};
  for (const auto& s : shapes) {
    for (int trial = 0; trial < 40; ++trial) {
      SeriesParams p;
      for (int i = 0; i < s.p; ++i) p.numer.emplace_back(pos(rng), 0.5 * u(rng));
      for (int i = 0; i < s.q; ++i) p.denom.emplace_back(pos(rng), 0.5 * u(rng));
      const double mag = s.scale * std::abs(u(rng));
      p.arg = mag * (u(rng) < 0 ? -1.0 : 1.0);
      const auto got = pfq(p);
      const cplx want = pfq_oracle(p);
      // Alternating sums lose digits in proportion to the largest term.
      // The series with |a|, Re b and |z| bounds sum |t_n|.
      SeriesParams mod = p;
      mod.arg = std::abs(p.arg);
      for (auto& a : mod.numer) a = std::abs(a);
      for (auto& b : mod.denom) b = b.real();
      const double cancellation = std::max(1.0, std::abs(pfq_oracle(mod)) / std::abs(want));
      CHECK(relerr(got.value, want) < 1e-13 * cancellation);
    }
  }
}

TEST_CASE("property: terminating series against the oracle") {
  // 2p-1 F0 with a non-positive integer numerator, the su(2) normalization
  // shape, at large negative arguments where the terms alternate.
  for (int twoj = 1; twoj <= 16; ++twoj) {
    for (double x : {0.5, 3.0, 40.0}) {
      const SeriesParams p{{-static_cast<double>(twoj), cplx(-2.0, -3.0), cplx(-2.0, 3.0)}, {}, -x};
      const auto got = pfq(p);
      CHECK(got.terminated);
      CHECK(got.terms_used == twoj + 1);
      CHECK(relerr(got.value, pfq_oracle(p)) < 1e-13);
    }
  }
}

TEST_CASE("log_gamma") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(4.0) == Approx(std::log(6.0)).epsilon(1e-15));
  CHECK(log_gamma(0.5) == Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-15));
  CHECK(log_gamma(171.5) == Approx(std::lgamma(171.5)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(log_gamma(INFINITY), DomainError);
}
