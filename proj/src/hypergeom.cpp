#include "nlcs/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "nlcs/errors.hpp"

namespace nlcs {

namespace {

constexpr double kIntegerTol = 1e-12;
constexpr int kConsecutiveSmall = 5;

// Neumaier-compensated accumulator, applied to each component separately.
class CompensatedSum {
 public:
  void add(cplx t) {
    add_component(re_, re_c_, t.real());
    add_component(im_, im_c_, t.imag());
  }
  cplx value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_component(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

std::optional<long> termination_index(const SeriesParams& params) {
  std::optional<long> best;
  for (const auto& a : params.numer) {
    if (auto m = nonpositive_integer(a)) {
      if (!best || *m < *best) best = m;
    }
  }
  return best;
}

// A lower parameter -m is harmful when term m+1 is actually needed.
std::optional<long> blocking_pole(const SeriesParams& params,
                                  std::optional<long> last) {
  for (const auto& b : params.denom) {
    if (auto m = nonpositive_integer(b)) {
      if (!last || *m < *last) return m;
    }
  }
  return std::nullopt;
}

SeriesParams shifted(const SeriesParams& params, int by) {
  SeriesParams out = params;
  for (auto& a : out.numer) a += static_cast<double>(by);
  for (auto& b : out.denom) b += static_cast<double>(by);
  return out;
}

}  // namespace

cplx pochhammer(cplx a, long n) {
  cplx acc = 1.0;
  for (long i = 0; i < n; ++i) acc *= a + static_cast<double>(i);
  return acc;
}

std::optional<long> nonpositive_integer(cplx a) {
  if (std::abs(a.imag()) > kIntegerTol) return std::nullopt;
  if (a.real() > kIntegerTol) return std::nullopt;
  const double r = std::round(a.real());
  if (std::abs(a.real() - r) > kIntegerTol) return std::nullopt;
  return static_cast<long>(-r);
}

SeriesResult pfq(const SeriesParams& params, double eps, long max_terms) {
  const auto last = termination_index(params);
  if (auto pole = blocking_pole(params, last)) {
    throw DivergentSeries("pfq: lower parameter -" + std::to_string(*pole) +
                          " is a pole reached before termination");
  }
  const std::size_t p = params.numer.size();
  const std::size_t q = params.denom.size();
  if (!last) {
    if (p > q + 1) {
      throw DivergentSeries("pfq: " + std::to_string(p) + "F" +
                            std::to_string(q) +
                            " diverges unless an upper parameter terminates it");
    }
    if (p == q + 1 && !(std::abs(params.arg) < 1.0)) {
      throw DivergentSeries("pfq: |arg| must be < 1 for p = q+1");
    }
  }
  if (last && *last + 1 > max_terms) {
    throw ConvergenceFailure("pfq: terminating series longer than max_terms");
  }

  CompensatedSum sum;
  double abs_sum = 0.0;
  cplx term = 1.0;
  int small_run = 0;
  double tail = 0.0;
  double recent[kConsecutiveSmall] = {};
  long n = 0;
  for (;; ++n) {
    sum.add(term);
    abs_sum += std::abs(term);
    if (last) {
      if (n == *last) break;
    } else {
      const double s = std::abs(sum.value());
      const double rel = s > 0.0 ? std::abs(term) / s : std::abs(term);
      recent[n % kConsecutiveSmall] = rel;
      small_run = std::abs(term) < eps * s || term == 0.0 ? small_run + 1 : 0;
      if (small_run >= kConsecutiveSmall) {
        tail = *std::max_element(recent, recent + kConsecutiveSmall);
        break;
      }
      if (n + 1 >= max_terms) {
        throw ConvergenceFailure("pfq: no convergence within " +
                                 std::to_string(max_terms) + " terms");
      }
    }
    const double dn = static_cast<double>(n);
    cplx ratio = params.arg / (dn + 1.0);
    for (const auto& a : params.numer) ratio *= a + dn;
    for (const auto& b : params.denom) ratio /= b + dn;
    term *= ratio;
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
      throw ConvergenceFailure("pfq: term overflow at n=" + std::to_string(n));
    }
  }

  SeriesResult out;
  out.value = sum.value();
  out.terms_used = n + 1;
  out.terminated = last.has_value();
  const double mag = std::abs(out.value);
  if (out.terminated) {
    out.est_error = std::numeric_limits<double>::epsilon() * abs_sum /
                    (mag > 0.0 ? mag : 1.0);
  } else {
    out.est_error = tail;
  }
  return out;
}

SeriesResult pfq_shifted(const SeriesParams& params, int order, double eps,
                         long max_terms) {
  if (order != 1 && order != 2) {
    throw DomainError("pfq_shifted: order must be 1 or 2");
  }
  cplx prefactor = 1.0;
  for (int o = 0; o < order; ++o) {
    for (const auto& a : params.numer) prefactor *= a + static_cast<double>(o);
    for (const auto& b : params.denom) {
      const cplx d = b + static_cast<double>(o);
      if (std::abs(d) == 0.0) {
        throw ZeroDenominator("pfq_shifted: lower parameter vanishes");
      }
      prefactor /= d;
    }
  }
  if (prefactor == 0.0) {
    return SeriesResult{0.0, 0, true, 0.0};
  }
  const SeriesParams next = shifted(params, order);
  if (auto pole = blocking_pole(next, termination_index(next))) {
    throw ZeroDenominator("pfq_shifted: shifted lower parameter -" +
                          std::to_string(*pole) + " is a pole");
  }
  SeriesResult r = pfq(next, eps, max_terms);
  r.value *= prefactor;
  return r;
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be positive and finite");
  }
  return boost::math::lgamma(x);
}

}  // namespace nlcs
