#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace nlcs {

using cplx = std::complex<double>;

// Request for pFq[numer; denom; arg] with complex parameters and a real
// argument.
struct SeriesParams {
  std::vector<cplx> numer;
  std::vector<cplx> denom;
  double arg = 0.0;
};

struct SeriesResult {
  cplx value;
  long terms_used = 0;
  bool terminated = false;  // a numerator parameter hit a non-positive integer
  // Relative error estimate. For convergent series it is the largest of the
  // last five |t_n|/|S|; for terminating series it is a rounding bound
  // eps_machine * sum|t_n| / |S|.
  double est_error = 0.0;
};

inline constexpr double kDefaultSeriesEps = 1e-15;
inline constexpr long kDefaultMaxTerms = 10000;

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
cplx pochhammer(cplx a, long n);

/// If a lies within 1e-12 of a non-positive integer -m, returns m.
std::optional<long> nonpositive_integer(cplx a);

/// Generalised hypergeometric series by the term-ratio recurrence with
/// compensated accumulation. Stops at exact termination or after five
/// consecutive terms below eps relative to the running sum.
///
/// Throws DivergentSeries when the parameters put the series outside its
/// convergence domain (too many upper parameters without termination,
/// |arg| >= 1 for p = q+1, or an unavoidable pole in a lower parameter) and
/// ConvergenceFailure when max_terms is exhausted.
SeriesResult pfq(const SeriesParams& params, double eps = kDefaultSeriesEps,
                 long max_terms = kDefaultMaxTerms);

/// order-th derivative of pFq with respect to its argument, by parameter
/// shift: d/dx pFq(a;b;x) = (prod a / prod b) pFq(a+1; b+1; x).
/// order must be 1 or 2. Throws ZeroDenominator when a shifted lower
/// parameter is a pole.
SeriesResult pfq_shifted(const SeriesParams& params, int order,
                         double eps = kDefaultSeriesEps,
                         long max_terms = kDefaultMaxTerms);

/// ln Gamma(x) for x > 0; DomainError otherwise.
double log_gamma(double x);

}  // namespace nlcs
