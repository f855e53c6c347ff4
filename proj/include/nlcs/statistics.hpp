#pragma once

#include <optional>
#include <vector>

#include "nlcs/coherent_state.hpp"

namespace nlcs {

// N(xbar) and its first two derivatives with respect to xbar.
struct NormalizationDerivatives {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};

NormalizationDerivatives normalization_derivatives(const CSSpec& spec);

/// P(n) = |c_n|^2 for n = 0..n_max from the normalised coefficient vector.
/// Entries beyond the truncation are zero.
std::vector<double> photon_distribution(const CSSpec& spec, long n_max,
                                        double eps = kDefaultCoefficientEps);

/// P(n) from the closed Pochhammer form: the n-th term of the normalisation
/// series divided by the series value.
std::vector<double> photon_distribution_closed(const CSSpec& spec, long n_max);

/// Mean photon number xbar N'/N. Zero at xbar = 0.
double mean_photon(const CSSpec& spec);

/// Intensity correlation N'' N / N'^2. Throws DegenerateInput at xbar = 0.
double intensity_correlation(const CSSpec& spec);

/// Mandel parameter xbar (N''/N' - N'/N). Zero at xbar = 0.
double mandel_q(const CSSpec& spec);

/// Metric factor N'/N + xbar (N''/N - N'^2/N^2).
double metric_factor(const CSSpec& spec);

// The same four quantities written per family as ratios of shifted series
// with explicit root products, the way they are usually tabulated. Used as
// an independent cross-check of the generic derivative route.
namespace family_form {
double mean_photon(const CSSpec& spec);
double intensity_correlation(const CSSpec& spec);
double mandel_q(const CSSpec& spec);
double metric_factor(const CSSpec& spec);
}  // namespace family_form

struct Moments {
  double mean = 0.0;   // <n>
  double fact2 = 0.0;  // <n(n-1)>
  double var = 0.0;    // <n^2> - <n>^2
};

/// Moments of the photon number by direct summation over the vector.
Moments moments_oracle(const CoefficientVector& v);

struct StatRecord {
  double xbar = 0.0;
  std::vector<double> photon_dist;
  double mean_n = 0.0;
  std::optional<double> intensity_corr;  // empty at xbar = 0
  double mandel_q = 0.0;
  double metric = 0.0;
};

StatRecord stat_record(const CSSpec& spec, long n_max);

// Uniform grid over the series variable plus the representation labels
// plotted per curve.
struct GridSpec {
  double xbar_min = 0.0;
  double xbar_max = 10.0;
  int points = 200;
  std::vector<double> labels{0.5, 1.0, 3.0, 8.0};

  void validate() const;
  std::vector<double> xbars() const;
};

}  // namespace nlcs
