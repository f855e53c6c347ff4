#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nlcs/algebra.hpp"
#include "nlcs/coherent_state.hpp"

namespace nlcs::verify {

struct PropertyResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;  // worst observed value of the checked quantity
  double tolerance = 0.0;
  std::string detail;
};

enum class Suite { Algebra, Stats, Laplace, Berry, All };

// p in {1,2,3} with leading coefficient 2 ((2), (1,2), (1,1,2)), both
// algebra kinds, labels {1/2, 1, 3, 8}.
std::vector<DeformationSpec> algebra_grid();

// Reproducible random coherent states: p in {1,2}, labels {1/2,1,3,8},
// random phase; xbar in (0.05, 5] except z in (0.05, 0.9) for the linear
// su(1,1) Perelomov state.
std::vector<CSSpec> random_states(Family family, int count, std::uint64_t seed);

// Algebraic consistency over n <= n_max (relative residuals).
PropertyResult check_commutator(const std::vector<DeformationSpec>& specs, long n_max = 50);
PropertyResult check_casimir(const std::vector<DeformationSpec>& specs, long n_max = 50);
PropertyResult check_root_factorization(const std::vector<DeformationSpec>& specs, long n_max = 50);
PropertyResult check_conjugate_reality(const std::vector<DeformationSpec>& specs, long n_max = 50);
PropertyResult check_unitarity(const std::vector<DeformationSpec>& specs, long n_cap = 100);
PropertyResult check_higgs_roots(const std::vector<double>& labels);

// Coherent states and statistics.
PropertyResult check_normalization_duality(int per_family, std::uint64_t seed);
PropertyResult check_statistics_oracle(int per_family, std::uint64_t seed);
PropertyResult check_mandel_identity(int per_family, std::uint64_t seed);
PropertyResult check_family_forms(int per_family, std::uint64_t seed);
PropertyResult check_linear_su2_mandel();
PropertyResult check_sign_structure();
PropertyResult check_metric_closed_forms();
PropertyResult check_metric_asymptotics(double xbar = 1e3, double tol = 1e-2);
PropertyResult check_bg_eigen();
PropertyResult check_ladder_matrix_identity(const std::vector<DeformationSpec>& specs);

// Geometry.
PropertyResult check_berry_closed_form();
PropertyResult check_connection_oracle(int per_family, std::uint64_t seed);
PropertyResult check_connection_mean(int per_family, std::uint64_t seed);
PropertyResult check_laplace(int per_config, std::uint64_t seed);
PropertyResult check_laplace_ground_probe();
PropertyResult check_gamma_quadrature();

/// Runs every property of a suite. extra_specs are user-supplied
/// deformations added to the algebra checks (after a unitarity check).
std::vector<PropertyResult> run_suite(Suite suite,
                                      const std::vector<DeformationSpec>& extra_specs = {});

}  // namespace nlcs::verify
