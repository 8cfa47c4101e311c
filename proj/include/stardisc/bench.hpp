#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "stardisc/adversary.hpp"
#include "stardisc/discrepancy.hpp"
#include "stardisc/generators.hpp"

namespace stardisc {

inline constexpr double kAistleitnerConstant = 10.0;
inline constexpr double kGnewuchPasingWeissConstant = 2.4968;

// c * d / eps^2, evaluated as c * d / eps / eps.
double upper_reference(double c, Index d, double epsilon);

struct BenchRow {
  Index d = 0;
  double epsilon = 0.0;
  double beta = kDefaultBeta;
  std::int64_t lower_bound_paper = 0;
  double upper_ref_aistleitner = 0.0;
  double upper_ref_gpw = 0.0;
  std::optional<Index> best_n_found;
  std::string generator_of_best;
  std::optional<double> best_discrepancy;
  bool certified = false;
  // Some (generator, n) cell exceeded the exact-grid cap and was skipped.
  bool resource_capped = false;
};

struct BenchOptions {
  double beta = kDefaultBeta;
  ExactOptions exact;
};

// For every generator template (its `n` is ignored) and every n in `n_grid`,
// computes the exact D* and keeps the smallest n with D* <= epsilon; ties go to
// the earlier generator.  Grid templates skip n that are not perfect d-th
// powers.  The winning set is then fed to run_chain.
BenchRow bench_inverse_discrepancy(Index d, double epsilon,
                                   std::span<const GeneratorSpec> generators,
                                   std::span<const Index> n_grid,
                                   const BenchOptions& options = {});

struct SearchResult {
  std::optional<Index> n;  // smallest n found with D* <= epsilon
  std::optional<double> discrepancy;
};

// Bisection on n over [lo, hi] for halton prefixes (over n) and grids (over
// points per axis, n = m^d).  Assumes D* is non-increasing along the family,
// which holds for grids and approximately for Halton prefixes.  Throws
// invalid_argument for random or hammersley templates.
SearchResult search_smallest_n(double epsilon, const GeneratorSpec& family,
                               Index lo, Index hi,
                               const ExactOptions& exact = {});

}  // namespace stardisc
