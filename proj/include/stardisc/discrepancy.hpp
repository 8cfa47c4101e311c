#pragma once

#include <cstdint>
#include <vector>

#include "stardisc/core.hpp"

namespace stardisc {

// overfill: count_closed/n - vol.  underfill: vol - count_open/n.
enum class Side { overfill, underfill };
enum class Method { exact, sampled };

const char* to_string(Side side);
const char* to_string(Method method);

struct DiscrepancyResult {
  double value = 0.0;
  Vector argmax_corner;
  Side side = Side::overfill;
  Method method = Method::exact;
  Index n = 0;
  Index d = 0;
};

struct ExactOptions {
  // Largest number of grid corners the exact sweep will visit.
  std::uint64_t max_grid = 100'000'000;
  unsigned threads = 1;
};

// Per-axis sorted distinct point coordinates with 1 appended.
std::vector<std::vector<double>> critical_grid(const PointSet& X);

// Product of the per-axis grid sizes, saturating at UINT64_MAX.
std::uint64_t critical_grid_size(const PointSet& X);

// Evaluates one side of the two-sided local discrepancy at y.
double evaluate_side(const PointSet& X, const Eigen::Ref<const Vector>& y,
                     Side side);

// Supremum over all anchored boxes of the two-sided local discrepancy,
// enumerating every corner of the critical grid.  Ties in value resolve to the
// lexicographically smallest corner, and to overfill at a single corner; the
// result does not depend on `threads`.
//
// Throws empty_point_set for n == 0 and resource_limit when the grid exceeds
// `options.max_grid`.
DiscrepancyResult star_discrepancy_exact(const PointSet& X,
                                         const ExactOptions& options = {});

// Lower bound on D*: the best of `trials` corners drawn uniformly from the
// critical grid (independently per axis) using mt19937_64 seeded with `seed`.
// When `trials` is at least the grid size the grid is enumerated instead, so
// the result coincides with the exact value.
DiscrepancyResult star_discrepancy_sampled(const PointSet& X,
                                           std::uint64_t trials,
                                           std::uint64_t seed);

}  // namespace stardisc
