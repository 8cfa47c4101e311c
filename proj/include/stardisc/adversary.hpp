#pragma once

// Constructive lower bound for the inverse star discrepancy.
//
// A corner of the chain is stored as integer counters a_j; its coordinates are
// y_j = 1 - a_j * h with step h = beta * epsilon / d.  Starting from the unit
// cube, each step increments one counter and must uncover at least one point
// of X.  If every counter that can still move uncovers nothing, incrementing
// all of them together produces a pair of nested boxes with equal point counts
// but a volume gap larger than 2 * epsilon, and one of the two boxes has local
// discrepancy above epsilon.  Otherwise the chain runs until fewer than d/2
// counters can move, and its length bounds n from below.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "stardisc/core.hpp"

namespace stardisc {

using Counters = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

struct ChainParameters {
  Index dim = 0;
  double epsilon = 0.0;
  double beta = 20.0;
  double step = 0.0;       // beta * epsilon / dim
  std::int64_t a_max = 0;  // largest a with a * beta * epsilon <= 1
};

inline constexpr double kDefaultBeta = 20.0;

// Throws dimension_too_small (d < 2), nonpositive_epsilon, or unsound_beta
// when (beta/2) * (1 - 1/d)^d <= 2.
ChainParameters validate_parameters(Index d, double epsilon,
                                    double beta = kDefaultBeta);

// floor(d/2) * a_max.
std::int64_t guaranteed_chain_length(const ChainParameters& params);

struct IndexedCorner {
  Counters counters;

  static IndexedCorner origin(const ChainParameters& params) {
    return {Counters::Zero(params.dim)};
  }

  // y_j = 1 - a_j * step, always recomputed from the counters.
  Vector coordinates(const ChainParameters& params) const;

  friend bool operator==(const IndexedCorner& a, const IndexedCorner& b) {
    return a.counters.size() == b.counters.size() && a.counters == b.counters;
  }
};

// Throws invalid_corner unless the corner has `dim` counters in [0, a_max].
void check_corner(const IndexedCorner& corner, const ChainParameters& params);

// Indices j with a_j <= a_max - 1, in increasing order.
std::vector<Index> eligible_indices(const IndexedCorner& corner,
                                    const ChainParameters& params);

// (1 - 1/d)^d * ||z - w||_1, a lower bound on vol([0,z]) - vol([0,w]) whenever
// 1 - 1/d <= w <= z coordinate-wise.  Throws invalid_corner if the
// precondition fails (a slack of 1e-12 absorbs rounding in the lower bound).
double lemma1_gap_bound(const Eigen::Ref<const Vector>& z,
                        const Eigen::Ref<const Vector>& w);
double lemma1_gap_bound(const IndexedCorner& z, const IndexedCorner& w,
                        const ChainParameters& params);

struct Advance {
  Index incremented_index = 0;
  IndexedCorner corner;
  Index captured_point = 0;
};

struct AllBad {
  std::vector<Index> bad_indices;
  IndexedCorner corner;  // every bad index incremented at once
};

struct Exhausted {};

using StepOutcome = std::variant<Advance, AllBad, Exhausted>;

// One application of the bad-index argument.  Eligible indices are tried in
// increasing order; the first whose unit increment lowers count_closed wins,
// and the captured point is the lowest point index in the uncovered slab.
StepOutcome chain_step(const PointSet& X, const IndexedCorner& corner,
                       const ChainParameters& params);

struct ChainStep {
  IndexedCorner before;
  Index incremented_index = 0;
  IndexedCorner after;
  Index captured_point = 0;
};

struct ChainCertificate {
  ChainParameters params;
  std::vector<ChainStep> steps;
  IndexedCorner terminal;
  Index k = 0;  // number of steps; run_chain keeps it equal to steps.size()
};

enum class WitnessSide { overfull_inner, underfull_outer };
const char* to_string(WitnessSide side);

struct ViolationWitness {
  ChainParameters params;
  IndexedCorner outer;
  IndexedCorner inner;
  Index shared_count = 0;
  WitnessSide side = WitnessSide::overfull_inner;
  double excess = 0.0;  // |m/n - vol| at the cited box

  // The box whose local discrepancy exceeds epsilon.
  const IndexedCorner& cited() const {
    return side == WitnessSide::overfull_inner ? inner : outer;
  }
};

// Turns an all-bad step (equal closed counts at outer z and inner w) into a
// box with local discrepancy above epsilon.  Throws soundness_violation if the
// counts differ or neither side exceeds epsilon.
ViolationWitness extract_witness(const PointSet& X, const IndexedCorner& z,
                                 const IndexedCorner& w,
                                 const ChainParameters& params);

struct Refutation {
  ViolationWitness witness;
  ChainCertificate partial;  // the chain up to the all-bad corner
};

using ChainResult = std::variant<ChainCertificate, Refutation>;

ChainResult run_chain(const PointSet& X, const ChainParameters& params);
ChainResult run_chain(const PointSet& X, double epsilon,
                      double beta = kDefaultBeta);

struct VerificationReport {
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

// Re-checks every certificate invariant against X by direct recounting.  Does
// not use the chain construction above.
VerificationReport verify_certificate(const PointSet& X,
                                      const ChainCertificate& cert);

}  // namespace stardisc
