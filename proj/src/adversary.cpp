#include "stardisc/adversary.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace stardisc {

const char* to_string(WitnessSide side) {
  return side == WitnessSide::overfull_inner ? "overfull-inner"
                                             : "underfull-outer";
}

ChainParameters validate_parameters(Index d, double epsilon, double beta) {
  if (d < 2)
    throw Error(ErrorKind::dimension_too_small,
                "dimension must be at least 2, got " + std::to_string(d));
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw Error(ErrorKind::nonpositive_epsilon, "epsilon must be positive");
  const double dd = static_cast<double>(d);
  if (!std::isfinite(beta) || !(beta / 2.0 * std::pow(1.0 - 1.0 / dd, dd) > 2.0))
    throw Error(ErrorKind::unsound_beta,
                "beta=" + std::to_string(beta) +
                    " violates (beta/2)(1-1/d)^d > 2 at d=" + std::to_string(d));

  ChainParameters p;
  p.dim = d;
  p.epsilon = epsilon;
  p.beta = beta;
  p.step = beta * epsilon / dd;

  // a_max = floor(1 / (beta * eps)), corrected so that a_max * beta * eps <= 1
  // holds in floating point as well.
  const double width = beta * epsilon;
  const double approx = std::floor(1.0 / width);
  if (approx > static_cast<double>(std::int64_t{1} << 52))
    throw Error(ErrorKind::invalid_argument,
                "epsilon too small: counter range exceeds 2^52");
  auto a = static_cast<std::int64_t>(approx);
  while (static_cast<double>(a + 1) * width <= 1.0) ++a;
  while (a > 0 && static_cast<double>(a) * width > 1.0) --a;
  p.a_max = a;
  return p;
}

std::int64_t guaranteed_chain_length(const ChainParameters& params) {
  return static_cast<std::int64_t>(params.dim / 2) * params.a_max;
}

Vector IndexedCorner::coordinates(const ChainParameters& params) const {
  return (1.0 - counters.cast<double>().array() * params.step).matrix();
}

void check_corner(const IndexedCorner& corner, const ChainParameters& params) {
  if (corner.counters.size() != params.dim)
    throw Error(ErrorKind::invalid_corner,
                "corner has " + std::to_string(corner.counters.size()) +
                    " counters, expected " + std::to_string(params.dim));
  if ((corner.counters.array() < 0).any() ||
      (corner.counters.array() > params.a_max).any())
    throw Error(ErrorKind::invalid_corner,
                "counter outside [0, " + std::to_string(params.a_max) + "]");
}

std::vector<Index> eligible_indices(const IndexedCorner& corner,
                                    const ChainParameters& params) {
  std::vector<Index> out;
  for (Index j = 0; j < corner.counters.size(); ++j)
    if (corner.counters(j) <= params.a_max - 1) out.push_back(j);
  return out;
}

double lemma1_gap_bound(const Eigen::Ref<const Vector>& z,
                        const Eigen::Ref<const Vector>& w) {
  constexpr double slack = 1e-12;
  if (z.size() != w.size() || z.size() < 1)
    throw Error(ErrorKind::invalid_corner, "corners must share a dimension");
  const double d = static_cast<double>(z.size());
  const double floor_coord = 1.0 - 1.0 / d;
  if (!is_unit_corner(z) || !is_unit_corner(w))
    throw Error(ErrorKind::invalid_corner, "corner outside the unit cube");
  if ((w.array() > z.array()).any())
    throw Error(ErrorKind::invalid_corner, "inner corner exceeds outer corner");
  if ((w.array() < floor_coord - slack).any())
    throw Error(ErrorKind::invalid_corner, "inner corner below 1 - 1/d");
  return std::pow(floor_coord, d) * (z - w).lpNorm<1>();
}

double lemma1_gap_bound(const IndexedCorner& z, const IndexedCorner& w,
                        const ChainParameters& params) {
  check_corner(z, params);
  check_corner(w, params);
  return lemma1_gap_bound(z.coordinates(params), w.coordinates(params));
}

namespace {

Index first_uncovered(const PointSet& X, const Vector& outer,
                      const Vector& inner) {
  for (Index i = 0; i < X.size(); ++i) {
    const auto x = X.point(i).transpose().array();
    if ((x <= outer.array()).all() && !(x <= inner.array()).all()) return i;
  }
  throw Error(ErrorKind::soundness_violation,
              "count dropped but no uncovered point was found");
}

}  // namespace

StepOutcome chain_step(const PointSet& X, const IndexedCorner& corner,
                       const ChainParameters& params) {
  check_corner(corner, params);
  if (X.empty()) detail::throw_empty("chain_step");
  if (X.dim() != params.dim)
    detail::throw_dimension_mismatch(X.dim(), params.dim);

  const auto eligible = eligible_indices(corner, params);
  if (2 * static_cast<Index>(eligible.size()) < params.dim) return Exhausted{};

  const Vector y = corner.coordinates(params);
  const Index base = count_closed(X, y);
  for (const Index j : eligible) {
    IndexedCorner next = corner;
    next.counters(j) += 1;
    const Vector y_next = next.coordinates(params);
    if (count_closed(X, y_next) < base)
      return Advance{j, std::move(next), first_uncovered(X, y, y_next)};
  }

  IndexedCorner all = corner;
  for (const Index j : eligible) all.counters(j) += 1;
  return AllBad{eligible, std::move(all)};
}

ViolationWitness extract_witness(const PointSet& X, const IndexedCorner& z,
                                 const IndexedCorner& w,
                                 const ChainParameters& params) {
  check_corner(z, params);
  check_corner(w, params);
  if (X.empty()) detail::throw_empty("extract_witness");
  const Counters diff = w.counters - z.counters;
  if ((diff.array() < 0).any() || (diff.array() > 1).any())
    throw Error(ErrorKind::invalid_corner,
                "inner corner is not a simultaneous unit increment of the outer");

  const Vector yz = z.coordinates(params);
  const Vector yw = w.coordinates(params);
  const Index m = count_closed(X, yz);
  if (count_closed(X, yw) != m)
    throw Error(ErrorKind::soundness_violation,
                "outer and inner boxes hold different point counts");

  const double share = fraction(m, X.size());
  const double underfull = volume(yz) - share;
  const double overfull = share - volume(yw);

  ViolationWitness out{params, z, w, m, WitnessSide::overfull_inner, overfull};
  if (underfull > overfull) {
    out.side = WitnessSide::underfull_outer;
    out.excess = underfull;
  }
  if (!(out.excess > params.epsilon))
    throw Error(ErrorKind::soundness_violation,
                "volume gap did not force a discrepancy above epsilon");
  return out;
}

ChainResult run_chain(const PointSet& X, const ChainParameters& params) {
  if (X.empty()) detail::throw_empty("run_chain");
  if (X.dim() != params.dim)
    detail::throw_dimension_mismatch(X.dim(), params.dim);

  ChainCertificate cert;
  cert.params = params;
  IndexedCorner corner = IndexedCorner::origin(params);
  while (true) {
    auto outcome = chain_step(X, corner, params);
    if (auto* adv = std::get_if<Advance>(&outcome)) {
      cert.steps.push_back(
          {corner, adv->incremented_index, adv->corner, adv->captured_point});
      corner = std::move(adv->corner);
      continue;
    }
    cert.terminal = corner;
    cert.k = static_cast<Index>(cert.steps.size());
    if (auto* bad = std::get_if<AllBad>(&outcome))
      return Refutation{extract_witness(X, corner, bad->corner, params),
                        std::move(cert)};
    return cert;
  }
}

ChainResult run_chain(const PointSet& X, double epsilon, double beta) {
  return run_chain(X, validate_parameters(X.dim(), epsilon, beta));
}

}  // namespace stardisc
