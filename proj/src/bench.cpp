#include "stardisc/bench.hpp"

#include <cmath>

namespace stardisc {

double upper_reference(double c, Index d, double epsilon) {
  return c * static_cast<double>(d) / epsilon / epsilon;
}

namespace {

bool is_perfect_power(Index n, Index d) {
  GeneratorSpec probe;
  probe.kind = GeneratorKind::grid;
  probe.n = n;
  probe.dim = d;
  try {
    validate(probe);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

BenchRow bench_inverse_discrepancy(Index d, double epsilon,
                                   std::span<const GeneratorSpec> generators,
                                   std::span<const Index> n_grid,
                                   const BenchOptions& options) {
  // Validates (d, epsilon, beta) up front so a bad row fails before the sweep.
  const auto params = validate_parameters(d, epsilon, options.beta);

  BenchRow row;
  row.d = d;
  row.epsilon = epsilon;
  row.beta = options.beta;
  row.lower_bound_paper = guaranteed_chain_length(params);
  row.upper_ref_aistleitner = upper_reference(kAistleitnerConstant, d, epsilon);
  row.upper_ref_gpw = upper_reference(kGnewuchPasingWeissConstant, d, epsilon);

  std::optional<PointSet> best_set;
  for (const auto& tmpl : generators) {
    for (const Index n : n_grid) {
      if (row.best_n_found && n >= *row.best_n_found) continue;
      GeneratorSpec spec = tmpl;
      spec.n = n;
      spec.dim = d;
      spec.points_per_axis = 0;
      if (spec.kind == GeneratorKind::grid && !is_perfect_power(n, d)) continue;
      PointSet X = generate(spec);
      DiscrepancyResult r;
      try {
        r = star_discrepancy_exact(X, options.exact);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::resource_limit) throw;
        row.resource_capped = true;
        continue;
      }
      if (r.value <= epsilon) {
        row.best_n_found = n;
        row.best_discrepancy = r.value;
        row.generator_of_best = to_string(spec.kind);
        best_set = std::move(X);
      }
    }
  }

  if (best_set)
    row.certified = std::holds_alternative<ChainCertificate>(
        run_chain(*best_set, params));
  return row;
}

SearchResult search_smallest_n(double epsilon, const GeneratorSpec& family,
                               Index lo, Index hi, const ExactOptions& exact) {
  const bool grid = family.kind == GeneratorKind::grid;
  if (!grid && family.kind != GeneratorKind::halton)
    throw Error(ErrorKind::invalid_argument,
                "bisection needs a monotone family (halton or grid)");
  if (lo < 1 || hi < lo)
    throw Error(ErrorKind::invalid_argument, "need 1 <= lo <= hi");

  // For grids the search variable is the number of points per axis.
  auto size_of = [&](Index m) {
    if (!grid) return m;
    Index n = 1;
    for (Index j = 0; j < family.dim; ++j) n *= m;
    return n;
  };
  auto discrepancy_at = [&](Index m) {
    GeneratorSpec spec = family;
    spec.n = size_of(m);
    spec.points_per_axis = 0;
    return star_discrepancy_exact(generate(spec), exact).value;
  };

  SearchResult out;
  while (lo <= hi) {
    const Index mid = lo + (hi - lo) / 2;
    const double v = discrepancy_at(mid);
    if (v <= epsilon) {
      out.n = size_of(mid);
      out.discrepancy = v;
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  return out;
}

}  // namespace stardisc
