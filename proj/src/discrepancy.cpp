#include "stardisc/discrepancy.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <span>
#include <thread>

namespace stardisc {

const char* to_string(Side side) {
  return side == Side::overfill ? "overfill" : "underfill";
}

const char* to_string(Method method) {
  return method == Method::exact ? "exact" : "sampled";
}

std::vector<std::vector<double>> critical_grid(const PointSet& X) {
  std::vector<std::vector<double>> grid(static_cast<std::size_t>(X.dim()));
  for (Index j = 0; j < X.dim(); ++j) {
    auto& axis = grid[j];
    axis.reserve(X.size() + 1);
    for (Index i = 0; i < X.size(); ++i) axis.push_back(X.points()(i, j));
    axis.push_back(1.0);
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  return grid;
}

namespace {

std::uint64_t grid_size(const std::vector<std::vector<double>>& grid) {
  std::uint64_t total = 1;
  for (const auto& axis : grid) {
    if (axis.size() > std::numeric_limits<std::uint64_t>::max() / total)
      return std::numeric_limits<std::uint64_t>::max();
    total *= axis.size();
  }
  return total;
}

struct Best {
  double value = -1.0;
  Vector corner;
  Side side = Side::overfill;

  // Corners arrive in lexicographic order, so keeping only strict
  // improvements leaves the lexicographically smallest maximiser.
  void offer(double v, const Vector& y, Side s) {
    if (v > value) {
      value = v;
      corner = y;
      side = s;
    }
  }
};

// Depth-first sweep over the critical grid.  At each axis the surviving
// point indices (closed and open membership on the axes already fixed) are
// sorted by the current coordinate, so advancing through the grid values only
// moves two cursors forward.
class Sweep {
 public:
  Sweep(const PointSet& X, const std::vector<std::vector<double>>& grid)
      : X_(X), grid_(grid), corner_(X.dim()) {}

  // Visits grid values [first, last) of axis 0.
  Best run(std::size_t first, std::size_t last) {
    std::vector<Index> all(static_cast<std::size_t>(X_.size()));
    for (Index i = 0; i < X_.size(); ++i) all[i] = i;
    sort_by_axis(all, 0);
    const auto& xs = all;
    const auto& axis = grid_[0];
    for (std::size_t g = first; g < last; ++g) {
      const double y = axis[g];
      const auto closed_end = std::upper_bound(
          xs.begin(), xs.end(), y,
          [&](double v, Index i) { return v < X_.points()(i, 0); });
      const auto open_end = std::lower_bound(
          xs.begin(), xs.end(), y,
          [&](Index i, double v) { return X_.points()(i, 0) < v; });
      visit(0, y, 1.0, {xs.begin(), closed_end}, {xs.begin(), open_end});
    }
    return best_;
  }

 private:
  void sort_by_axis(std::vector<Index>& idx, Index axis) const {
    std::stable_sort(idx.begin(), idx.end(), [&](Index a, Index b) {
      return X_.points()(a, axis) < X_.points()(b, axis);
    });
  }

  // Fixes coordinate `axis` to y; `closed`/`open` hold the points inside the
  // box on axes 0..axis.
  void visit(Index axis, double y, double vol_prefix,
             std::span<const Index> closed, std::span<const Index> open) {
    corner_(axis) = y;
    const double vol = vol_prefix * y;
    if (axis + 1 == X_.dim()) {
      const Index n = X_.size();
      best_.offer(fraction(static_cast<Index>(closed.size()), n) - vol, corner_,
                  Side::overfill);
      best_.offer(vol - fraction(static_cast<Index>(open.size()), n), corner_,
                  Side::underfill);
      return;
    }
    const Index next = axis + 1;
    std::vector<Index> c(closed.begin(), closed.end());
    std::vector<Index> o(open.begin(), open.end());
    sort_by_axis(c, next);
    sort_by_axis(o, next);
    std::size_t cc = 0, co = 0;
    for (const double v : grid_[next]) {
      while (cc < c.size() && X_.points()(c[cc], next) <= v) ++cc;
      while (co < o.size() && X_.points()(o[co], next) < v) ++co;
      visit(next, v, vol, std::span(c).first(cc), std::span(o).first(co));
    }
  }

  const PointSet& X_;
  const std::vector<std::vector<double>>& grid_;
  Vector corner_;
  Best best_;
};

DiscrepancyResult finish(const Best& best, Method method, const PointSet& X) {
  DiscrepancyResult r;
  r.value = best.value;
  r.argmax_corner = best.corner;
  r.side = best.side;
  r.method = method;
  r.n = X.size();
  r.d = X.dim();
  return r;
}

}  // namespace

std::uint64_t critical_grid_size(const PointSet& X) {
  return grid_size(critical_grid(X));
}

double evaluate_side(const PointSet& X, const Eigen::Ref<const Vector>& y,
                     Side side) {
  if (X.empty()) detail::throw_empty("evaluate_side");
  if (side == Side::overfill) return local_discrepancy_signed(X, y);
  return volume(y) - fraction(count_open(X, y), X.size());
}

DiscrepancyResult star_discrepancy_exact(const PointSet& X,
                                         const ExactOptions& options) {
  if (X.empty()) detail::throw_empty("star_discrepancy_exact");
  const auto grid = critical_grid(X);
  const auto total = grid_size(grid);
  if (total > options.max_grid)
    throw Error(ErrorKind::resource_limit,
                "critical grid has " +
                    (total == std::numeric_limits<std::uint64_t>::max()
                         ? std::string("more than 2^64")
                         : std::to_string(total)) +
                    " corners, cap is " + std::to_string(options.max_grid));

  const std::size_t top = grid[0].size();
  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, top);
  std::vector<Best> partial(workers);
  auto chunk = [&](std::size_t w) {
    Sweep sweep(X, grid);
    partial[w] = sweep.run(top * w / workers, top * (w + 1) / workers);
  };
  if (workers == 1) {
    chunk(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(chunk, w);
  }

  // Chunks cover increasing ranges of axis 0, so a left-to-right strict max
  // keeps the same tie-breaking as the sequential sweep.
  Best best;
  for (const auto& p : partial) best.offer(p.value, p.corner, p.side);
  return finish(best, Method::exact, X);
}

DiscrepancyResult star_discrepancy_sampled(const PointSet& X,
                                           std::uint64_t trials,
                                           std::uint64_t seed) {
  if (X.empty()) detail::throw_empty("star_discrepancy_sampled");
  if (trials == 0)
    throw Error(ErrorKind::invalid_argument, "trials must be positive");

  const auto grid = critical_grid(X);
  const auto total = grid_size(grid);
  if (trials >= total && total <= ExactOptions{}.max_grid) {
    auto r = star_discrepancy_exact(X);
    r.method = Method::sampled;
    return r;
  }

  std::mt19937_64 rng(seed);
  Best best;
  Vector y(X.dim());
  auto better = [&](double v, Side s) {
    if (v > best.value ||
        (v == best.value &&
         std::lexicographical_compare(y.begin(), y.end(), best.corner.begin(),
                                      best.corner.end()))) {
      best.value = v;
      best.corner = y;
      best.side = s;
    }
  };
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (Index j = 0; j < X.dim(); ++j)
      y(j) = grid[j][rng() % grid[j].size()];
    better(evaluate_side(X, y, Side::overfill), Side::overfill);
    better(evaluate_side(X, y, Side::underfill), Side::underfill);
  }
  return finish(best, Method::sampled, X);
}

}  // namespace stardisc
