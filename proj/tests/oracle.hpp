#pragma once

// Test-only reference implementations.  These work on plain nested vectors
// and share no code with the library's sweep.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "stardisc/core.hpp"

namespace oracle {

using Points = std::vector<std::vector<double>>;

inline Points rows(const stardisc::PointSet& X) {
  Points out(static_cast<std::size_t>(X.size()),
             std::vector<double>(static_cast<std::size_t>(X.dim())));
  for (Eigen::Index i = 0; i < X.size(); ++i)
    for (Eigen::Index j = 0; j < X.dim(); ++j) out[i][j] = X.points()(i, j);
  return out;
}

struct Result {
  double value = -1.0;
  std::vector<double> corner;
};

// Full critical grid, both sides, naive recount at every corner.
inline Result naive_star_discrepancy(const Points& pts) {
  const std::size_t n = pts.size();
  const std::size_t d = pts.front().size();
  std::vector<std::vector<double>> grid(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& p : pts) grid[j].push_back(p[j]);
    grid[j].push_back(1.0);
    std::sort(grid[j].begin(), grid[j].end());
    grid[j].erase(std::unique(grid[j].begin(), grid[j].end()), grid[j].end());
  }
  Result best;
  std::vector<std::size_t> odo(d, 0);
  std::vector<double> y(d);
  while (true) {
    double vol = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      y[j] = grid[j][odo[j]];
      vol *= y[j];
    }
    std::size_t closed = 0, open = 0;
    for (const auto& p : pts) {
      bool in_closed = true, in_open = true;
      for (std::size_t j = 0; j < d; ++j) {
        in_closed = in_closed && p[j] <= y[j];
        in_open = in_open && p[j] < y[j];
      }
      closed += in_closed;
      open += in_open;
    }
    const double over = static_cast<double>(closed) / n - vol;
    const double under = vol - static_cast<double>(open) / n;
    const double v = std::max(over, under);
    if (v > best.value) {
      best.value = v;
      best.corner = y;
    }
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (++odo[j] < grid[j].size()) break;
      odo[j] = 0;
      if (j == 0) return best;
    }
    if (d == 0) return best;
  }
}

// Random set; with `lattice` > 0 coordinates are snapped to multiples of
// 1/lattice so that duplicates and boundary ties occur often.
inline stardisc::PointSet random_set(std::mt19937_64& rng, Eigen::Index n,
                                     Eigen::Index d, int lattice = 0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> k(0, std::max(lattice, 1));
  stardisc::PointMatrix m(n, d);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      m(i, j) = lattice > 0 ? static_cast<double>(k(rng)) / lattice : u(rng);
  return stardisc::PointSet(std::move(m));
}

}  // namespace oracle
