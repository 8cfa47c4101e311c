#pragma once

// Point sets in the unit cube and anchored boxes [0,y] = [0,y_1] x ... x [0,y_d].
//
// A corner y is any dense Eigen column-vector expression; the counting and
// volume functions below accept expressions directly.  Membership tests are
// exact floating-point comparisons: `count_closed` uses x_j <= y_j on every
// axis, `count_open` uses x_j < y_j.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "stardisc/error.hpp"

namespace stardisc {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
// One point per row.
using PointMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class PointSet {
 public:
  PointSet() = default;

  // Empty set in dimension `dim`.
  explicit PointSet(Index dim);

  // Takes ownership of an n x d matrix; throws invalid_point_set if any
  // coordinate lies outside [0,1] or d == 0.
  explicit PointSet(PointMatrix points);

  Index dim() const noexcept { return dim_; }
  Index size() const noexcept { return points_.rows(); }
  bool empty() const noexcept { return points_.rows() == 0; }

  const PointMatrix& points() const noexcept { return points_; }
  auto point(Index i) const { return points_.row(i); }

  // Returns a copy with `p` appended at index size().
  template <typename Derived>
  PointSet with_point(const Eigen::MatrixBase<Derived>& p) const {
    PointMatrix grown(size() + 1, dim_);
    grown.topRows(size()) = points_;
    grown.row(size()) = p.transpose();
    return PointSet(std::move(grown));
  }

 private:
  Index dim_ = 0;
  PointMatrix points_;
};

namespace detail {

[[noreturn]] void throw_dimension_mismatch(Index expected, Index actual);
[[noreturn]] void throw_empty(const char* op);

template <typename Derived>
void check_corner(const PointSet& X, const Eigen::MatrixBase<Derived>& y) {
  static_assert(Derived::ColsAtCompileTime == 1 ||
                    Derived::ColsAtCompileTime == Eigen::Dynamic,
                "corner must be a column vector");
  if (y.cols() != 1 || y.rows() != X.dim())
    throw_dimension_mismatch(X.dim(), y.rows());
}

}  // namespace detail

// Product of the corner coordinates.  Evaluated as a left fold starting from
// 1, which the exact discrepancy sweep reproduces bit for bit.
template <typename Derived>
typename Derived::Scalar volume(const Eigen::MatrixBase<Derived>& y) {
  typename Derived::Scalar v(1);
  for (Index j = 0; j < y.size(); ++j) v *= y(j);
  return v;
}

template <typename Derived>
Index count_closed(const PointSet& X, const Eigen::MatrixBase<Derived>& y) {
  detail::check_corner(X, y);
  const auto& yc = y.derived().eval();
  Index c = 0;
  for (Index i = 0; i < X.size(); ++i)
    c += (X.point(i).transpose().array() <= yc.array()).all() ? 1 : 0;
  return c;
}

template <typename Derived>
Index count_open(const PointSet& X, const Eigen::MatrixBase<Derived>& y) {
  detail::check_corner(X, y);
  const auto& yc = y.derived().eval();
  Index c = 0;
  for (Index i = 0; i < X.size(); ++i)
    c += (X.point(i).transpose().array() < yc.array()).all() ? 1 : 0;
  return c;
}

inline double fraction(Index count, Index n) {
  return static_cast<double>(count) / static_cast<double>(n);
}

// count_closed(X, y)/n - vol([0,y]).
template <typename Derived>
double local_discrepancy_signed(const PointSet& X,
                                const Eigen::MatrixBase<Derived>& y) {
  if (X.empty()) detail::throw_empty("local_discrepancy_signed");
  return fraction(count_closed(X, y), X.size()) - volume(y);
}

// True if every coordinate of y is in [0,1].
template <typename Derived>
bool is_unit_corner(const Eigen::MatrixBase<Derived>& y) {
  return ((y.array() >= 0.0) && (y.array() <= 1.0)).all();
}

// CSV point format: one point per row, comma-separated decimals, optional
// leading '#' comment lines.  The dimension is taken from the first data row.
PointSet read_csv(std::istream& in);
PointSet read_csv_file(const std::string& path);

// Writes shortest round-trip decimal representations.  `comment`, if
// non-empty, is emitted as a single leading "# ..." line.
void write_csv(std::ostream& out, const PointSet& X,
               const std::string& comment = {});

}  // namespace stardisc
