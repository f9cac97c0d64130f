#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "freiman/integer.hpp"

namespace freiman {

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// A lattice point with nonnegative integer coordinates.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<Int> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const Int> coords() const noexcept { return coords_; }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int total_degree() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Int> coords_;
};

/// A finite duplicate-free set of lattice points in Z^n, stored row-major
/// in lexicographic order. The order is canonical, so two PointSets are
/// equal exactly when they hold the same points.
class PointSet {
 public:
  explicit PointSet(std::size_t dim);
  PointSet(std::size_t dim, const std::vector<ExponentVector>& points);

  /// Builds a set from a flat row-major buffer; duplicates are removed.
  static PointSet from_rows(std::size_t dim, std::vector<Int> rows);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const Int> operator[](std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
  ExponentVector point(std::size_t i) const;
  std::vector<ExponentVector> points() const;
  bool contains(std::span<const Int> p) const;
  std::span<const Int> flat() const noexcept { return coords_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend PointSet sumset(const PointSet&, const PointSet&, std::size_t);

 private:
  PointSet(std::size_t dim, std::vector<Int> sorted_rows, int) : dim_(dim), coords_(std::move(sorted_rows)) {}

  std::size_t dim_;
  std::vector<Int> coords_;
};

/// { a + b : a in x, b in y }. Throws ResourceError when the result would
/// exceed `cap` points.
PointSet sumset(const PointSet& x, const PointSet& y, std::size_t cap = kNoCap);

/// kX = X + ... + X (k summands), accumulated as (k-1)X + X.
PointSet dilate(const PointSet& x, Int k, std::size_t cap = kNoCap);

/// Dimension of the affine hull of x over Q.
std::size_t affine_dim(const PointSet& x);

/// (d+1) m - binomial(d+1, 2): the smallest possible |2X| for |X| = m and
/// affine dimension d.
Int freiman_lower_bound(Int m, Int d);

/// binomial(ell+k-2, k-1) m - (k-1) binomial(ell+k-2, k): the smallest
/// possible |kX| for |X| = m spanning an affine space of dimension ell-1.
Int generalized_lower_bound(Int m, Int ell, Int k);

}  // namespace freiman
