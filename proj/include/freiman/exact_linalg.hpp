#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "freiman/integer.hpp"

namespace freiman {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Int> values);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
/// Runs in 64-bit arithmetic and restarts with arbitrary precision if an
/// intermediate overflows.
std::size_t exact_rank(const IntMatrix& m);

/// Exact determinant of a square matrix, fraction-free.
BigInt exact_determinant(const IntMatrix& m);

/// Finds an integer vector a with every a_i > 0 and M a = 0, or nothing if
/// the kernel of M misses the open positive orthant. Solves
///   maximize t  s.t.  M a = 0,  a_i >= t,  sum a_i = 1
/// exactly over the rationals (two-phase simplex, Bland's rule) and scales
/// the optimal vertex to a primitive integer vector.
std::optional<std::vector<Int>> positive_kernel_vector(const IntMatrix& m);

}  // namespace freiman
