#pragma once

#include "spinmap/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace spinmap {

/// Row-major dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigRational> multiply(std::span<const BigRational> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> data_;
};

/// Exact solution of A x = b by Gauss-Jordan elimination. A may have more
/// rows than columns as long as the system is consistent with a unique
/// solution. Throws Error{Inconsistent} when no solution exists and
/// Error{Singular} when the solution is not unique.
std::vector<BigRational> linear_solve(const RationalMatrix& a, std::span<const BigRational> b);

}  // namespace spinmap
