#include "spinmap/linear_solve.hpp"

#include "spinmap/error.hpp"

#include <string>
#include <utility>

namespace spinmap {

std::vector<BigRational> RationalMatrix::multiply(std::span<const BigRational> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "vector length does not match columns");
  std::vector<BigRational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  }
  return out;
}

std::vector<BigRational> linear_solve(const RationalMatrix& a, std::span<const BigRational> b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (b.size() != rows) {
    throw Error(ErrorKind::ShapeMismatch,
                "right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                    std::to_string(rows) + " rows");
  }

  RationalMatrix m(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = a(r, c);
    m(r, cols) = b[r];
  }

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k <= cols; ++k) std::swap(m(pivot, k), m(rank, k));
    }
    const BigRational inv = BigRational(1) / m(rank, c);
    for (std::size_t k = c; k <= cols; ++k) m(rank, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m(r, c).is_zero()) continue;
      const BigRational factor = m(r, c);
      for (std::size_t k = c; k <= cols; ++k) m(r, k) -= factor * m(rank, k);
    }
    pivot_col.push_back(c);
    ++rank;
  }

  for (std::size_t r = rank; r < rows; ++r) {
    if (!m(r, cols).is_zero()) {
      throw Error(ErrorKind::Inconsistent, "row " + std::to_string(r) + " reduces to 0 = " + m(r, cols).str());
    }
  }
  if (rank < cols) {
    throw Error(ErrorKind::Singular, "rank " + std::to_string(rank) + " < " + std::to_string(cols) + " unknowns");
  }

  std::vector<BigRational> x(cols);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = m(r, cols);
  return x;
}

}  // namespace spinmap
