#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Appends a row; the first row fixes the column count.
  void append_row(const std::vector<Rational>& row);
  std::vector<Rational> row(std::size_t r) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RationalMatrix& a);

/// Basis of {x : a x = 0}. Free variables are set to unit vectors in
/// increasing column order.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

struct LinearSolution {
  std::optional<std::vector<Rational>> particular;  ///< nullopt when inconsistent
  std::size_t nullity = 0;                          ///< dim of the homogeneous solution space
};

LinearSolution solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Throws Error(InvalidArgument) for non-square input.
Rational determinant(const RationalMatrix& a);

}  // namespace gkm
