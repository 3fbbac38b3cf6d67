// Copyright 2026 The dp4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dp4/rational.hpp"

namespace dp4 {

using RatVector = std::vector<Rat>;

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix diagonal(const RatVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RatVector row(std::size_t i) const;
  void append_row(const RatVector& r);

  RatMatrix transpose() const;
  bool is_symmetric() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& c, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatVector operator*(const RatMatrix& a, const RatVector& x);

/// Fraction-free row echelon form. Each input row is first scaled to
/// integers; `rows` then holds the Bareiss-reduced integer rows (only the
/// first `pivots.size()` are nonzero) and `pivots` the pivot columns.
struct BareissEchelon {
  std::vector<std::vector<Int>> rows;
  std::vector<std::size_t> pivots;
  int swap_sign = 1;
};

BareissEchelon bareiss_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Reduced row echelon form of the row space, zero rows dropped.
RatMatrix rref(const RatMatrix& m);

/// Canonical basis of the right kernel: the rows of the reduced echelon form
/// of the kernel, each rescaled to a primitive integer vector whose first
/// nonzero entry is positive. Two matrices with the same kernel give the
/// same basis.
std::vector<RatVector> kernel(const RatMatrix& m);

/// Canonical basis of a row space, normalized as in kernel().
std::vector<RatVector> canonical_row_basis(const std::vector<RatVector>& rows, std::size_t cols);

/// Primitive integer multiple with positive first nonzero entry.
RatVector primitive_vector(const RatVector& v);

Rat determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Unique solution of a square nonsingular system.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

}  // namespace dp4
