// Copyright 2026 The Fluctum Authors
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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace fluctum {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

/// Dense complex matrix stored row-major. This is the carrier for every
/// operator, state and Kraus matrix in the library.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major entries; throws DimensionError if the
  /// count does not equal rows * cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);
  /// Row-by-row literal, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  /// |v><v|.
  static ComplexMatrix projector(std::span<const Complex> v);
  /// |u><v|.
  static ComplexMatrix outer(std::span<const Complex> u,
                             std::span<const Complex> v);
  /// Matrix unit with a single one at (row, col).
  static ComplexMatrix unit(std::size_t rows, std::size_t cols,
                            std::size_t row, std::size_t col);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> values);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  /// Largest entrywise modulus; cheap scale estimate.
  double max_abs() const noexcept;

  /// Entrywise comparison with absolute tolerance. Shapes must match.
  bool approx_equal(const ComplexMatrix& other, double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ComplexVector entries_;
};

/// Matrix-vector product.
ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// <u|v> (conjugate-linear in u).
Complex inner(std::span<const Complex> u, std::span<const Complex> v);

/// <v|M|v>.
Complex expectation(const ComplexMatrix& m, std::span<const Complex> v);

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m);

}  // namespace fluctum
