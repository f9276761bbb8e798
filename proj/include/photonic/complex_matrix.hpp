/*
 * Copyright 2026 The photonic-lift Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PHOTONIC_COMPLEX_MATRIX_HPP
#define PHOTONIC_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace photonic {

using Complex = std::complex<double>;

/**
 * Dense row-major complex matrix. Dimensions are at least 1x1 and every entry
 * is finite; the constructors and set() reject anything else.
 */
class ComplexMatrix {
public:
  /// rows x cols zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t size);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  // Unchecked write access for construction loops; finiteness of the result
  // is the writer's responsibility.
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

double frobenius_norm(const ComplexMatrix& a);

/// ||a - b||_F; throws std::invalid_argument on a shape mismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// a*b - b*a
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Copy with rows and columns reordered: result(i, j) = a(order[i], order[j]).
ComplexMatrix permute_symmetric(const ComplexMatrix& a, std::span<const std::size_t> order);

}  // namespace photonic

#endif  // PHOTONIC_COMPLEX_MATRIX_HPP
