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

#ifndef PHOTONIC_MATRIX_FUNCTIONS_HPP
#define PHOTONIC_MATRIX_FUNCTIONS_HPP

#include <cstddef>

#include "photonic/complex_matrix.hpp"

namespace photonic {

/// Largest matrix accepted by permanent().
inline constexpr std::size_t kMaxPermanentSize = 30;

/// ||A^dagger A - I||_F <= tol. Throws std::invalid_argument if A is not square.
bool is_unitary(const ComplexMatrix& a, double tol);

/// ||A - A^dagger||_F <= tol. Throws std::invalid_argument if A is not square.
bool is_hermitian(const ComplexMatrix& a, double tol);

double unitarity_residual(const ComplexMatrix& a);
double hermiticity_residual(const ComplexMatrix& a);

/**
 * e^A.
 *
 * Hermitian and skew-Hermitian inputs (to within a few ulps of ||A||) go
 * through a unitary eigendecomposition, so e^{iH} for Hermitian H is unitary
 * to rounding. Everything else uses scaling and squaring with the degree-13
 * diagonal Pade approximant.
 */
ComplexMatrix matrix_exponential(const ComplexMatrix& a);

/// Scaling-and-squaring Pade path only, regardless of structure.
ComplexMatrix matrix_exponential_pade(const ComplexMatrix& a);

/**
 * Hermitian H with e^{iH} = Q for unitary Q, i.e. H = -i ln Q.
 *
 * Eigenphases are taken in (-pi, pi]. An eigenvalue at -1 maps to +pi; values
 * whose phase lies within kLogBranchSnap of -pi are treated as sitting on the
 * cut and also map to +pi.
 *
 * Throws std::domain_error if Q is not unitary within tol.
 */
ComplexMatrix unitary_logarithm(const ComplexMatrix& q, double tol);

inline constexpr double kLogBranchSnap = 1e-12;

/**
 * per(A) by Ryser's inclusion-exclusion formula with Gray-code subset order,
 * O(2^k k) for a k x k matrix. Throws std::invalid_argument for non-square
 * input and std::length_error for k > kMaxPermanentSize.
 */
Complex permanent(const ComplexMatrix& a);

}  // namespace photonic

#endif  // PHOTONIC_MATRIX_FUNCTIONS_HPP
