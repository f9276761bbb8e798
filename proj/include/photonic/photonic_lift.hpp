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

#ifndef PHOTONIC_PHOTONIC_LIFT_HPP
#define PHOTONIC_PHOTONIC_LIFT_HPP

#include <cstddef>
#include <vector>

#include "photonic/complex_matrix.hpp"
#include "photonic/fock_basis.hpp"

namespace photonic {

/// Hermiticity tolerance lift_hamiltonian applies unless told otherwise.
inline constexpr double kDefaultHermitianTol = 1e-9;

/// n-photon evolution U = phi(S). matrix(p, q) = <p|U|q>, indexed by `basis`.
struct LiftedUnitary {
  FockBasis basis;
  ComplexMatrix matrix;
};

/// n-photon effective Hamiltonian H_U = dphi(H_S), indexed by `basis`.
struct LiftedHamiltonian {
  FockBasis basis;
  ComplexMatrix matrix;
};

/**
 * phi(S) by expanding prod_k (sum_j S_jk a^dagger_j)^{q_k} / sqrt(q_k!) on the
 * vacuum for every input state q.
 *
 * The partial products are kept as coefficient vectors over the Fock basis
 * with the current photon count, one creation factor at a time, so one column
 * costs O(m * sum_t M_t) with M_t the t-photon dimension. The ladder factors
 * are applied once per entry as sqrt(p! / q!).
 *
 * Throws std::invalid_argument for non-square S and std::overflow_error when
 * the basis dimension overflows.
 */
LiftedUnitary lift_unitary_expansion(const ComplexMatrix& s, std::size_t photons);

/**
 * phi(S) from permanents: U_pq = per(S[p|q]) / sqrt(prod_k p_k! prod_k q_k!),
 * where S[p|q] repeats row j of S p_j times and column l q_l times.
 *
 * Throws std::length_error when the photon number exceeds kMaxPermanentSize.
 */
LiftedUnitary lift_unitary_permanent(const ComplexMatrix& s, std::size_t photons);

/// The n x n matrix S[p|q] used by lift_unitary_permanent.
ComplexMatrix repeated_submatrix(const ComplexMatrix& s, const OccupationState& p, const OccupationState& q);

/**
 * dphi(H_S): <p| sum_{j,l} H_S(j,l) a^dagger_j a_l |q>.
 *
 * Only single-photon moves contribute. Each column q is built from the modes
 * l with q_l > 0:
 *   diagonal         sum_l q_l H_S(l,l)
 *   move l -> j      sqrt((q_j + 1) q_l) H_S(j,l)
 * and every other entry stays exactly zero.
 *
 * Throws std::domain_error if H_S is not Hermitian within `hermitian_tol`.
 */
LiftedHamiltonian lift_hamiltonian(const ComplexMatrix& h_s, std::size_t photons,
                                   double hermitian_tol = kDefaultHermitianTol);

/// One entry <p|dphi(H_S)|q> without building the matrix.
Complex hamiltonian_element(const ComplexMatrix& h_s, const OccupationState& p, const OccupationState& q);

/// n * phi reduced to (-pi, pi]. phi(e^{i Phi} S) = e^{i n Phi} phi(S).
double global_phase_lift(double phase, std::size_t photons);

/// Output probabilities |U_pq|^2 over the basis for input state q.
std::vector<double> output_distribution(const LiftedUnitary& lifted, const OccupationState& input);

}  // namespace photonic

#endif  // PHOTONIC_PHOTONIC_LIFT_HPP
