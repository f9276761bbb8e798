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

#include "photonic/photonic_lift.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "photonic/matrix_functions.hpp"

namespace photonic {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

double factorial_product(const OccupationState& state) {
  double product = 1.0;
  for (std::uint32_t count : state.occupations()) {
    for (std::uint32_t k = 2; k <= count; ++k) product *= static_cast<double>(k);
  }
  return product;
}

}  // namespace

LiftedUnitary lift_unitary_expansion(const ComplexMatrix& s, std::size_t photons) {
  require_square(s, "lift_unitary_expansion");
  const std::size_t modes = s.rows();

  std::vector<FockBasis> layers;
  layers.reserve(photons + 1);
  for (std::size_t t = 0; t <= photons; ++t) layers.emplace_back(modes, t);
  const FockBasis& basis = layers.back();

  std::vector<double> factorials;
  factorials.reserve(basis.size());
  for (const OccupationState& state : basis) factorials.push_back(factorial_product(state));

  // The amplitudes are coefficients of the monomials prod_j (a^dagger_j)^{p_j};
  // applied to the vacuum each monomial is sqrt(p!) |p>. Folding every ladder
  // factor into one sqrt(p! / q!) at the end keeps phi(I) exactly I.
  ComplexMatrix u(basis.size(), basis.size());
  std::vector<Complex> amplitudes;
  std::vector<Complex> next;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const OccupationState& input = basis[col];
    amplitudes.assign(1, Complex(1.0, 0.0));
    std::size_t layer = 0;
    for (std::size_t k = 0; k < modes; ++k) {
      for (std::uint32_t rep = 0; rep < input[k]; ++rep) {
        const FockBasis& from = layers[layer];
        const FockBasis& to = layers[layer + 1];
        next.assign(to.size(), Complex{});
        for (std::size_t idx = 0; idx < from.size(); ++idx) {
          const Complex amp = amplitudes[idx];
          if (amp == Complex{}) continue;
          for (std::size_t j = 0; j < modes; ++j) {
            const Complex weight = s(j, k);
            if (weight == Complex{}) continue;
            const LadderResult raised = apply_creation(from[idx], j);
            next[to.index(*raised.state)] += amp * weight;
          }
        }
        amplitudes.swap(next);
        ++layer;
      }
    }
    for (std::size_t row = 0; row < basis.size(); ++row) {
      if (amplitudes[row] == Complex{}) continue;
      u(row, col) = amplitudes[row] * std::sqrt(factorials[row] / factorials[col]);
    }
  }
  return {basis, std::move(u)};
}

ComplexMatrix repeated_submatrix(const ComplexMatrix& s, const OccupationState& p, const OccupationState& q) {
  require_square(s, "repeated_submatrix");
  if (p.modes() != s.rows() || q.modes() != s.rows() || p.photons() != q.photons()) {
    throw std::invalid_argument("repeated_submatrix: states " + p.to_string() + ", " + q.to_string() +
                                " do not match the matrix or each other");
  }
  const std::size_t n = p.photons();
  std::vector<std::size_t> rows, cols;
  rows.reserve(n);
  cols.reserve(n);
  for (std::size_t k = 0; k < s.rows(); ++k) {
    rows.insert(rows.end(), p[k], k);
    cols.insert(cols.end(), q[k], k);
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = s(rows[i], cols[j]);
  return out;
}

LiftedUnitary lift_unitary_permanent(const ComplexMatrix& s, std::size_t photons) {
  require_square(s, "lift_unitary_permanent");
  if (photons > kMaxPermanentSize) {
    throw std::length_error("lift_unitary_permanent: photon number exceeds the permanent size limit");
  }
  FockBasis basis(s.rows(), photons);
  ComplexMatrix u(basis.size(), basis.size());
  if (photons == 0) {
    u(0, 0) = 1.0;
    return {std::move(basis), std::move(u)};
  }

  std::vector<double> factorials;
  factorials.reserve(basis.size());
  for (const OccupationState& state : basis) factorials.push_back(factorial_product(state));

  for (std::size_t row = 0; row < basis.size(); ++row) {
    for (std::size_t col = 0; col < basis.size(); ++col) {
      u(row, col) = permanent(repeated_submatrix(s, basis[row], basis[col])) / std::sqrt(factorials[row] * factorials[col]);
    }
  }
  return {std::move(basis), std::move(u)};
}

LiftedHamiltonian lift_hamiltonian(const ComplexMatrix& h_s, std::size_t photons, double hermitian_tol) {
  require_square(h_s, "lift_hamiltonian");
  const double residual = hermiticity_residual(h_s);
  if (!(residual <= hermitian_tol)) {
    throw std::domain_error("lift_hamiltonian: H_S is not Hermitian (||H - H^dagger||_F = " +
                            std::to_string(residual) + ")");
  }
  const std::size_t modes = h_s.rows();
  FockBasis basis(modes, photons);
  ComplexMatrix h_u(basis.size(), basis.size());

  for (std::size_t col = 0; col < basis.size(); ++col) {
    const OccupationState& q = basis[col];
    Complex diagonal{};
    for (std::size_t l = 0; l < modes; ++l) {
      if (q[l] == 0) continue;
      diagonal += static_cast<double>(q[l]) * h_s(l, l);
      const LadderResult lowered = apply_annihilation(q, l);
      for (std::size_t j = 0; j < modes; ++j) {
        if (j == l) continue;
        const LadderResult moved = apply_creation(*lowered.state, j);
        h_u(basis.index(*moved.state), col) += lowered.coefficient * moved.coefficient * h_s(j, l);
      }
    }
    h_u(col, col) = diagonal;
  }
  return {std::move(basis), std::move(h_u)};
}

Complex hamiltonian_element(const ComplexMatrix& h_s, const OccupationState& p, const OccupationState& q) {
  require_square(h_s, "hamiltonian_element");
  if (p.modes() != h_s.rows()) {
    throw std::invalid_argument("hamiltonian_element: state mode count does not match H_S");
  }
  const PhotonMove move = photon_move_relation(p, q);
  switch (move.kind) {
    case PhotonMove::Kind::identical: {
      Complex sum{};
      for (std::size_t l = 0; l < q.modes(); ++l) sum += static_cast<double>(q[l]) * h_s(l, l);
      return sum;
    }
    case PhotonMove::Kind::one_move: {
      const double weight = std::sqrt((static_cast<double>(q[move.to]) + 1.0) * static_cast<double>(q[move.from]));
      return weight * h_s(move.to, move.from);
    }
    case PhotonMove::Kind::far:
      break;
  }
  return Complex{};
}

double global_phase_lift(double phase, std::size_t photons) {
  const double reduced = std::remainder(static_cast<double>(photons) * phase, 2.0 * std::numbers::pi);
  return reduced <= -std::numbers::pi ? std::numbers::pi : reduced;
}

std::vector<double> output_distribution(const LiftedUnitary& lifted, const OccupationState& input) {
  const std::size_t col = lifted.basis.index(input);
  std::vector<double> probabilities(lifted.basis.size());
  for (std::size_t row = 0; row < probabilities.size(); ++row) probabilities[row] = std::norm(lifted.matrix(row, col));
  return probabilities;
}

}  // namespace photonic
