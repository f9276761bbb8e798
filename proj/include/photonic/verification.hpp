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

#ifndef PHOTONIC_VERIFICATION_HPP
#define PHOTONIC_VERIFICATION_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "photonic/complex_matrix.hpp"

namespace photonic {

inline constexpr std::uint64_t kDefaultSeed = 42;

using Rng = std::mt19937_64;

/// (A + A^dagger) / 2 for A with real and imaginary parts uniform in [-1, 1].
ComplexMatrix random_hermitian(std::size_t size, Rng& rng);

/// e^{i pi H} for H = random_hermitian(size, rng).
ComplexMatrix random_unitary(std::size_t size, Rng& rng);

/// Ordered key=value pairs; rendered as one line by format_record().
using Record = std::vector<std::pair<std::string, std::string>>;

std::string format_record(const Record& record);

/**
 * Both paths around the exp / phi / dphi square for one H_S:
 *   residual_diagram      ||phi(e^{iH_S}) - e^{i dphi(H_S)}||_F
 *   residual_unitarity    ||phi(e^{iH_S})^dagger phi(e^{iH_S}) - I||_F
 *   residual_hermiticity  ||dphi(H_S) - dphi(H_S)^dagger||_F
 *   sparsity_violations   nonzero entries of dphi(H_S) between states more
 *                         than one photon move apart
 */
struct DiagramReport {
  std::size_t modes = 0;
  std::size_t photons = 0;
  double residual_diagram = 0.0;
  double residual_unitarity = 0.0;
  double residual_hermiticity = 0.0;
  std::size_t sparsity_violations = 0;
  bool passed = false;
  double tolerance = 0.0;

  Record to_record() const;
};

/// Throws std::domain_error if H_S is not Hermitian within tol.
DiagramReport check_diagram(const ComplexMatrix& h_s, std::size_t photons, double tol);

struct HomomorphismReport {
  std::size_t modes = 0;
  std::size_t photons = 0;
  double residual = 0.0;  // ||phi(S2 S1) - phi(S2) phi(S1)||_F
  bool passed = false;
  double tolerance = 0.0;

  Record to_record() const;
};

/// Throws std::invalid_argument on a size mismatch and std::domain_error if
/// either input is not unitary within tol.
HomomorphismReport check_homomorphism(const ComplexMatrix& s1, const ComplexMatrix& s2, std::size_t photons,
                                      double tol);

struct GlobalPhaseReport {
  std::size_t modes = 0;
  std::size_t photons = 0;
  double phase = 0.0;
  double residual = 0.0;  // ||phi(e^{i Phi} S) - e^{i n Phi} phi(S)||_F
  bool passed = false;
  double tolerance = 0.0;

  Record to_record() const;
};

GlobalPhaseReport check_global_phase(const ComplexMatrix& s, double phase, std::size_t photons, double tol);

struct MethodReport {
  std::size_t modes = 0;
  std::size_t photons = 0;
  double residual = 0.0;  // ||expansion - permanent||_F
  bool passed = false;
  double tolerance = 0.0;

  Record to_record() const;
};

MethodReport check_methods(const ComplexMatrix& s, std::size_t photons, double tol);

/**
 * ||(phi(e^{ihH_S}) - phi(e^{-ihH_S})) / 2h - i dphi(H_S)||_F.
 *
 * The central difference is second order, so the residual shrinks like h^2
 * until rounding (~eps / h) takes over. Requires 0 < h <= 1e-3.
 */
double check_derivative_oracle(const ComplexMatrix& h_s, std::size_t photons, double h);

struct SweepConfig {
  std::size_t modes = 3;
  std::size_t photons = 2;
  std::size_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-8;
};

struct SweepResult {
  std::vector<Record> records;
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool all_passed() const { return failures == 0; }
};

/// Per trial: diagram, homomorphism, global phase and method equivalence on
/// freshly drawn inputs. Deterministic for a fixed config.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace photonic

#endif  // PHOTONIC_VERIFICATION_HPP
