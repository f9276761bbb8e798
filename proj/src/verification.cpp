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

#include "photonic/verification.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "photonic/fock_basis.hpp"
#include "photonic/matrix_functions.hpp"
#include "photonic/photonic_lift.hpp"

namespace photonic {

namespace {

std::string real_text(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6e", x);
  return buffer;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

const Complex kI{0.0, 1.0};

}  // namespace

ComplexMatrix random_hermitian(std::size_t size, Rng& rng) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  ComplexMatrix a(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const double re = uniform(rng);
      const double im = uniform(rng);
      a(r, c) = Complex(re, im);
    }
  }
  ComplexMatrix h = a + a.adjoint();
  h *= 0.5;
  // Diagonal must be exactly real.
  for (std::size_t i = 0; i < size; ++i) h(i, i) = h(i, i).real();
  return h;
}

ComplexMatrix random_unitary(std::size_t size, Rng& rng) {
  return matrix_exponential(Complex(0.0, std::numbers::pi) * random_hermitian(size, rng));
}

std::string format_record(const Record& record) {
  std::string line;
  for (const auto& [key, value] : record) {
    if (!line.empty()) line += ' ';
    line += key;
    line += '=';
    line += value;
  }
  return line;
}

Record DiagramReport::to_record() const {
  return {{"check", "diagram"},
          {"m", std::to_string(modes)},
          {"n", std::to_string(photons)},
          {"residual_diagram", real_text(residual_diagram)},
          {"residual_unitarity", real_text(residual_unitarity)},
          {"residual_hermiticity", real_text(residual_hermiticity)},
          {"sparsity_violations", std::to_string(sparsity_violations)},
          {"tolerance", real_text(tolerance)},
          {"passed", bool_text(passed)}};
}

Record HomomorphismReport::to_record() const {
  return {{"check", "homomorphism"},       {"m", std::to_string(modes)},     {"n", std::to_string(photons)},
          {"residual", real_text(residual)}, {"tolerance", real_text(tolerance)}, {"passed", bool_text(passed)}};
}

Record GlobalPhaseReport::to_record() const {
  return {{"check", "global_phase"},      {"m", std::to_string(modes)},
          {"n", std::to_string(photons)}, {"phase", real_text(phase)},
          {"residual", real_text(residual)}, {"tolerance", real_text(tolerance)},
          {"passed", bool_text(passed)}};
}

Record MethodReport::to_record() const {
  return {{"check", "methods"},            {"m", std::to_string(modes)},     {"n", std::to_string(photons)},
          {"residual", real_text(residual)}, {"tolerance", real_text(tolerance)}, {"passed", bool_text(passed)}};
}

DiagramReport check_diagram(const ComplexMatrix& h_s, std::size_t photons, double tol) {
  if (!h_s.is_square()) throw std::invalid_argument("check_diagram: H_S is not square");
  const double h_residual = hermiticity_residual(h_s);
  if (!(h_residual <= tol)) {
    throw std::domain_error("check_diagram: H_S is not Hermitian (||H - H^dagger||_F = " + real_text(h_residual) +
                            ")");
  }

  const LiftedUnitary group_path = lift_unitary_expansion(matrix_exponential(kI * h_s), photons);
  const LiftedHamiltonian algebra = lift_hamiltonian(h_s, photons, tol);
  const ComplexMatrix algebra_path = matrix_exponential(kI * algebra.matrix);

  DiagramReport report;
  report.modes = h_s.rows();
  report.photons = photons;
  report.tolerance = tol;
  report.residual_diagram = frobenius_distance(group_path.matrix, algebra_path);
  report.residual_unitarity = unitarity_residual(group_path.matrix);
  report.residual_hermiticity = hermiticity_residual(algebra.matrix);

  const FockBasis& basis = algebra.basis;
  for (std::size_t p = 0; p < basis.size(); ++p) {
    for (std::size_t q = 0; q < basis.size(); ++q) {
      if (algebra.matrix(p, q) == Complex{}) continue;
      if (photon_move_relation(basis[p], basis[q]).kind == PhotonMove::Kind::far) ++report.sparsity_violations;
    }
  }
  report.passed = report.residual_diagram <= tol && report.residual_unitarity <= tol &&
                  report.residual_hermiticity <= tol && report.sparsity_violations == 0;
  return report;
}

HomomorphismReport check_homomorphism(const ComplexMatrix& s1, const ComplexMatrix& s2, std::size_t photons,
                                      double tol) {
  if (!s1.is_square() || s1.rows() != s2.rows() || s1.cols() != s2.cols()) {
    throw std::invalid_argument("check_homomorphism: S1 and S2 must be square and of equal size");
  }
  if (!is_unitary(s1, tol) || !is_unitary(s2, tol)) {
    throw std::domain_error("check_homomorphism: inputs must be unitary within tolerance");
  }
  const ComplexMatrix composed = lift_unitary_expansion(s2 * s1, photons).matrix;
  const ComplexMatrix product =
      lift_unitary_expansion(s2, photons).matrix * lift_unitary_expansion(s1, photons).matrix;

  HomomorphismReport report;
  report.modes = s1.rows();
  report.photons = photons;
  report.tolerance = tol;
  report.residual = frobenius_distance(composed, product);
  report.passed = report.residual <= tol;
  return report;
}

GlobalPhaseReport check_global_phase(const ComplexMatrix& s, double phase, std::size_t photons, double tol) {
  const ComplexMatrix shifted = lift_unitary_expansion(std::polar(1.0, phase) * s, photons).matrix;
  const ComplexMatrix expected =
      std::polar(1.0, global_phase_lift(phase, photons)) * lift_unitary_expansion(s, photons).matrix;

  GlobalPhaseReport report;
  report.modes = s.rows();
  report.photons = photons;
  report.phase = phase;
  report.tolerance = tol;
  report.residual = frobenius_distance(shifted, expected);
  report.passed = report.residual <= tol;
  return report;
}

MethodReport check_methods(const ComplexMatrix& s, std::size_t photons, double tol) {
  MethodReport report;
  report.modes = s.rows();
  report.photons = photons;
  report.tolerance = tol;
  report.residual =
      frobenius_distance(lift_unitary_expansion(s, photons).matrix, lift_unitary_permanent(s, photons).matrix);
  report.passed = report.residual <= tol;
  return report;
}

double check_derivative_oracle(const ComplexMatrix& h_s, std::size_t photons, double h) {
  if (!(h > 0.0 && h <= 1e-3)) throw std::invalid_argument("check_derivative_oracle: step must be in (0, 1e-3]");
  const ComplexMatrix forward = lift_unitary_expansion(matrix_exponential(Complex(0.0, h) * h_s), photons).matrix;
  const ComplexMatrix backward = lift_unitary_expansion(matrix_exponential(Complex(0.0, -h) * h_s), photons).matrix;
  ComplexMatrix difference = forward - backward;
  difference *= 1.0 / (2.0 * h);
  const ComplexMatrix generator = kI * lift_hamiltonian(h_s, photons).matrix;
  return frobenius_distance(difference, generator);
}

SweepResult run_sweep(const SweepConfig& config) {
  Rng rng(config.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  SweepResult result;
  auto add = [&result](std::size_t trial, Record record, bool passed) {
    record.insert(record.begin() + 1, {"trial", std::to_string(trial)});
    result.records.push_back(std::move(record));
    ++result.checks;
    if (!passed) ++result.failures;
  };

  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const ComplexMatrix h_s = random_hermitian(config.modes, rng);
    const DiagramReport diagram = check_diagram(h_s, config.photons, config.tol);
    add(trial, diagram.to_record(), diagram.passed);

    const ComplexMatrix s1 = random_unitary(config.modes, rng);
    const ComplexMatrix s2 = random_unitary(config.modes, rng);
    const HomomorphismReport hom = check_homomorphism(s1, s2, config.photons, config.tol);
    add(trial, hom.to_record(), hom.passed);

    const GlobalPhaseReport phase = check_global_phase(s1, angle(rng), config.photons, config.tol);
    add(trial, phase.to_record(), phase.passed);

    if (config.photons <= kMaxPermanentSize) {
      const MethodReport methods = check_methods(s2, config.photons, config.tol);
      add(trial, methods.to_record(), methods.passed);
    }
  }
  return result;
}

}  // namespace photonic
