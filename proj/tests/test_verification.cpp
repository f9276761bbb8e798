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

#include <gtest/gtest.h>

#include "photonic/matrix_functions.hpp"
#include "photonic/photonic_lift.hpp"
#include "photonic/verification.hpp"

namespace photonic {
namespace {

const ComplexMatrix kWorkedHs{{0.46008, -1.11072}, {-1.11072, 2.68152}};

TEST(CheckDiagram, WorkedExamplePasses) {
  // The printed H_S is itself exactly Hermitian, so the diagram holds for it
  // regardless of its five-decimal rounding.
  const DiagramReport report = check_diagram(kWorkedHs, 2, 1e-8);
  EXPECT_TRUE(report.passed);
  EXPECT_LE(report.residual_diagram, 1e-8);
  EXPECT_EQ(report.sparsity_violations, 0u);
  EXPECT_EQ(report.modes, 2u);
  EXPECT_EQ(report.photons, 2u);
}

TEST(CheckDiagram, ZeroHamiltonianIsExact) {
  const DiagramReport report = check_diagram(ComplexMatrix::zero(3, 3), 3, 1e-12);
  EXPECT_EQ(report.residual_diagram, 0.0);
  EXPECT_TRUE(report.passed);
}

TEST(CheckDiagram, RandomHermitianSweep) {
  Rng rng(kDefaultSeed);
  for (int seed = 0; seed < 100; ++seed) {
    const DiagramReport report = check_diagram(random_hermitian(3, rng), 2, 1e-8);
    EXPECT_TRUE(report.passed) << format_record(report.to_record());
  }
}

TEST(CheckDiagram, TightToleranceFailsWithoutThrowing) {
  Rng rng(12);
  const DiagramReport report = check_diagram(random_hermitian(4, rng), 3, 0.0);
  EXPECT_FALSE(report.passed);
}

TEST(CheckDiagram, RejectsNonHermitian) {
  ComplexMatrix broken = kWorkedHs;
  broken(0, 1) = 5.0;
  EXPECT_THROW(check_diagram(broken, 2, 1e-8), std::domain_error);
}

TEST(CheckDiagram, Deterministic) {
  Rng a(9), b(9);
  const DiagramReport first = check_diagram(random_hermitian(3, a), 3, 1e-8);
  const DiagramReport second = check_diagram(random_hermitian(3, b), 3, 1e-8);
  EXPECT_EQ(format_record(first.to_record()), format_record(second.to_record()));
  EXPECT_EQ(first.residual_diagram, second.residual_diagram);
}

TEST(CheckHomomorphism, Examples) {
  Rng rng(6);
  const ComplexMatrix s = random_unitary(3, rng);
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_TRUE(check_homomorphism(s, s.adjoint(), n, 1e-10).passed);
    EXPECT_LE(check_homomorphism(ComplexMatrix::identity(3), s, n, 1e-10).residual, 1e-15);
  }
  const ComplexMatrix s1 = random_unitary(2, rng);
  const ComplexMatrix s2 = random_unitary(2, rng);
  EXPECT_LE(check_homomorphism(s1, s2, 2, 1e-10).residual, 1e-10);
}

TEST(CheckHomomorphism, Errors) {
  EXPECT_THROW(check_homomorphism(ComplexMatrix::identity(2), ComplexMatrix::identity(3), 2, 1e-9),
               std::invalid_argument);
  EXPECT_THROW(check_homomorphism(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}, ComplexMatrix::identity(2), 2, 1e-9),
               std::domain_error);
}

TEST(CheckGlobalPhase, Holds) {
  Rng rng(10);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  for (std::size_t n = 0; n <= 3; ++n) {
    const GlobalPhaseReport report = check_global_phase(random_unitary(3, rng), angle(rng), n, 1e-10);
    EXPECT_TRUE(report.passed) << format_record(report.to_record());
  }
}

TEST(CheckDerivativeOracle, WorkedExample) {
  EXPECT_LE(check_derivative_oracle(kWorkedHs, 2, 1e-4), 1e-6);
}

TEST(CheckDerivativeOracle, ZeroHamiltonian) {
  EXPECT_EQ(check_derivative_oracle(ComplexMatrix::zero(2, 2), 3, 1e-3), 0.0);
  EXPECT_EQ(check_derivative_oracle(ComplexMatrix::zero(3, 3), 1, 1e-5), 0.0);
}

TEST(CheckDerivativeOracle, SecondOrderConvergence) {
  Rng rng(13);
  const ComplexMatrix h = random_hermitian(2, rng);
  const double coarse = check_derivative_oracle(h, 2, 1e-3);
  const double fine = check_derivative_oracle(h, 2, 5e-4);
  EXPECT_GT(coarse / fine, 3.5);
  EXPECT_LT(coarse / fine, 4.5);
}

TEST(CheckDerivativeOracle, StepBounds) {
  EXPECT_THROW(check_derivative_oracle(kWorkedHs, 2, 0.0), std::invalid_argument);
  EXPECT_THROW(check_derivative_oracle(kWorkedHs, 2, 1e-2), std::invalid_argument);
}

TEST(Records, Format) {
  DiagramReport report;
  report.modes = 2;
  report.photons = 3;
  report.residual_diagram = 1.5e-15;
  report.tolerance = 1e-8;
  report.passed = true;
  EXPECT_EQ(format_record(report.to_record()),
            "check=diagram m=2 n=3 residual_diagram=1.500000e-15 residual_unitarity=0.000000e+00 "
            "residual_hermiticity=0.000000e+00 sparsity_violations=0 tolerance=1.000000e-08 passed=true");
}

TEST(RunSweep, DeterministicAndPassing) {
  SweepConfig config;
  config.modes = 3;
  config.photons = 2;
  config.trials = 10;
  config.seed = 42;
  const SweepResult first = run_sweep(config);
  const SweepResult second = run_sweep(config);
  EXPECT_TRUE(first.all_passed());
  EXPECT_EQ(first.checks, 40u);
  ASSERT_EQ(first.records.size(), second.records.size());
  for (std::size_t k = 0; k < first.records.size(); ++k) {
    EXPECT_EQ(format_record(first.records[k]), format_record(second.records[k]));
  }
  config.seed = 43;
  EXPECT_NE(format_record(run_sweep(config).records.front()), format_record(first.records.front()));
}

TEST(RandomGenerators, Structure) {
  Rng rng(1);
  for (std::size_t size = 1; size <= 6; ++size) {
    EXPECT_EQ(hermiticity_residual(random_hermitian(size, rng)), 0.0);
    EXPECT_TRUE(is_unitary(random_unitary(size, rng), 1e-12));
  }
}

}  // namespace
}  // namespace photonic
