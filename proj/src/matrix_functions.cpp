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

#include "photonic/matrix_functions.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace photonic {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMatrix to_eigen(const ComplexMatrix& a) {
  return Eigen::Map<const EigenMatrix>(a.entries().data(), static_cast<Eigen::Index>(a.rows()),
                                       static_cast<Eigen::Index>(a.cols()));
}

ComplexMatrix from_eigen(const EigenMatrix& m) {
  return ComplexMatrix(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()),
                       std::vector<Complex>(m.data(), m.data() + m.size()));
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

// V f(lambda) V^dagger for the Hermitian matrix `h`.
template <typename F>
ComplexMatrix hermitian_function(const EigenMatrix& h, F&& f) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian eigensolver did not converge");
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  Eigen::VectorXcd d(v.cols());
  for (Eigen::Index k = 0; k < d.size(); ++k) d[k] = f(solver.eigenvalues()[k]);
  const EigenMatrix out = v * d.asDiagonal() * v.adjoint();
  return from_eigen(out);
}

}  // namespace

double unitarity_residual(const ComplexMatrix& a) {
  require_square(a, "unitarity_residual");
  return frobenius_distance(a.adjoint() * a, ComplexMatrix::identity(a.rows()));
}

double hermiticity_residual(const ComplexMatrix& a) {
  require_square(a, "hermiticity_residual");
  return frobenius_distance(a, a.adjoint());
}

bool is_unitary(const ComplexMatrix& a, double tol) { return unitarity_residual(a) <= tol; }

bool is_hermitian(const ComplexMatrix& a, double tol) { return hermiticity_residual(a) <= tol; }

ComplexMatrix matrix_exponential(const ComplexMatrix& a) {
  require_square(a, "matrix_exponential");
  const EigenMatrix m = to_eigen(a);
  const double scale = std::max(1.0, m.norm());
  const double structure_tol = 8.0 * std::numeric_limits<double>::epsilon() * scale;

  const EigenMatrix skew = 0.5 * (m - m.adjoint());
  if ((m - skew).norm() <= structure_tol) {
    // A = iK with K Hermitian.
    const EigenMatrix k = Complex(0.0, -1.0) * skew;
    return hermitian_function(k, [](double lambda) { return std::polar(1.0, lambda); });
  }
  const EigenMatrix herm = 0.5 * (m + m.adjoint());
  if ((m - herm).norm() <= structure_tol) {
    return hermitian_function(herm, [](double lambda) { return Complex(std::exp(lambda), 0.0); });
  }
  return matrix_exponential_pade(a);
}

ComplexMatrix matrix_exponential_pade(const ComplexMatrix& a) {
  require_square(a, "matrix_exponential_pade");
  static constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                 1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,       1323241920.0,
                                 40840800.0,          960960.0,            16380.0,
                                 182.0,               1.0};
  static constexpr double theta13 = 5.371920351148152;

  EigenMatrix m = to_eigen(a);
  const auto n = m.rows();
  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > theta13) {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / theta13))));
    m /= std::ldexp(1.0, squarings);
  }

  const EigenMatrix ident = EigenMatrix::Identity(n, n);
  const EigenMatrix m2 = m * m;
  const EigenMatrix m4 = m2 * m2;
  const EigenMatrix m6 = m4 * m2;
  const EigenMatrix u_inner = m6 * (b[13] * m6 + b[11] * m4 + b[9] * m2);
  const EigenMatrix u = m * (u_inner + b[7] * m6 + b[5] * m4 + b[3] * m2 + b[1] * ident);
  const EigenMatrix v_inner = m6 * (b[12] * m6 + b[10] * m4 + b[8] * m2);
  const EigenMatrix v = v_inner + b[6] * m6 + b[4] * m4 + b[2] * m2 + b[0] * ident;

  EigenMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int s = 0; s < squarings; ++s) r = (r * r).eval();
  return from_eigen(r);
}

ComplexMatrix unitary_logarithm(const ComplexMatrix& q, double tol) {
  require_square(q, "unitary_logarithm");
  const double residual = unitarity_residual(q);
  if (!(residual <= tol)) {
    throw std::domain_error("unitary_logarithm: matrix is not unitary (||Q^dagger Q - I||_F = " +
                            std::to_string(residual) + ")");
  }

  // The Schur form of a normal matrix is diagonal, and the Schur vectors are
  // orthonormal even inside degenerate eigenspaces.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(Eigen::MatrixXcd(to_eigen(q)));
  if (schur.info() != Eigen::Success) throw std::runtime_error("unitary_logarithm: Schur decomposition failed");
  const Eigen::MatrixXcd& z = schur.matrixU();
  const Eigen::MatrixXcd& t = schur.matrixT();

  Eigen::VectorXcd phases(t.rows());
  for (Eigen::Index k = 0; k < t.rows(); ++k) {
    double phase = std::arg(t(k, k));
    if (phase <= -std::numbers::pi + kLogBranchSnap) phase = std::numbers::pi;
    phases[k] = phase;
  }
  EigenMatrix h = z * phases.asDiagonal() * z.adjoint();
  h = (0.5 * (h + h.adjoint())).eval();
  return from_eigen(h);
}

}  // namespace photonic
