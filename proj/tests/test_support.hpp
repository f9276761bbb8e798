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

#ifndef PHOTONIC_TESTS_TEST_SUPPORT_HPP
#define PHOTONIC_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "photonic/complex_matrix.hpp"

namespace photonic::testing {

inline ComplexMatrix random_complex(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  ComplexMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const double re = uniform(rng);
      a(r, c) = Complex(re, uniform(rng));
    }
  return a;
}

/// Permanent straight from the definition: sum over all k! permutations.
inline Complex permanent_by_definition(const ComplexMatrix& a) {
  std::vector<std::size_t> sigma(a.rows());
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total{};
  do {
    Complex product = 1.0;
    for (std::size_t i = 0; i < sigma.size(); ++i) product *= a(i, sigma[i]);
    total += product;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

/// Truncated Taylor series of e^A; only for small ||A||.
inline ComplexMatrix exp_by_taylor(const ComplexMatrix& a, int terms = 40) {
  ComplexMatrix sum = ComplexMatrix::identity(a.rows());
  ComplexMatrix term = ComplexMatrix::identity(a.rows());
  for (int k = 1; k < terms; ++k) {
    term = term * a;
    term *= 1.0 / k;
    sum += term;
  }
  return sum;
}

inline double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

}  // namespace photonic::testing

#endif  // PHOTONIC_TESTS_TEST_SUPPORT_HPP
