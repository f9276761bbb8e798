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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "photonic/matrix_functions.hpp"

namespace photonic {

Complex permanent(const ComplexMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("permanent: matrix is not square");
  const std::size_t k = a.rows();
  if (k > kMaxPermanentSize) {
    throw std::length_error("permanent: size " + std::to_string(k) + " exceeds limit " +
                            std::to_string(kMaxPermanentSize));
  }
  if (k == 1) return a(0, 0);

  // Ryser: per(A) = (-1)^k sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij.
  // Consecutive Gray codes differ in one column, so each row sum is updated
  // with a single addition or subtraction.
  std::vector<Complex> row_sums(k, Complex{});
  const std::uint64_t subsets = std::uint64_t{1} << k;
  std::uint64_t gray = 0;
  Complex total{};
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const auto column = static_cast<std::size_t>(std::countr_zero(step));
    const std::uint64_t bit = std::uint64_t{1} << column;
    gray ^= bit;
    const bool added = (gray & bit) != 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (added) {
        row_sums[i] += a(i, column);
      } else {
        row_sums[i] -= a(i, column);
      }
    }
    Complex product = row_sums[0];
    for (std::size_t i = 1; i < k; ++i) product *= row_sums[i];
    // (-1)^{k - |S|}
    const bool negative = ((k - static_cast<std::size_t>(std::popcount(gray))) & 1U) != 0;
    total += negative ? -product : product;
  }
  return total;
}

}  // namespace photonic
