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

#include "photonic/fock_basis.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace photonic {

OccupationState::OccupationState(std::vector<std::uint32_t> occupations)
    : occupations_(std::move(occupations)),
      photons_(std::accumulate(occupations_.begin(), occupations_.end(), std::size_t{0})) {}

OccupationState::OccupationState(std::initializer_list<std::uint32_t> occupations)
    : OccupationState(std::vector<std::uint32_t>(occupations)) {}

std::string OccupationState::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < occupations_.size(); ++k) {
    if (k != 0) out << ',';
    out << occupations_[k];
  }
  out << ')';
  return out.str();
}

std::size_t dimension(std::size_t modes, std::size_t photons) {
  if (modes == 0) throw std::invalid_argument("dimension: mode count must be at least 1");

  __extension__ using u128 = unsigned __int128;
  const u128 total = u128{modes} + u128{photons} - 1;
  const u128 k = std::min<u128>(photons, modes - 1);

  // C(total, k) built as a running product; each partial product is itself a
  // binomial coefficient, so the division is exact.
  u128 result = 1;
  for (u128 i = 1; i <= k; ++i) {
    u128 numerator;
    if (__builtin_mul_overflow(result, total - k + i, &numerator)) {
      throw std::overflow_error("dimension: C(m+n-1, n) overflows 128-bit arithmetic");
    }
    result = numerator / i;
  }
  if (result > std::numeric_limits<std::size_t>::max()) {
    throw std::overflow_error("dimension: C(m+n-1, n) does not fit in std::size_t");
  }
  return static_cast<std::size_t>(result);
}

namespace {

void enumerate_into(std::vector<std::uint32_t>& scratch, std::size_t mode, std::uint32_t remaining,
                    std::vector<OccupationState>& out) {
  if (mode + 1 == scratch.size()) {
    scratch[mode] = remaining;
    out.emplace_back(scratch);
    return;
  }
  for (std::uint32_t here = remaining + 1; here-- > 0;) {
    scratch[mode] = here;
    enumerate_into(scratch, mode + 1, remaining - here, out);
  }
}

}  // namespace

FockBasis::FockBasis(std::size_t modes, std::size_t photons) : modes_(modes), photons_(photons) {
  const std::size_t size = dimension(modes, photons);
  if (photons > std::numeric_limits<std::uint32_t>::max()) {
    throw std::overflow_error("FockBasis: photon number exceeds 32-bit occupation range");
  }

  rank_table_.assign(modes + 1, std::vector<std::size_t>(photons + 1, 0));
  rank_table_[0][0] = 1;
  for (std::size_t k = 1; k <= modes; ++k) {
    for (std::size_t r = 0; r <= photons; ++r) {
      rank_table_[k][r] = rank_table_[k - 1][r] + (r > 0 ? rank_table_[k][r - 1] : 0);
    }
  }

  states_.reserve(size);
  std::vector<std::uint32_t> scratch(modes, 0);
  enumerate_into(scratch, 0, static_cast<std::uint32_t>(photons), states_);
}

std::size_t FockBasis::index(const OccupationState& state) const {
  if (state.modes() != modes_ || state.photons() != photons_) {
    throw std::invalid_argument("FockBasis::index: state " + state.to_string() +
                                " does not belong to this basis");
  }
  std::size_t rank = 0;
  std::size_t remaining = photons_;
  for (std::size_t i = 0; i + 1 < modes_; ++i) {
    const std::size_t here = state[i];
    // States that agree on modes < i and hold more photons in mode i.
    if (remaining > here) rank += rank_table_[modes_ - i][remaining - here - 1];
    remaining -= here;
  }
  return rank;
}

FockBasis enumerate_basis(std::size_t modes, std::size_t photons) { return FockBasis(modes, photons); }

LadderResult apply_creation(const OccupationState& state, std::size_t mode) {
  if (mode >= state.modes()) throw std::invalid_argument("apply_creation: mode index out of range");
  std::vector<std::uint32_t> raised(state.occupations().begin(), state.occupations().end());
  const double coefficient = std::sqrt(static_cast<double>(raised[mode]) + 1.0);
  ++raised[mode];
  return {coefficient, OccupationState(std::move(raised))};
}

LadderResult apply_annihilation(const OccupationState& state, std::size_t mode) {
  if (mode >= state.modes()) throw std::invalid_argument("apply_annihilation: mode index out of range");
  if (state[mode] == 0) return {0.0, std::nullopt};
  std::vector<std::uint32_t> lowered(state.occupations().begin(), state.occupations().end());
  const double coefficient = std::sqrt(static_cast<double>(lowered[mode]));
  --lowered[mode];
  return {coefficient, OccupationState(std::move(lowered))};
}

PhotonMove photon_move_relation(const OccupationState& p, const OccupationState& q) {
  if (p.modes() != q.modes() || p.photons() != q.photons()) {
    throw std::invalid_argument("photon_move_relation: states " + p.to_string() + " and " +
                                q.to_string() + " are not in the same basis");
  }
  std::size_t gained = 0, lost = 0;
  std::size_t to = 0, from = 0;
  for (std::size_t k = 0; k < p.modes(); ++k) {
    const auto a = static_cast<std::int64_t>(p[k]);
    const auto b = static_cast<std::int64_t>(q[k]);
    if (a == b) continue;
    if (a == b + 1) {
      ++gained;
      to = k;
    } else if (a + 1 == b) {
      ++lost;
      from = k;
    } else {
      return {PhotonMove::Kind::far, 0, 0};
    }
    if (gained > 1 || lost > 1) return {PhotonMove::Kind::far, 0, 0};
  }
  if (gained == 0) return {PhotonMove::Kind::identical, 0, 0};
  return {PhotonMove::Kind::one_move, to, from};
}

}  // namespace photonic
