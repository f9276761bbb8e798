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

#ifndef PHOTONIC_FOCK_BASIS_HPP
#define PHOTONIC_FOCK_BASIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace photonic {

/**
 * Photon count per mode, |n_1 n_2 ... n_m>. Modes are indexed from 0.
 */
class OccupationState {
public:
  OccupationState() = default;
  explicit OccupationState(std::vector<std::uint32_t> occupations);
  OccupationState(std::initializer_list<std::uint32_t> occupations);

  std::size_t modes() const { return occupations_.size(); }
  std::size_t photons() const { return photons_; }
  std::uint32_t operator[](std::size_t mode) const { return occupations_[mode]; }
  std::span<const std::uint32_t> occupations() const { return occupations_; }

  std::string to_string() const;

  friend bool operator==(const OccupationState&, const OccupationState&) = default;

private:
  std::vector<std::uint32_t> occupations_;
  std::size_t photons_ = 0;
};

/// Result of a ladder operator acting on a basis state. `state` is empty when
/// an annihilator hits an unoccupied mode; the coefficient is then zero.
struct LadderResult {
  double coefficient = 0.0;
  std::optional<OccupationState> state;
};

/// Number of ways to put `photons` indistinguishable photons into `modes`
/// modes, C(m+n-1, n). Throws std::invalid_argument for zero modes and
/// std::overflow_error if the value does not fit in std::size_t.
std::size_t dimension(std::size_t modes, std::size_t photons);

/**
 * The n-photon, m-mode Fock basis in reverse-lexicographic order: states with
 * more photons in the lower modes come first, so for m = n = 2 the order is
 * |20>, |11>, |02>.
 *
 * index() is a combinatorial rank (a sum of binomials), O(m) per lookup.
 */
class FockBasis {
public:
  FockBasis(std::size_t modes, std::size_t photons);

  std::size_t modes() const { return modes_; }
  std::size_t photons() const { return photons_; }
  std::size_t size() const { return states_.size(); }

  const OccupationState& operator[](std::size_t k) const { return states_[k]; }
  const std::vector<OccupationState>& states() const { return states_; }

  /// Position of `state` in this basis. Throws std::invalid_argument if the
  /// state has the wrong mode count or photon number.
  std::size_t index(const OccupationState& state) const;

  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

private:
  std::size_t modes_;
  std::size_t photons_;
  std::vector<OccupationState> states_;
  // rank_table_[k][r] = number of ways to place r photons into k modes
  std::vector<std::vector<std::size_t>> rank_table_;
};

FockBasis enumerate_basis(std::size_t modes, std::size_t photons);

/// a^dagger_j |state>
LadderResult apply_creation(const OccupationState& state, std::size_t mode);

/// a_l |state>
LadderResult apply_annihilation(const OccupationState& state, std::size_t mode);

/// How two states of the same basis are connected by single-photon moves.
struct PhotonMove {
  enum class Kind { identical, one_move, far };
  Kind kind = Kind::far;
  // Valid only for one_move: p is q with one photon moved from mode `from`
  // to mode `to`.
  std::size_t to = 0;
  std::size_t from = 0;

  friend bool operator==(const PhotonMove&, const PhotonMove&) = default;
};

PhotonMove photon_move_relation(const OccupationState& p, const OccupationState& q);

}  // namespace photonic

#endif  // PHOTONIC_FOCK_BASIS_HPP
