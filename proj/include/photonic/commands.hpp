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

#ifndef PHOTONIC_COMMANDS_HPP
#define PHOTONIC_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "photonic/complex_matrix.hpp"
#include "photonic/fock_basis.hpp"
#include "photonic/verification.hpp"

namespace photonic::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,  // validation or verification failure
  kIoFailed = 2,     // missing file, unreadable or malformed input, bad flags
};

enum class LiftMethod { expansion, permanent };

struct LiftUOptions {
  std::size_t photons = 0;
  std::filesystem::path input;
  std::filesystem::path output;
  LiftMethod method = LiftMethod::expansion;
  double tol = 1e-9;
  bool paper_order = false;
};

struct LiftHOptions {
  std::size_t photons = 0;
  std::filesystem::path input;
  std::filesystem::path output;
  double tol = 1e-9;
  bool paper_order = false;
};

struct LogOptions {
  std::filesystem::path input;
  std::filesystem::path output;
  double tol = 1e-9;
};

struct VerifyOptions {
  std::optional<std::filesystem::path> input;
  std::size_t photons = 2;
  std::size_t modes = 3;  // random sweep only; a given --input fixes m
  std::size_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-8;
};

struct BasisOptions {
  std::size_t modes = 0;
  std::size_t photons = 0;
};

/**
 * Row/column order that lists the m = n = 2 basis as |20>, |02>, |11>
 * instead of the canonical |20>, |11>, |02>; feed it to permute_symmetric.
 * Throws std::invalid_argument for any other basis.
 */
std::vector<std::size_t> paper_order(const FockBasis& basis);

/// Lines "index=<k> state=(n_1,...,n_m)", one per basis state, in the order
/// given (canonical when `order` is empty).
void print_basis(const FockBasis& basis, std::ostream& out, const std::vector<std::size_t>& order = {});

struct TransitionRow {
  OccupationState output;
  double probability = 0.0;
};

/// Output distribution of two photons entering modes 1 and 2 of `s` (|11>).
std::vector<TransitionRow> two_photon_distribution(const ComplexMatrix& s);

/// (1/sqrt 2)[[1, 1], [1, -1]]
ComplexMatrix balanced_beam_splitter();

int cmd_lift_u(const LiftUOptions& options, std::ostream& out, std::ostream& err);
int cmd_lift_h(const LiftHOptions& options, std::ostream& out, std::ostream& err);
int cmd_log(const LogOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_demo_hom(std::ostream& out, std::ostream& err);
int cmd_basis(const BasisOptions& options, std::ostream& out, std::ostream& err);

}  // namespace photonic::cli

#endif  // PHOTONIC_COMMANDS_HPP
