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

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "photonic/commands.hpp"

using namespace photonic::cli;

int main(int argc, char** argv) {
  CLI::App app{"Lift single-photon linear optics (S, H_S) to n photons (U, H_U) and check the exp/lift diagram"};
  app.require_subcommand(1);

  const std::map<std::string, LiftMethod> methods{{"expansion", LiftMethod::expansion},
                                                   {"permanent", LiftMethod::permanent}};

  LiftUOptions lift_u;
  auto* lift_u_cmd = app.add_subcommand("lift-u", "Multi-photon unitary U = phi(S)");
  lift_u_cmd->add_option("--photons", lift_u.photons, "Photon number n")->required();
  lift_u_cmd->add_option("--input", lift_u.input, "Scattering matrix S (m x m)")->required();
  lift_u_cmd->add_option("--output", lift_u.output, "Where to write U")->required();
  lift_u_cmd->add_option("--method", lift_u.method, "expansion or permanent")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  lift_u_cmd->add_option("--tol", lift_u.tol, "Unitarity tolerance on S");
  lift_u_cmd->add_flag("--paper-order", lift_u.paper_order, "Order m=n=2 output as |20>, |02>, |11>");

  LiftHOptions lift_h;
  auto* lift_h_cmd = app.add_subcommand("lift-h", "Multi-photon Hamiltonian H_U = dphi(H_S)");
  lift_h_cmd->add_option("--photons", lift_h.photons, "Photon number n")->required();
  lift_h_cmd->add_option("--input", lift_h.input, "Hermitian H_S (m x m)")->required();
  lift_h_cmd->add_option("--output", lift_h.output, "Where to write H_U")->required();
  lift_h_cmd->add_option("--tol", lift_h.tol, "Hermiticity tolerance on H_S");
  lift_h_cmd->add_flag("--paper-order", lift_h.paper_order, "Order m=n=2 output as |20>, |02>, |11>");

  LogOptions log;
  auto* log_cmd = app.add_subcommand("log", "Principal Hermitian logarithm H = -i ln(Q) of a unitary");
  log_cmd->add_option("--input", log.input, "Unitary Q")->required();
  log_cmd->add_option("--output", log.output, "Where to write H")->required();
  log_cmd->add_option("--tol", log.tol, "Unitarity tolerance on Q");

  VerifyOptions verify;
  std::string verify_input;
  auto* verify_cmd = app.add_subcommand("verify", "Check phi(exp(iH_S)) = exp(i dphi(H_S)) and related laws");
  verify_cmd->add_option("--input", verify_input, "Hermitian H_S; omit for a random sweep");
  verify_cmd->add_option("--photons", verify.photons, "Photon number n")->required();
  verify_cmd->add_option("--modes", verify.modes, "Mode count for random sweeps");
  verify_cmd->add_option("--trials", verify.trials, "Random trials");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");
  verify_cmd->add_option("--tol", verify.tol, "Tolerance for every residual");

  auto* demo_cmd = app.add_subcommand("demo-hom", "Hong-Ou-Mandel: |11> through a balanced beam splitter");

  BasisOptions basis;
  auto* basis_cmd = app.add_subcommand("basis", "List the Fock basis in canonical order");
  basis_cmd->add_option("--modes", basis.modes, "Mode count m")->required();
  basis_cmd->add_option("--photons", basis.photons, "Photon number n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kIoFailed;
  }

  if (!verify_input.empty()) verify.input = verify_input;

  if (*lift_u_cmd) return cmd_lift_u(lift_u, std::cout, std::cerr);
  if (*lift_h_cmd) return cmd_lift_h(lift_h, std::cout, std::cerr);
  if (*log_cmd) return cmd_log(log, std::cout, std::cerr);
  if (*verify_cmd) return cmd_verify(verify, std::cout, std::cerr);
  if (*demo_cmd) return cmd_demo_hom(std::cout, std::cerr);
  if (*basis_cmd) return cmd_basis(basis, std::cout, std::cerr);
  return kIoFailed;
}
