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

#include "photonic/commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "photonic/matrix_functions.hpp"
#include "photonic/matrix_io.hpp"
#include "photonic/photonic_lift.hpp"

namespace photonic::cli {

namespace {

// Maps library exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailed;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

std::string basis_text(const FockBasis& basis, const std::vector<std::size_t>& order) {
  std::string text;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k != 0) text += ' ';
    text += basis[order.empty() ? k : order[k]].to_string();
  }
  return text;
}

std::string fixed_text(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12f", x);
  return buffer;
}

// Writes `matrix` (reordered when requested) and announces the basis.
void emit_lift(const FockBasis& basis, const ComplexMatrix& matrix, bool use_paper_order, Metadata metadata,
               const std::filesystem::path& output, std::ostream& out) {
  std::vector<std::size_t> order;
  if (use_paper_order) order = paper_order(basis);
  const ComplexMatrix written = order.empty() ? matrix : permute_symmetric(matrix, order);
  metadata["modes"] = std::to_string(basis.modes());
  metadata["photons"] = std::to_string(basis.photons());
  metadata["order"] = order.empty() ? "canonical" : "20-02-11";
  metadata["basis"] = basis_text(basis, order);
  write_matrix(written, output, metadata);
  print_basis(basis, out, order);
}

}  // namespace

std::vector<std::size_t> paper_order(const FockBasis& basis) {
  if (basis.modes() != 2 || basis.photons() != 2) {
    throw std::invalid_argument("--paper-order is only defined for two photons in two modes");
  }
  return {basis.index({2, 0}), basis.index({0, 2}), basis.index({1, 1})};
}

void print_basis(const FockBasis& basis, std::ostream& out, const std::vector<std::size_t>& order) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out << "index=" << k << " state=" << basis[order.empty() ? k : order[k]].to_string() << '\n';
  }
}

ComplexMatrix balanced_beam_splitter() {
  const double r = 1.0 / std::sqrt(2.0);
  return ComplexMatrix{{r, r}, {r, -r}};
}

std::vector<TransitionRow> two_photon_distribution(const ComplexMatrix& s) {
  if (s.rows() != 2 || s.cols() != 2) throw std::invalid_argument("two_photon_distribution: S must be 2x2");
  const LiftedUnitary lifted = lift_unitary_expansion(s, 2);
  const std::vector<double> probabilities = output_distribution(lifted, OccupationState{1, 1});
  std::vector<TransitionRow> rows;
  for (std::size_t k = 0; k < lifted.basis.size(); ++k) rows.push_back({lifted.basis[k], probabilities[k]});
  return rows;
}

int cmd_lift_u(const LiftUOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComplexMatrix s = read_matrix(options.input);
    if (!s.is_square()) throw std::invalid_argument("input matrix is not square");
    const double residual = unitarity_residual(s);
    if (!(residual <= options.tol)) {
      err << "error: input is not unitary: ||S^dagger S - I||_F = " << residual << " > tol " << options.tol << '\n';
      return static_cast<int>(kCheckFailed);
    }
    const bool expansion = options.method == LiftMethod::expansion;
    const LiftedUnitary lifted =
        expansion ? lift_unitary_expansion(s, options.photons) : lift_unitary_permanent(s, options.photons);
    emit_lift(lifted.basis, lifted.matrix, options.paper_order,
              {{"kind", "lifted_unitary"}, {"method", expansion ? "expansion" : "permanent"}}, options.output, out);
    return static_cast<int>(kSuccess);
  });
}

int cmd_lift_h(const LiftHOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComplexMatrix h_s = read_matrix(options.input);
    const LiftedHamiltonian lifted = lift_hamiltonian(h_s, options.photons, options.tol);
    emit_lift(lifted.basis, lifted.matrix, options.paper_order, {{"kind", "lifted_hamiltonian"}}, options.output,
              out);
    return static_cast<int>(kSuccess);
  });
}

int cmd_log(const LogOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComplexMatrix q = read_matrix(options.input);
    const ComplexMatrix h = unitary_logarithm(q, options.tol);
    write_matrix(h, options.output, {{"kind", "hamiltonian"}, {"branch", "(-pi, pi]"}});
    out << "check=log residual_exp=" << frobenius_distance(matrix_exponential(Complex(0.0, 1.0) * h), q) << '\n';
    return static_cast<int>(kSuccess);
  });
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.input) {
      const ComplexMatrix h_s = read_matrix(*options.input);
      const DiagramReport report = check_diagram(h_s, options.photons, options.tol);
      out << format_record(report.to_record()) << '\n';
      return static_cast<int>(report.passed ? kSuccess : kCheckFailed);
    }
    if (options.modes == 0) throw std::invalid_argument("--modes must be at least 1");
    SweepConfig config;
    config.modes = options.modes;
    config.photons = options.photons;
    config.trials = options.trials;
    config.seed = options.seed;
    config.tol = options.tol;
    const SweepResult result = run_sweep(config);
    for (const Record& record : result.records) out << format_record(record) << '\n';
    out << "check=summary seed=" << config.seed << " trials=" << config.trials << " checks=" << result.checks
        << " failures=" << result.failures << " passed=" << (result.all_passed() ? "true" : "false") << '\n';
    return static_cast<int>(result.all_passed() ? kSuccess : kCheckFailed);
  });
}

int cmd_demo_hom(std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<TransitionRow> rows = two_photon_distribution(balanced_beam_splitter());
    out << "demo=hong_ou_mandel input=(1,1)\n";
    double total = 0.0;
    for (const TransitionRow& row : rows) {
      out << "output=" << row.output.to_string() << " probability=" << fixed_text(row.probability) << '\n';
      total += row.probability;
    }
    out << "total=" << fixed_text(total) << '\n';
    return static_cast<int>(kSuccess);
  });
}

int cmd_basis(const BasisOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FockBasis basis = enumerate_basis(options.modes, options.photons);
    out << "modes=" << basis.modes() << " photons=" << basis.photons() << " dimension=" << basis.size() << '\n';
    print_basis(basis, out);
    return static_cast<int>(kSuccess);
  });
}

}  // namespace photonic::cli
