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

#include <filesystem>
#include <numbers>
#include <sstream>

#include "photonic/commands.hpp"
#include "photonic/matrix_functions.hpp"
#include "photonic/matrix_io.hpp"
#include "photonic/photonic_lift.hpp"
#include "test_support.hpp"

namespace photonic::cli {
namespace {

namespace fs = std::filesystem;

const double kR = 1.0 / std::sqrt(2.0);

class Commands : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("photonic_cmd_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path file(const std::string& name) const { return dir_ / name; }
  fs::path store(const std::string& name, const ComplexMatrix& m) const {
    write_matrix(m, file(name));
    return file(name);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(Commands, PaperOrderOnlyForTwoByTwo) {
  const FockBasis basis(2, 2);
  const std::vector<std::size_t> order = paper_order(basis);
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(basis[order[0]], (OccupationState{2, 0}));
  EXPECT_EQ(basis[order[1]], (OccupationState{0, 2}));
  EXPECT_EQ(basis[order[2]], (OccupationState{1, 1}));
  EXPECT_THROW(paper_order(FockBasis(3, 2)), std::invalid_argument);
}

TEST_F(Commands, LiftUBeamSplitter) {
  LiftUOptions options;
  options.photons = 2;
  options.input = store("bs.json", balanced_beam_splitter());
  options.output = file("u.json");
  ASSERT_EQ(cmd_lift_u(options, out_, err_), kSuccess) << err_.str();
  EXPECT_EQ(out_.str(), "index=0 state=(2,0)\nindex=1 state=(1,1)\nindex=2 state=(0,2)\n");
  // Canonical order |20>, |11>, |02>.
  const ComplexMatrix expected{{0.5, kR, 0.5}, {kR, 0.0, -kR}, {0.5, -kR, 0.5}};
  const MatrixDocument doc = read_matrix_document(options.output);
  EXPECT_LT(frobenius_distance(doc.matrix, expected), 1e-15);
  EXPECT_EQ(doc.metadata.at("basis"), "(2,0) (1,1) (0,2)");
  EXPECT_EQ(doc.metadata.at("order"), "canonical");
}

TEST_F(Commands, LiftUPaperOrder) {
  LiftUOptions options;
  options.photons = 2;
  options.input = store("bs.json", balanced_beam_splitter());
  options.output = file("u.json");
  options.paper_order = true;
  ASSERT_EQ(cmd_lift_u(options, out_, err_), kSuccess) << err_.str();
  EXPECT_EQ(out_.str(), "index=0 state=(2,0)\nindex=1 state=(0,2)\nindex=2 state=(1,1)\n");
  const ComplexMatrix expected{{0.5, 0.5, kR}, {0.5, 0.5, -kR}, {kR, -kR, 0.0}};
  EXPECT_LT(frobenius_distance(read_matrix(options.output), expected), 1e-15);

  options.input = store("i3.json", ComplexMatrix::identity(3));
  EXPECT_EQ(cmd_lift_u(options, out_, err_), kCheckFailed);
}

TEST_F(Commands, LiftUIdentityAndMethods) {
  LiftUOptions options;
  options.photons = 3;
  options.input = store("id.json", ComplexMatrix::identity(2));
  options.output = file("u.json");
  ASSERT_EQ(cmd_lift_u(options, out_, err_), kSuccess);
  EXPECT_EQ(read_matrix(options.output), ComplexMatrix::identity(4));

  Rng rng(77);
  options.photons = 2;
  options.input = store("s.json", random_unitary(3, rng));
  options.output = file("expansion.json");
  ASSERT_EQ(cmd_lift_u(options, out_, err_), kSuccess);
  options.method = LiftMethod::permanent;
  options.output = file("permanent.json");
  ASSERT_EQ(cmd_lift_u(options, out_, err_), kSuccess);
  EXPECT_LE(frobenius_distance(read_matrix(file("expansion.json")), read_matrix(file("permanent.json"))), 1e-10);
}

TEST_F(Commands, LiftUErrors) {
  LiftUOptions options;
  options.photons = 2;
  options.output = file("u.json");
  options.input = store("shear.json", ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}});
  EXPECT_EQ(cmd_lift_u(options, out_, err_), kCheckFailed);
  EXPECT_NE(err_.str().find("not unitary"), std::string::npos);
  options.input = file("missing.json");
  EXPECT_EQ(cmd_lift_u(options, out_, err_), kIoFailed);
  options.input = store("bs.json", balanced_beam_splitter());
  options.output = dir_ / "no" / "such" / "dir.json";
  EXPECT_EQ(cmd_lift_u(options, out_, err_), kIoFailed);
}

TEST_F(Commands, LiftH) {
  LiftHOptions options;
  options.photons = 2;
  options.input = store("hs.json", ComplexMatrix{{0.46008, -1.11072}, {-1.11072, 2.68152}});
  options.output = file("hu.json");
  options.paper_order = true;
  ASSERT_EQ(cmd_lift_h(options, out_, err_), kSuccess);
  const ComplexMatrix expected{{0.92016, 0.0, -1.57080}, {0.0, 5.36304, -1.57080}, {-1.57080, -1.57080, 3.14160}};
  EXPECT_LT(testing::max_abs_difference(read_matrix(options.output), expected), 1e-4);

  options.paper_order = false;
  options.photons = 5;
  options.input = store("zero.json", ComplexMatrix::zero(2, 2));
  ASSERT_EQ(cmd_lift_h(options, out_, err_), kSuccess);
  EXPECT_EQ(read_matrix(options.output), ComplexMatrix::zero(6, 6));

  options.photons = 2;
  const std::vector<Complex> d{1.0, 2.0};
  options.input = store("diag.json", ComplexMatrix::diagonal(d));
  ASSERT_EQ(cmd_lift_h(options, out_, err_), kSuccess);
  const std::vector<Complex> lifted{2.0, 3.0, 4.0};
  EXPECT_EQ(read_matrix(options.output), ComplexMatrix::diagonal(lifted));

  options.input = store("bad.json", ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
  EXPECT_EQ(cmd_lift_h(options, out_, err_), kCheckFailed);
}

TEST_F(Commands, Log) {
  LogOptions options;
  options.input = store("bs.json", balanced_beam_splitter());
  options.output = file("h.json");
  ASSERT_EQ(cmd_log(options, out_, err_), kSuccess);
  EXPECT_LT(testing::max_abs_difference(read_matrix(options.output),
                                        ComplexMatrix{{0.46008, -1.11072}, {-1.11072, 2.68152}}),
            1e-4);

  options.input = store("id.json", ComplexMatrix::identity(2));
  ASSERT_EQ(cmd_log(options, out_, err_), kSuccess);
  EXPECT_LT(frobenius_norm(read_matrix(options.output)), 1e-15);

  options.input = store("flip.json", ComplexMatrix{{-1.0, 0.0}, {0.0, 1.0}});
  ASSERT_EQ(cmd_log(options, out_, err_), kSuccess);
  EXPECT_LT(frobenius_distance(read_matrix(options.output), ComplexMatrix{{std::numbers::pi, 0.0}, {0.0, 0.0}}),
            1e-15);

  options.input = store("shear.json", ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}});
  EXPECT_EQ(cmd_log(options, out_, err_), kCheckFailed);
}

TEST_F(Commands, VerifyInput) {
  VerifyOptions options;
  options.input = store("hs.json", ComplexMatrix{{0.46008, -1.11072}, {-1.11072, 2.68152}});
  options.photons = 2;
  ASSERT_EQ(cmd_verify(options, out_, err_), kSuccess);
  EXPECT_NE(out_.str().find("check=diagram m=2 n=2"), std::string::npos);
  EXPECT_NE(out_.str().find("passed=true"), std::string::npos);

  options.input = store("broken.json", ComplexMatrix{{0.46008, -1.11072}, {1.11072, 2.68152}});
  EXPECT_EQ(cmd_verify(options, out_, err_), kCheckFailed);
  EXPECT_NE(err_.str().find("not Hermitian"), std::string::npos);
}

TEST_F(Commands, VerifySweep) {
  VerifyOptions options;
  options.photons = 2;
  options.modes = 3;
  options.trials = 100;
  options.seed = 42;
  ASSERT_EQ(cmd_verify(options, out_, err_), kSuccess);
  const std::string text = out_.str();
  EXPECT_NE(text.find("check=summary seed=42 trials=100 checks=400 failures=0 passed=true"), std::string::npos);

  std::ostringstream again;
  cmd_verify(options, again, err_);
  EXPECT_EQ(again.str(), text);
}

TEST_F(Commands, DemoHom) {
  ASSERT_EQ(cmd_demo_hom(out_, err_), kSuccess);
  EXPECT_EQ(out_.str(),
            "demo=hong_ou_mandel input=(1,1)\n"
            "output=(2,0) probability=0.500000000000\n"
            "output=(1,1) probability=0.000000000000\n"
            "output=(0,2) probability=0.500000000000\n"
            "total=1.000000000000\n");
}

TEST_F(Commands, TwoPhotonDistribution) {
  for (const TransitionRow& row : two_photon_distribution(ComplexMatrix::identity(2))) {
    EXPECT_EQ(row.probability, (row.output == OccupationState{1, 1}) ? 1.0 : 0.0);
  }
  double total = 0.0;
  for (const TransitionRow& row : two_photon_distribution(balanced_beam_splitter())) total += row.probability;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_THROW(two_photon_distribution(ComplexMatrix::identity(3)), std::invalid_argument);
}

TEST_F(Commands, Basis) {
  ASSERT_EQ(cmd_basis({3, 2}, out_, err_), kSuccess);
  EXPECT_EQ(out_.str(),
            "modes=3 photons=2 dimension=6\n"
            "index=0 state=(2,0,0)\nindex=1 state=(1,1,0)\nindex=2 state=(1,0,1)\n"
            "index=3 state=(0,2,0)\nindex=4 state=(0,1,1)\nindex=5 state=(0,0,2)\n");
  EXPECT_EQ(cmd_basis({0, 2}, out_, err_), kCheckFailed);
}

}  // namespace
}  // namespace photonic::cli
