// Copyright 2026 The hybridec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hybridec/detection.h"

#include <random>

#include "gtest/gtest.h"
#include "hybridec/error.h"
#include "support/test_support.h"

namespace hybridec {
namespace {

using testing::basis_vector;
using testing::fixture_f5;
using testing::fixture_t1;
using testing::fixture_t3;

PauliElement P(const char* text) { return PauliElement::parse(text, 2); }

/// Definitional check P_b E P_a == lambda [a = b] P_a with dense projectors.
bool oracle_detectable(const HybridCode& code, const CMatrix& e, double tol) {
  std::vector<CMatrix> proj;
  for (const auto& b : code.blocks()) proj.push_back(testing::oracle_projector(b));
  for (std::size_t a = 0; a < code.M(); ++a) {
    const Complex lambda = testing::oracle_trace(testing::oracle_mul(proj[a], e)) /
                           static_cast<double>(code.K());
    for (std::size_t b = 0; b < code.M(); ++b) {
      const CMatrix lhs = testing::oracle_mul(testing::oracle_mul(proj[b], e), proj[a]);
      CMatrix rhs(code.dim(), code.dim());
      if (a == b) {
        rhs = proj[a];
        rhs *= lambda;
      }
      if (max_abs_diff(lhs, rhs) > tol) return false;
    }
  }
  return true;
}

TEST(DetectionTest, T1ZIsDetectableWithOppositeLambdas) {
  const auto report = detectability(fixture_t1(), P("Z"));
  EXPECT_TRUE(report.detectable);
  ASSERT_EQ(report.lambdas.size(), 2u);
  EXPECT_LE(std::abs(report.lambdas[0] - Complex(1)), 1e-12);
  EXPECT_LE(std::abs(report.lambdas[1] - Complex(-1)), 1e-12);
  EXPECT_FALSE(report.witness.has_value());
}

TEST(DetectionTest, T1XIsNotDetectable) {
  const auto report = detectability(fixture_t1(), P("X"));
  EXPECT_FALSE(report.detectable);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(*report.witness, (BlockPair{2, 1}));
  EXPECT_NEAR(report.max_offdiag_violation, 1.0, 1e-12);
}

TEST(DetectionTest, DenseErrorsAreAccepted) {
  const auto report = detectability(fixture_t1(), ErrorOperator{realize(P("Z"))});
  EXPECT_TRUE(report.detectable);
  EXPECT_THROW(detectability(fixture_t1(), ErrorOperator{CMatrix::identity(4)}), Error);
}

TEST(DetectionTest, T3WeightOneErrorsAreDetectable) {
  const auto set = enumerate_weight(2, 2, 1);
  for (std::size_t k = 0; k < set.size(); ++k) {
    const auto report = detectability(fixture_t3(), set[k]);
    EXPECT_TRUE(report.detectable) << set[k].to_string();
    if (set[k].xvec() != std::vector<unsigned>{0, 0}) {
      for (const auto& l : report.lambdas) EXPECT_LE(std::abs(l), 1e-12);
    }
  }
}

TEST(DetectionTest, IdentityIsAlwaysDetectable) {
  std::mt19937_64 rng(41);
  const auto code = testing::random_frame_code(3, 2, 2, 2, rng);
  const auto report = detectability(code, PauliElement::identity(3, 2));
  EXPECT_TRUE(report.detectable);
  for (const auto& l : report.lambdas) EXPECT_LE(std::abs(l - Complex(1)), 1e-10);
}

TEST(DetectionTest, AllDetectableOfWeight) {
  EXPECT_TRUE(all_detectable_of_weight(fixture_t3(), 1).all_detectable);
  const auto t3_2 = all_detectable_of_weight(fixture_t3(), 2);
  EXPECT_FALSE(t3_2.all_detectable);
  EXPECT_EQ(t3_2.checked, 9u);
  ASSERT_FALSE(t3_2.counterexamples.empty());
  bool has_xx = false;
  for (const auto& r : t3_2.counterexamples) has_xx |= r.error == "XX";
  EXPECT_TRUE(has_xx);

  const auto f5 = fixture_f5();
  EXPECT_TRUE(all_detectable_of_weight(f5, 1).all_detectable);
  EXPECT_TRUE(all_detectable_of_weight(f5, 2).all_detectable);
  const auto f5_3 = all_detectable_of_weight(f5, 3, kMatrixTol, 1, 4);
  EXPECT_FALSE(f5_3.all_detectable);
  EXPECT_LE(f5_3.counterexamples.size(), 4u);
  EXPECT_EQ(f5_3.checked, 270u);
}

TEST(DetectionTest, AllDetectableOfWeightIndependentOfJobs) {
  const auto f5 = fixture_f5();
  const auto one = all_detectable_of_weight(f5, 3, kMatrixTol, 1);
  const auto many = all_detectable_of_weight(f5, 3, kMatrixTol, 8);
  EXPECT_EQ(one.failures, many.failures);
  ASSERT_EQ(one.counterexamples.size(), many.counterexamples.size());
  for (std::size_t i = 0; i < one.counterexamples.size(); ++i) {
    EXPECT_EQ(one.counterexamples[i].error, many.counterexamples[i].error);
  }
}

TEST(DetectionTest, MatchesDefinitionalOracleOnRandomCodes) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 6; ++t) {
    const auto code = t % 2 ? testing::random_stabilizer_code(3, 1, 1, rng)
                            : testing::random_frame_code(2, 2, 1, 2, rng);
    for (std::size_t d = 0; d <= code.n(); ++d) {
      const auto set = enumerate_weight(2, code.n(), d);
      for (std::size_t k = 0; k < set.size(); ++k) {
        EXPECT_EQ(detectability(code, set[k]).detectable,
                  oracle_detectable(code, testing::oracle_dense(set[k]), 1e-9))
            << set[k].to_string();
      }
    }
  }
}

TEST(DetectionTest, DetectableErrorsFormALinearSpace) {
  // Linear combinations of detectable errors stay detectable, with lambdas
  // combining linearly; global phases are irrelevant.
  const auto t3 = fixture_t3();
  const Complex alpha(0.3, -1.1);
  const Complex beta(-2.0, 0.5);
  CMatrix e = realize(P("ZI"));
  e *= alpha;
  CMatrix f = realize(P("IZ"));
  f *= beta;
  e += f;
  const auto report = detectability(t3, ErrorOperator{e});
  ASSERT_TRUE(report.detectable);
  const auto zi = detectability(t3, P("ZI"));
  const auto iz = detectability(t3, P("IZ"));
  for (std::size_t a = 0; a < 2; ++a) {
    EXPECT_LE(std::abs(report.lambdas[a] - (alpha * zi.lambdas[a] + beta * iz.lambdas[a])), 1e-12);
  }
  CMatrix phased = realize(P("XX"));
  phased *= std::polar(1.0, 0.7);
  EXPECT_FALSE(detectability(t3, ErrorOperator{phased}).detectable);
}

TEST(DetectionTest, CorrectableSets) {
  const auto t3 = fixture_t3();
  EXPECT_TRUE(is_correctable_set(t3, {P("II"), P("ZI")}).correctable);
  const auto bad = is_correctable_set(t3, {P("II"), P("XX")});
  EXPECT_FALSE(bad.correctable);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->first, P("II"));
  EXPECT_EQ(bad.witness->second, P("XX"));
  EXPECT_TRUE(is_correctable_set(t3, {P("II"), P("XI")}).correctable);
  EXPECT_TRUE(is_correctable_set(fixture_t1(), {P("I"), P("Z")}).correctable);
  const auto single = is_correctable_set(fixture_t1(), {P("I")});
  EXPECT_TRUE(single.correctable);
  EXPECT_TRUE(single.contains_identity);
}

TEST(DetectionTest, FiveQubitCodeCorrectsSingleQubitErrors) {
  std::vector<PauliElement> errors{PauliElement::identity(2, 5)};
  const auto set = enumerate_weight(2, 5, 1);
  for (std::size_t k = 0; k < set.size(); ++k) errors.push_back(set[k]);
  EXPECT_TRUE(is_correctable_set(fixture_f5(), errors).correctable);
}

TEST(DetectionTest, DimensionFormula) {
  const auto t1 = detectable_dimension_formula(1, 1, 2, 2);
  EXPECT_EQ(t1.hybrid_dim, 2);
  EXPECT_EQ(t1.quantum_dim, 1);
  const auto t3 = detectable_dimension_formula(2, 1, 2, 2);
  EXPECT_EQ(t3.hybrid_dim, 14);
  EXPECT_EQ(t3.quantum_dim, 13);
  const auto m1 = detectable_dimension_formula(3, 2, 1, 2);
  EXPECT_EQ(m1.hybrid_dim, m1.quantum_dim);
}

TEST(DetectionTest, DimensionNumericMatchesFormula) {
  EXPECT_EQ(detectable_dimension_numeric(fixture_t1()), 2);
  EXPECT_EQ(detectable_dimension_numeric(fixture_t3()), 14);
  std::mt19937_64 rng(43);
  EXPECT_EQ(detectable_dimension_numeric(testing::random_frame_code(2, 2, 2, 2, rng)), 2);
  for (int t = 0; t < 5; ++t) {
    const auto code = testing::random_frame_code(t % 2 ? 3 : 2, t % 2 ? 1 : 3, 1, 2 + t % 2, rng);
    const auto f = detectable_dimension_formula(code.n(), code.K(), code.M(), code.q());
    EXPECT_EQ(detectable_dimension_numeric(code), f.hybrid_dim);
  }
}

TEST(DetectionTest, DimensionNumericIsGuarded) {
  try {
    detectable_dimension_numeric(fixture_f5());
    FAIL() << "expected guard";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardExceeded);
  }
}

TEST(DetectionTest, DecomposeZOnT1) {
  const auto dec = operator_system_decompose(fixture_t1(), realize(P("Z")));
  EXPECT_LE(max_abs_diff(dec.real_part, realize(P("Z"))), 1e-15);
  EXPECT_LE(max_abs(dec.imag_part), 1e-15);
  EXPECT_LE(max_abs_diff(dec.parts[0], CMatrix::identity(2)), 1e-12);
  EXPECT_LE(max_abs_diff(dec.parts[1], CMatrix::diagonal(std::vector<Complex>{0, 2})), 1e-12);
  EXPECT_LE(max_abs(dec.parts[2]), 1e-15);
  EXPECT_LE(max_abs(dec.parts[3]), 1e-15);
  for (int k = 0; k < 4; ++k) {
    EXPECT_TRUE(dec.part_detectable[k]);
    EXPECT_TRUE(dec.part_positive[k]);
  }
  EXPECT_LE(dec.recombination_error, 1e-12);
}

TEST(DetectionTest, DecomposeIdentity) {
  const auto dec = operator_system_decompose(fixture_t3(), CMatrix::identity(4));
  EXPECT_LE(max_abs_diff(dec.parts[0], CMatrix::identity(4)), 1e-12);
  EXPECT_LE(max_abs(dec.parts[1]), 1e-12);
  EXPECT_LE(max_abs(dec.parts[2]), 1e-12);
  EXPECT_LE(max_abs(dec.parts[3]), 1e-12);
}

TEST(DetectionTest, DecomposeZIOnT3AndComplexErrors) {
  const auto dec = operator_system_decompose(fixture_t3(), realize(P("ZI")));
  for (int k = 0; k < 4; ++k) EXPECT_TRUE(dec.part_detectable[k]);

  // A non-Hermitian detectable combination exercises the imaginary parts.
  CMatrix e = realize(P("ZI"));
  CMatrix f = realize(P("IZ"));
  f *= Complex(0, 2);
  e += f;
  const auto complex_dec = operator_system_decompose(fixture_t3(), e);
  EXPECT_GT(complex_dec.imag_norm, 1.0);
  for (int k = 0; k < 4; ++k) {
    EXPECT_TRUE(complex_dec.part_detectable[k]);
    EXPECT_TRUE(complex_dec.part_positive[k]);
  }
  EXPECT_LE(complex_dec.recombination_error, 1e-12);
}

TEST(DetectionTest, DecomposeRejectsUndetectable) {
  try {
    operator_system_decompose(fixture_t1(), realize(P("X")));
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDetectable);
  }
}

TEST(DetectionTest, Measure) {
  const auto t1 = fixture_t1();
  auto out = measure(t1, basis_vector(2, 0));
  ASSERT_EQ(out.size(), 3u);
  EXPECT_NEAR(out[1].probability, 1.0, 1e-15);
  EXPECT_NEAR(out[2].probability, 0.0, 1e-15);
  EXPECT_TRUE(out[0].is_error_flag());

  const double s = 1.0 / std::sqrt(2.0);
  out = measure(t1, CVector{s, s});
  EXPECT_NEAR(out[1].probability, 0.5, 1e-15);
  EXPECT_NEAR(out[2].probability, 0.5, 1e-15);

  out = measure(fixture_t3(), basis_vector(4, 2));
  EXPECT_NEAR(out[0].probability, 1.0, 1e-15);
  EXPECT_EQ(out[0].post_state, basis_vector(4, 2));
  EXPECT_TRUE(out[1].post_state.empty());

  EXPECT_THROW(measure(t1, CVector{1.0, 1.0}), Error);
}

TEST(DetectionTest, MeasureProbabilitiesSumToOne) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 10; ++t) {
    const auto code = testing::random_frame_code(3, 2, 2, 3, rng);
    const auto out = measure(code, testing::random_unit_vector(code.dim(), rng));
    double total = 0.0;
    for (const auto& o : out) total += o.probability;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(DetectionTest, SimulateTransmission) {
  const CVector one{1.0};
  auto tally = simulate_transmission(fixture_t1(), 1, one, P("Z"), 200, 7);
  EXPECT_EQ(tally.counts[1], 200u);
  EXPECT_EQ(tally.wrong_message_count, 0u);
  ASSERT_TRUE(tally.fidelity.has_value());
  EXPECT_NEAR(*tally.fidelity, 1.0, 1e-12);

  tally = simulate_transmission(fixture_t1(), 1, one, P("X"), 200, 7);
  EXPECT_EQ(tally.counts[2], 200u);
  EXPECT_EQ(tally.wrong_message_count, 200u);

  tally = simulate_transmission(fixture_t3(), 1, one, P("XI"), 200, 7);
  EXPECT_EQ(tally.counts[0], 200u);
  EXPECT_FALSE(tally.fidelity.has_value());
}

TEST(DetectionTest, SimulateTransmissionIsSeedDeterministic) {
  const double s = 1.0 / std::sqrt(2.0);
  // A dense error mixing the two blocks gives a genuinely random outcome.
  CMatrix h(2, 2, {s, s, s, -s});
  const CVector one{1.0};
  const auto a = simulate_transmission(fixture_t1(), 1, one, ErrorOperator{h}, 500, 99);
  const auto b = simulate_transmission(fixture_t1(), 1, one, ErrorOperator{h}, 500, 99);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_GT(a.counts[1], 150u);
  EXPECT_GT(a.counts[2], 150u);
}

}  // namespace
}  // namespace hybridec
