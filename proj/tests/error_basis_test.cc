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

#include "hybridec/error_basis.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "hybridec/error.h"
#include "support/test_support.h"

namespace hybridec {
namespace {

using testing::oracle_adjoint;
using testing::oracle_dense;
using testing::oracle_mul;
using testing::oracle_trace;

std::vector<PauliElement> full_basis(unsigned q, std::size_t n) {
  std::vector<PauliElement> out;
  for (std::size_t d = 0; d <= n; ++d) {
    const auto set = enumerate_weight(q, n, d);
    for (std::size_t k = 0; k < set.size(); ++k) out.push_back(set[k]);
  }
  return out;
}

TEST(ErrorBasisTest, QubitMatrices) {
  EXPECT_EQ(realize(PauliElement::parse("X", 2)), CMatrix(2, 2, {0, 1, 1, 0}));
  EXPECT_EQ(realize(PauliElement::parse("Z", 2)), CMatrix(2, 2, {1, 0, 0, -1}));
  // x = z = 1 realizes XZ, not the Hermitian Y.
  EXPECT_EQ(realize(PauliElement::parse("Y", 2)), CMatrix(2, 2, {0, -1, 1, 0}));
  EXPECT_EQ(realize(PauliElement::identity(2, 2)), CMatrix::identity(4));
}

TEST(ErrorBasisTest, TensorOrderIsBigEndian) {
  // XI flips the most significant digit: |00> -> |10> = index 2.
  const CMatrix xi = realize(PauliElement::parse("XI", 2));
  EXPECT_EQ(xi(2, 0), Complex(1));
  EXPECT_EQ(xi(1, 0), Complex(0));
}

TEST(ErrorBasisTest, RealizeMatchesHandBuiltMatrices) {
  for (unsigned q : {2u, 3u, 4u}) {
    for (std::size_t n : {1u, 2u}) {
      for (const auto& e : full_basis(q, n)) {
        EXPECT_LE(max_abs_diff(realize(e), oracle_dense(e)), 1e-12) << e.to_string();
      }
    }
  }
}

TEST(ErrorBasisTest, QutritClockHasCubeRootsOfUnity) {
  const CMatrix z = realize(PauliElement(3, {0}, {1}));
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  EXPECT_LE(std::abs(z(1, 1) - w), 1e-15);
  EXPECT_LE(std::abs(z(2, 2) - w * w), 1e-15);
}

TEST(ErrorBasisTest, ElementsAreUnitary) {
  for (unsigned q : {2u, 3u}) {
    for (const auto& e : full_basis(q, 2)) {
      const CMatrix u = realize(e);
      EXPECT_LE(max_abs_diff(oracle_mul(oracle_adjoint(u), u), CMatrix::identity(u.rows())),
                1e-12);
    }
  }
}

TEST(ErrorBasisTest, TraceOrthogonality) {
  // Tr(E_a^* E_b) = q^n [a = b]
  for (unsigned q : {2u, 3u}) {
    for (std::size_t n : {1u, 2u}) {
      const auto basis = full_basis(q, n);
      const double qn = static_cast<double>(ambient_dim(q, n));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const CMatrix ei = oracle_adjoint(realize(basis[i]));
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const Complex t = oracle_trace(oracle_mul(ei, realize(basis[j])));
          EXPECT_LE(std::abs(t - Complex(i == j ? qn : 0.0)), 1e-10);
        }
      }
    }
  }
}

TEST(ErrorBasisTest, ParsevalOnRandomOperators) {
  // sum_E |Tr(E^* X)|^2 = q^n Tr(X^* X)
  std::mt19937_64 rng(21);
  for (unsigned q : {2u, 3u}) {
    for (std::size_t n : {1u, 2u}) {
      const std::size_t dim = ambient_dim(q, n);
      const CMatrix x = testing::random_matrix(dim, dim, rng);
      double lhs = 0.0;
      for (const auto& e : full_basis(q, n)) {
        lhs += std::norm(oracle_trace(oracle_mul(oracle_adjoint(realize(e)), x)));
      }
      const double rhs = static_cast<double>(dim) * oracle_trace(oracle_mul(oracle_adjoint(x), x)).real();
      EXPECT_NEAR(lhs, rhs, 1e-9 * rhs);
    }
  }
}

TEST(ErrorBasisTest, WeightClassesPartitionTheBasis) {
  for (unsigned q : {2u, 3u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t total = 0;
      std::set<std::pair<std::vector<unsigned>, std::vector<unsigned>>> seen;
      for (std::size_t d = 0; d <= n; ++d) {
        const auto set = enumerate_weight(q, n, d);
        total += set.size();
        for (std::size_t k = 0; k < set.size(); ++k) {
          EXPECT_EQ(weight(set[k]), d);
          EXPECT_TRUE(seen.insert({set[k].xvec(), set[k].zvec()}).second);
        }
      }
      EXPECT_EQ(total, ambient_dim(q, n) * ambient_dim(q, n));
    }
  }
}

TEST(ErrorBasisTest, EnumerationSizes) {
  EXPECT_EQ(enumerate_weight(2, 1, 1).size(), 3u);
  EXPECT_EQ(enumerate_weight(2, 2, 1).size(), 6u);
  EXPECT_EQ(enumerate_weight(2, 5, 4).size(), 5u * 81u);
  EXPECT_EQ(enumerate_weight(3, 2, 2).size(), 64u);
  EXPECT_EQ(enumerate_weight(2, 3, 0).size(), 1u);
  EXPECT_TRUE(enumerate_weight(2, 3, 0)[0].is_identity());
}

TEST(ErrorBasisTest, EnumerationOrder) {
  const auto set = enumerate_weight(2, 2, 1);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < set.size(); ++k) labels.push_back(set[k].to_string());
  EXPECT_EQ(labels, (std::vector<std::string>{"ZI", "XI", "YI", "IZ", "IX", "IY"}));
}

TEST(ErrorBasisTest, WeightIsSubadditive) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const unsigned q = t % 2 ? 3 : 2;
    const auto f = testing::random_pauli(q, 4, rng);
    const auto e = testing::random_pauli(q, 4, rng);
    EXPECT_LE(weight(compose_adjoint_left(f, e)), weight(f) + weight(e));
  }
}

TEST(ErrorBasisTest, ComposeAdjointLeftAgreesUpToUnitPhase) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const unsigned q = t % 3 == 0 ? 3 : 2;
    const std::size_t n = 1 + t % 2;
    const auto f = testing::random_pauli(q, n, rng);
    const auto e = testing::random_pauli(q, n, rng);
    const CMatrix lhs = oracle_mul(oracle_adjoint(oracle_dense(f)), oracle_dense(e));
    const CMatrix g = oracle_dense(compose_adjoint_left(f, e));
    // lhs = c g with |c| = 1; recover c from Tr(g^* lhs) / q^n.
    const Complex c = oracle_trace(oracle_mul(oracle_adjoint(g), lhs)) /
                      static_cast<double>(ambient_dim(q, n));
    EXPECT_NEAR(std::abs(c), 1.0, 1e-12);
    CMatrix scaled = g;
    scaled *= c;
    EXPECT_LE(max_abs_diff(lhs, scaled), 1e-12);
  }
}

TEST(ErrorBasisTest, ApplyToStateMatchesDenseProduct) {
  std::mt19937_64 rng(24);
  for (unsigned q : {2u, 3u}) {
    for (const auto& e : full_basis(q, 2)) {
      const CVector v = testing::random_vector(ambient_dim(q, 2), rng);
      const CVector fast = apply_to_state(e, v);
      const CVector slow = mat_vec(oracle_dense(e), v);
      for (std::size_t i = 0; i < v.size(); ++i) EXPECT_LE(std::abs(fast[i] - slow[i]), 1e-12);
    }
  }
}

TEST(ErrorBasisTest, ParseForms) {
  const auto e = PauliElement::parse("XIZY", 2);
  EXPECT_EQ(e.xvec(), (std::vector<unsigned>{1, 0, 0, 1}));
  EXPECT_EQ(e.zvec(), (std::vector<unsigned>{0, 0, 1, 1}));
  EXPECT_EQ(weight(e), 3u);
  EXPECT_EQ(e.to_string(), "XIZY");

  const auto g = PauliElement::parse("x:1,0;z:2,1", 3);
  EXPECT_EQ(g.xvec(), (std::vector<unsigned>{1, 0}));
  EXPECT_EQ(g.zvec(), (std::vector<unsigned>{2, 1}));
  EXPECT_EQ(PauliElement::parse(g.to_string(), 3), g);

  EXPECT_THROW(PauliElement::parse("XQ", 2), Error);
  EXPECT_THROW(PauliElement::parse("X", 3), Error);
  EXPECT_THROW(PauliElement::parse("x:3;z:0", 3), Error);
  EXPECT_THROW(PauliElement::parse("x:1,0;z:1", 3), Error);
}

TEST(ErrorBasisTest, ConstructorRejectsBadDigits) {
  EXPECT_THROW(PauliElement(2, {2}, {0}), Error);
  EXPECT_THROW(PauliElement(2, {0, 1}, {0}), Error);
}

}  // namespace
}  // namespace hybridec
