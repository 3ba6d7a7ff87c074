// Copyright 2026 The qdelta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <qdelta/channel_algebra.hpp>
#include <qdelta/classical_coding.hpp>
#include <qdelta/scheme_library.hpp>

#include "test_support.hpp"

using namespace qdelta;
using qdelta::testing::max_abs_diff;

namespace {

// Heisenberg action recovered by contracting the Choi matrix:
// T(A)_{ji} = tr(J_{ij} A) with J_{ij} the (i, j) block of J.
Matrix choi_contraction(const ChoiMatrix& j, const Matrix& a) {
  const Index out = j.dim_from();
  const Index in = j.dim_to();
  Matrix result(out, out);
  for (Index r = 0; r < out; ++r) {
    for (Index c = 0; c < out; ++c) {
      result(c, r) = (j.matrix().block(r * in, c * in, in, in) * a).trace();
    }
  }
  return result;
}

Matrix matrix_unit(Index d, Index i, Index j) {
  Matrix u = Matrix::Zero(d, d);
  u(i, j) = 1.0;
  return u;
}

}  // namespace

TEST_CASE("identity channel acts trivially") {
  const CPMap id = CPMap::identity(3);
  Rng rng(1);
  const Matrix a = gaussian_matrix(3, 3, rng);
  CHECK(max_abs_diff(qdelta::apply(id, a), a) == 0.0);
  const DensityMatrix rho = random_density(3, rng);
  CHECK(max_abs_diff(dual_apply(id, rho).matrix(), rho.matrix()) <= 1e-15);
}

TEST_CASE("apply checks operand dimensions") {
  Rng rng(2);
  const CPMap t = random_unital_cpmap(2, 3, 2, rng);
  CHECK_THROWS_AS(qdelta::apply(t, Matrix::Identity(3, 3)), DimensionError);
  CHECK_THROWS_AS(dual_apply(t, Matrix::Identity(2, 2)), DimensionError);
  CHECK_THROWS_AS(CPMap(2, 2, {Matrix::Identity(3, 3)}), DimensionError);
  CHECK_THROWS_AS(random_unital_cpmap(2, 3, 1, rng), DomainError);
}

TEST_CASE("random unital maps send I to I") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Index din = 2 + trial % 3;
    const Index dout = 2 + (trial / 3) % 3;
    const CPMap t = random_unital_cpmap(din, dout, 2 + trial % 3, rng);
    CHECK(op_norm(Matrix(qdelta::apply(t, Matrix::Identity(din, din)) - Matrix::Identity(dout, dout))) <=
          1e-10);
    CHECK(t.is_unital());
    CHECK(is_cp(t));
  }
}

TEST_CASE("apply agrees with Choi contraction") {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Index din = 2 + trial % 3;
    const Index dout = 2 + (trial / 3) % 3;
    const CPMap t = random_unital_cpmap(din, dout, 3, rng);
    const Matrix a = gaussian_matrix(din, din, rng);
    CHECK(max_abs_diff(qdelta::apply(t, a), choi_contraction(choi(t), a)) <= 1e-10);
  }
}

TEST_CASE("Heisenberg and Schroedinger actions are dual") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 2 + trial % 3;
    const CPMap t = random_unital_cpmap(d, d, 1 + trial % 3, rng);
    const DensityMatrix rho = random_density(d, rng);
    const Matrix x = gaussian_matrix(d, d, rng);
    const Complex lhs = (dual_apply(t, rho).matrix() * x).trace();
    const Complex rhs = (rho.matrix() * qdelta::apply(t, x)).trace();
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("single-outcome coding composite is completely depolarizing") {
  const CodingScheme s = build({SchemeName::single_outcome, 3, 0, std::nullopt, std::nullopt});
  const CodingMaps maps = as_cpmaps(s);
  const CPMap cd = compose(maps.c, maps.d);
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_density(3, rng);
    CHECK(max_abs_diff(dual_apply(cd, rho).matrix(), Matrix::Identity(3, 3) / 3.0) <= 1e-12);
  }
}

TEST_CASE("Choi matrix of the qubit identity channel") {
  const ChoiMatrix j = choi(CPMap::identity(2));
  const RealVector ev = j.hermitian().eigenvalues();
  CHECK(std::abs(ev(0)) <= 1e-12);
  CHECK(std::abs(ev(1)) <= 1e-12);
  CHECK(std::abs(ev(2)) <= 1e-12);
  CHECK(std::abs(ev(3) - 2.0) <= 1e-12);
  // Unnormalized Σ|ii⟩⟨jj|.
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
  CHECK(max_abs_diff(j.matrix(), expected) == 0.0);
}

TEST_CASE("transpose map is not completely positive") {
  const ChoiMatrix j = choi(2, 2, [](const Matrix& m) { return Matrix(m.transpose()); });
  CHECK(std::abs(j.min_eigenvalue() + 1.0) <= 1e-12);
  CHECK_FALSE(is_cp(j));
}

TEST_CASE("compose with identity is the same map") {
  Rng rng(7);
  const CPMap t = random_unital_cpmap(3, 2, 2, rng);
  const CPMap left = compose(CPMap::identity(2), t);
  const CPMap right = compose(t, CPMap::identity(3));
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      const Matrix u = matrix_unit(3, i, j);
      CHECK(max_abs_diff(qdelta::apply(left, u), qdelta::apply(t, u)) <= 1e-14);
      CHECK(max_abs_diff(qdelta::apply(right, u), qdelta::apply(t, u)) <= 1e-14);
    }
  }
  CHECK_THROWS_AS(compose(t, t), DimensionError);
}

TEST_CASE("compose and tensor preserve unitality and complete positivity") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const CPMap s = random_unital_cpmap(3, 2, 2, rng);
    const CPMap t = random_unital_cpmap(2, 3, 3, rng);
    const CPMap st = compose(s, t);
    CHECK(st.dim_in() == 2);
    CHECK(st.dim_out() == 2);
    CHECK(st.is_unital());
    CHECK(is_cp(st));
    const CPMap tt = tensor(s, t);
    CHECK(tt.dim_in() == 6);
    CHECK(tt.is_unital());
    CHECK(is_cp(tt));
  }
}

TEST_CASE("Choi of a composite equals the Choi of the composed actions") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const CPMap s = random_unital_cpmap(2, 3, 2, rng);
    const CPMap t = random_unital_cpmap(3, 2, 2, rng);
    const ChoiMatrix direct = choi(compose(s, t));
    // (S ∘ T)* = T* ∘ S*
    const ChoiMatrix chained = choi(3, 3, [&](const Matrix& rho) {
      return dual_apply(t, dual_apply(s, rho));
    });
    CHECK(max_abs_diff(direct.matrix(), chained.matrix()) <= 1e-10);
  }
}

TEST_CASE("tensor acts factorwise on product operators") {
  Rng rng(10);
  const CPMap a = random_unital_cpmap(2, 2, 2, rng);
  const CPMap b = random_unital_cpmap(3, 3, 2, rng);
  const Matrix x = gaussian_matrix(2, 2, rng);
  const Matrix y = gaussian_matrix(3, 3, rng);
  CHECK(max_abs_diff(qdelta::apply(tensor(a, b), kron(x, y)), kron(qdelta::apply(a, x), qdelta::apply(b, y))) <= 1e-12);
}

TEST_CASE("commutator") {
  const Matrix& x = pauli_x();
  const Matrix& y = pauli_y();
  CHECK(max_abs_diff(commutator(x, y), Complex(0, 2) * pauli_z()) == 0.0);
  CHECK_THROWS_AS(commutator(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), DimensionError);
}
