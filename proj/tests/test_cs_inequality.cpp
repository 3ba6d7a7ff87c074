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

#include <cmath>

#include <Eigen/SVD>

#include <qdelta/cs_inequality.hpp>
#include <qdelta/scheme_library.hpp>

#include "test_support.hpp"

using namespace qdelta;
using qdelta::testing::max_abs_diff;
using qdelta::testing::named_scheme;
using qdelta::testing::random_scheme;

namespace {

Real svd_norm(const Matrix& m) { return Eigen::JacobiSVD<Matrix>(m).singularValues()(0); }

Real min_eigenvalue(const Matrix& m) { return hermitian_eigenvalues(hermitian_part(m))(0); }

}  // namespace

TEST_CASE("lower bound is the small root of the chain equation") {
  // ½ = Δ + 2Δ(1 − Δ)  ⇔  2Δ² − 3Δ + ½ = 0; cancellation-free root.
  const Real a = 2.0;
  const Real b = -3.0;
  const Real c = 0.5;
  const Real q = -0.5 * (b - std::sqrt(b * b - 4.0 * a * c));
  const Real root = c / q;
  CHECK(std::abs(cs_lower_bound() - root) <= 2e-16);
  CHECK(cs_lower_bound() == 0.19098300562505258);
  const Real d = cs_lower_bound();
  CHECK(std::abs(d + 2.0 * d * (1.0 - d) - 0.5) <= 1e-15);
}

TEST_CASE("identity carrier gives the zero form") {
  const InducedForm f = InducedForm::of_map(CPMap::identity(3));
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = gaussian_matrix(3, 3, rng);
    const Matrix b = gaussian_matrix(3, 3, rng);
    CHECK(op_norm(form_eval(f, a, b)) <= 1e-12);
  }
  CHECK_THROWS_AS(form_eval(f, Matrix::Identity(2, 2), Matrix::Identity(3, 3)), DimensionError);
}

TEST_CASE("induced forms are positive, hermitian and sesquilinear") {
  Rng rng(52);
  Real worst_herm = 0.0;
  Real worst_min = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 2 + trial % 3;
    const InducedForm f = InducedForm::of_map(random_unital_cpmap(d, d, 1 + trial % 4, rng));
    const Matrix a = gaussian_matrix(d, d, rng);
    const Matrix b = gaussian_matrix(d, d, rng);
    worst_herm = std::max(worst_herm, op_norm(Matrix(f(a, b).adjoint() - f(b, a))));
    worst_min = std::min(worst_min, min_eigenvalue(f(a, a)));

    const Complex alpha = rng.complex_gaussian();
    CHECK(max_abs_diff(f(Matrix(alpha * a), b), std::conj(alpha) * f(a, b)) <= 1e-10);
    CHECK(max_abs_diff(f(a, Matrix(alpha * b)), alpha * f(a, b)) <= 1e-10);
  }
  CHECK(worst_herm <= 1e-12);
  CHECK(worst_min >= -1e-9);
}

TEST_CASE("coding forms are positive") {
  Rng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const Index d = 2 + trial % 3;
    const CodingScheme s = random_scheme(d, 1 + trial % 6, 1200 + trial);
    const Matrix a = gaussian_matrix(d, d, rng);
    const Matrix composite = InducedForm::of_composite(s)(a, a);
    const Matrix coding = InducedForm::of_coding(s)(a, a);
    CHECK(min_eigenvalue(composite) >= -1e-9);
    CHECK(min_eigenvalue(coding) >= -1e-9);
    // (X,X)_form ≤ (X,X)_CD for coding composites.
    CHECK(min_eigenvalue(Matrix(composite - coding)) >= -1e-9);
  }
}

TEST_CASE("lemma1_check") {
  Rng rng(54);
  const InducedForm f = InducedForm::of_map(random_unital_cpmap(3, 3, 2, rng));
  SUBCASE("diagonal case") {
    const Matrix a = gaussian_matrix(3, 3, rng);
    const Lemma1Result r = lemma1_check(f, a, a);
    CHECK(r.pass);
    CHECK(std::abs(r.lhs_re - r.rhs) <= 1e-9 * std::max(1.0, r.rhs));
    CHECK(r.lhs_im <= 1e-18);
  }
  SUBCASE("matches a direct norm computation") {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix a = gaussian_matrix(3, 3, rng);
      const Matrix b = gaussian_matrix(3, 3, rng);
      const Matrix ab = f(a, b);
      const Matrix re = (ab + ab.adjoint()) / 2.0;
      const Matrix im = (ab - ab.adjoint()) / Complex(0, 2);
      const Lemma1Result r = lemma1_check(f, a, b);
      CHECK(std::abs(r.lhs_re - std::pow(svd_norm(re), 2)) <= 1e-9);
      CHECK(std::abs(r.lhs_im - std::pow(svd_norm(im), 2)) <= 1e-9);
      CHECK(std::abs(r.rhs - svd_norm(f(a, a)) * svd_norm(f(b, b))) <= 1e-9);
      CHECK(r.pass);
    }
  }
  SUBCASE("degenerate carrier") {
    const InducedForm id = InducedForm::of_map(CPMap::identity(3));
    const Lemma1Result r = lemma1_check(id, gaussian_matrix(3, 3, rng), gaussian_matrix(3, 3, rng));
    CHECK(r.lhs_re <= 1e-20);
    CHECK(r.rhs <= 1e-20);
    CHECK(r.pass);
  }
}

TEST_CASE("lemma1 randomized corpus has no violations") {
  for (const Index d : {0, 2, 3, 4}) {
    const Lemma1Summary sum = lemma1_randomized(1000, d, 55 + d);
    CHECK(sum.trials == 1000);
    CHECK(sum.failures == 0);
    CHECK(sum.max_residual <= kLemmaSlack);
    CHECK(sum.min_form_eigenvalue >= -1e-9);
  }
  const Lemma1Summary a = lemma1_randomized(50, 0, 7);
  const Lemma1Summary b = lemma1_randomized(50, 0, 7);
  CHECK(a.max_residual == b.max_residual);
  CHECK_THROWS_AS(lemma1_randomized(-1, 2, 0), DomainError);
}

TEST_CASE("commutator pair") {
  for (const Index d : {2, 3, 5}) {
    const ProjectionPair p = commutator_pair(d);
    CHECK(p.x.rank() == 1);
    CHECK(p.y.rank() == 1);
    const Matrix c = commutator(p.x.matrix(), p.y.matrix());
    CHECK(std::abs(svd_norm(c) - 0.5) <= 1e-12);
    const AntihermitianSplit parts = antihermitian_split(c);
    CHECK(parts.plus.norm() <= 0.5 + 1e-12);
    CHECK(parts.minus.norm() <= 0.5 + 1e-12);
  }
  CHECK_THROWS_AS(commutator_pair(1), DomainError);
}

TEST_CASE("commutator decomposition is an exact identity") {
  const CodingScheme sic = named_scheme(SchemeName::sic_qubit);
  const ProjectionPair p = commutator_pair(2);
  CHECK(decomposition_residual(sic, p.x, p.y) <= 1e-12);
  CHECK(decomposition_residual(sic, p.x, p.x) == 0.0);

  Rng rng(56);
  Real worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 2 + trial % 3;
    const CodingScheme s = random_scheme(d, 1 + trial % 6, 1300 + trial);
    const Projection x = random_projection(d, 1 + trial % (d - 1), rng);
    const Projection y = random_projection(d, 1 + (trial / 2) % (d - 1), rng);
    worst = std::max(worst, decomposition_residual(s, x, y));
  }
  CHECK(worst <= 1e-12);
  CHECK_THROWS_AS(decomposition_residual(sic, commutator_pair(3).x, commutator_pair(3).y),
                  DimensionError);
}

TEST_CASE("bound chain") {
  SUBCASE("SIC scheme") {
    const BoundChain c = bound_chain(named_scheme(SchemeName::sic_qubit));
    CHECK(c.pass());
    CHECK(std::abs(c.delta_hat - 1.0 / 3.0) <= 1e-3);
    CHECK(c.delta_hat >= c.search_value);
    CHECK(std::abs(c.commutator_norm - 0.5) <= 1e-12);
    CHECK(c.term_disturbance <= c.disturbance_bound + 1e-9);
    CHECK(c.term_form <= c.form_bound + 1e-9);
    CHECK(c.implied_bound == cs_lower_bound());
  }
  SUBCASE("projective scheme") {
    const BoundChain c = bound_chain(named_scheme(SchemeName::projective));
    CHECK(c.pass());
    CHECK(std::abs(c.delta_hat - 0.5) <= 1e-3);
    CHECK(std::abs(c.chain_rhs - 1.0) <= 2e-3);
  }
  SUBCASE("every library scheme") {
    SearchConfig cfg;
    cfg.restarts = 8;
    cfg.refine_iters = 60;
    for (const SchemeDescriptor& desc : standard_library()) {
      INFO(to_string(desc.name), " d=", desc.d);
      CHECK(bound_chain(build(desc), cfg).pass());
    }
  }
  SUBCASE("random schemes") {
    for (int trial = 0; trial < 20; ++trial) {
      const BoundChain c = bound_chain(random_scheme(2, 1 + trial % 6, 1400 + trial));
      CHECK(c.disturbance_ok);
      CHECK(c.form_ok);
      CHECK(c.chain_ok);
      CHECK(c.theorem_ok);
    }
  }
}
