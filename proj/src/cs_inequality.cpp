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

#include "qdelta/cs_inequality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qdelta {
namespace {

constexpr Real kChainSlack = 1e-6;
constexpr Real kTermSlack = 1e-9;

void require_form_dim(const InducedForm& f, const Matrix& m) {
  if (m.rows() != f.dim() || m.cols() != f.dim()) {
    throw DimensionError("form_eval: operand is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", form acts on dimension " +
                         std::to_string(f.dim()));
  }
}

Matrix imaginary_part(const Matrix& x) { return (x - x.adjoint()) / Complex(0, 2); }

// Capped δ(1 − δ): the largest value of t(1 − t) over [0, δ] ∪ [1 − δ, 1].
Real spectral_gap_bound(Real delta) {
  const Real c = std::min(delta, 0.5);
  return c * (1.0 - c);
}

}  // namespace

// (3 − √5)/4 written as 1/(3 + √5) to avoid cancellation.
Real cs_lower_bound() { return 1.0 / (3.0 + std::sqrt(5.0)); }

InducedForm InducedForm::of_map(const CPMap& t) {
  return InducedForm(t.dim_in(), [t](const Matrix& a, const Matrix& b) {
    return Matrix(qdelta::apply(t, Matrix(a.adjoint() * b)) -
                  qdelta::apply(t, a).adjoint() * qdelta::apply(t, b));
  });
}

InducedForm InducedForm::of_composite(const CodingScheme& s) {
  return InducedForm(s.dim(), [s](const Matrix& a, const Matrix& b) {
    return Matrix(cd_apply(s, a.adjoint() * b) - cd_apply(s, a).adjoint() * cd_apply(s, b));
  });
}

InducedForm InducedForm::of_coding(const CodingScheme& s) {
  return InducedForm(s.dim(), [s](const Matrix& a, const Matrix& b) {
    const ClassicalVector inner = d_apply(s, a.adjoint() * b) -
                                  ClassicalVector(d_apply(s, a).conjugate().cwiseProduct(d_apply(s, b)));
    return c_apply(s, inner);
  });
}

Matrix InducedForm::operator()(const Matrix& a, const Matrix& b) const {
  require_form_dim(*this, a);
  require_form_dim(*this, b);
  return eval_(a, b);
}

Matrix form_eval(const InducedForm& f, const Matrix& a, const Matrix& b) { return f(a, b); }

Lemma1Result lemma1_check(const InducedForm& f, const Matrix& a, const Matrix& b) {
  const Matrix ab = f(a, b);
  const Real aa = hermitian_norm(hermitian_part(f(a, a)));
  const Real bb = hermitian_norm(hermitian_part(f(b, b)));
  Lemma1Result r;
  r.lhs_re = std::pow(hermitian_norm(hermitian_part(ab)), 2);
  r.lhs_im = std::pow(hermitian_norm(hermitian_part(imaginary_part(ab))), 2);
  r.rhs = aa * bb;
  r.pass = r.lhs_re <= r.rhs + kLemmaSlack && r.lhs_im <= r.rhs + kLemmaSlack;
  return r;
}

Lemma1Summary lemma1_randomized(int trials, Index d, std::uint64_t seed) {
  if (trials < 0) throw DomainError("lemma1_randomized: negative trial count");
  if (d != 0 && d < 1) throw DomainError("lemma1_randomized: dimension must be positive");
  Lemma1Summary sum;
  sum.trials = trials;
  sum.max_residual = -std::numeric_limits<Real>::infinity();
  sum.min_form_eigenvalue = std::numeric_limits<Real>::infinity();
  for (int k = 0; k < trials; ++k) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
    const Index dim = d == 0 ? 2 + k % 3 : d;
    const Index kraus = 1 + (k / 3) % 4;
    const InducedForm form = InducedForm::of_map(random_unital_cpmap(dim, dim, kraus, rng));
    const Matrix a = gaussian_matrix(dim, dim, rng);
    const Matrix b = gaussian_matrix(dim, dim, rng);
    const Lemma1Result r = lemma1_check(form, a, b);
    if (!r.pass) ++sum.failures;
    sum.max_residual = std::max(sum.max_residual, std::max(r.lhs_re, r.lhs_im) - r.rhs);
    sum.min_form_eigenvalue =
        std::min(sum.min_form_eigenvalue, hermitian_eigenvalues(hermitian_part(form(a, a)))(0));
  }
  if (trials == 0) {
    sum.max_residual = 0.0;
    sum.min_form_eigenvalue = 0.0;
  }
  return sum;
}

ProjectionPair commutator_pair(Index d) {
  if (d < 2) throw DomainError("commutator_pair: dimension must be at least 2");
  Vector psi = Vector::Zero(d);
  psi(0) = 1.0;
  Vector plus = Vector::Zero(d);
  plus(0) = plus(1) = 1.0 / std::sqrt(2.0);
  return {Projection(psi * psi.adjoint()), Projection(plus * plus.adjoint())};
}

CommutatorDecomposition decompose_commutator(const CodingScheme& s, const Matrix& x,
                                             const Matrix& y) {
  CommutatorDecomposition out;
  out.commutator = commutator(x, y);
  out.disturbance = out.commutator - cd_apply(s, out.commutator);
  const ClassicalVector dx = d_apply(s, x);
  const ClassicalVector dy = d_apply(s, y);
  out.forward = c_apply(s, d_apply(s, x * y) - ClassicalVector(dx.cwiseProduct(dy)));
  out.backward = c_apply(s, d_apply(s, y * x) - ClassicalVector(dy.cwiseProduct(dx)));
  return out;
}

Real decomposition_residual(const CodingScheme& s, const Projection& x, const Projection& y) {
  if (x.dim() != s.dim() || y.dim() != s.dim()) {
    throw DimensionError("decomposition_residual: projection dimension does not match scheme");
  }
  const CommutatorDecomposition t = decompose_commutator(s, x.matrix(), y.matrix());
  return op_norm(t.commutator - (t.disturbance + t.forward - t.backward));
}

BoundChain bound_chain(const CodingScheme& s, const SearchConfig& cfg) {
  const ProjectionPair pair = commutator_pair(s.dim());
  const Matrix& x = pair.x.matrix();
  const Matrix& y = pair.y.matrix();
  const CommutatorDecomposition t = decompose_commutator(s, x, y);

  BoundChain out;
  out.search_value = delta_effect_form(s, cfg).value;
  out.delta_hat = std::max({out.search_value, effect_objective(s, x), effect_objective(s, y)});
  const AntihermitianSplit parts = antihermitian_split(t.commutator);
  for (const HermitianOperator* part : {&parts.plus, &parts.minus}) {
    const Real n = part->norm();
    if (n > 0.0) {
      out.delta_hat = std::max(out.delta_hat, effect_objective(s, Matrix(part->matrix() / n)));
    }
  }

  const Real dh = out.delta_hat;
  const Matrix form_xy = InducedForm::of_coding(s)(x, y);
  out.commutator_norm = op_norm(t.commutator);
  out.term_disturbance = op_norm(t.disturbance);
  out.term_form = op_norm(Matrix(Complex(0, 2) * imaginary_part(form_xy)));
  out.disturbance_bound = dh;
  out.form_bound = 2.0 * spectral_gap_bound(dh);
  out.chain_rhs = dh + 2.0 * dh * (1.0 - dh);
  out.implied_bound = cs_lower_bound();
  out.disturbance_ok = out.term_disturbance <= out.disturbance_bound + kTermSlack;
  out.form_ok = out.term_form <= out.form_bound + kTermSlack;
  out.chain_ok = out.commutator_norm <= out.chain_rhs + kChainSlack;
  out.theorem_ok = dh >= out.implied_bound - kChainSlack;
  return out;
}

}  // namespace qdelta
