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

#pragma once

#include <cstdint>
#include <functional>

#include "qdelta/channel_algebra.hpp"
#include "qdelta/classical_coding.hpp"
#include "qdelta/delta_metrics.hpp"

namespace qdelta {

inline constexpr Real kLemmaSlack = 1e-9;

/// (3 − √5)/4, the smaller root of ½ = Δ + 2Δ(1 − Δ).
Real cs_lower_bound();

/// Operator-valued sesquilinear form induced by a unital CP map,
///
///   (A, B)_T = T(A†B) − T(A)† T(B),
///
/// conjugate-linear in A and linear in B.
class InducedForm {
 public:
  using Evaluator = std::function<Matrix(const Matrix&, const Matrix&)>;

  static InducedForm of_map(const CPMap& t);
  /// Carrier CD of a coding scheme: (A, B)_{CD}.
  static InducedForm of_composite(const CodingScheme& s);
  /// C applied to the form of D: C(D(A†B) − D(A)† D(B)), with the product
  /// taken in the commutative outcome algebra.
  static InducedForm of_coding(const CodingScheme& s);

  Index dim() const noexcept { return dim_; }
  Matrix operator()(const Matrix& a, const Matrix& b) const;

 private:
  InducedForm(Index dim, Evaluator eval) : dim_(dim), eval_(std::move(eval)) {}

  Index dim_;
  Evaluator eval_;
};

Matrix form_eval(const InducedForm& f, const Matrix& a, const Matrix& b);

struct Lemma1Result {
  Real lhs_re = 0.0;  // ‖Re(A,B)‖²
  Real lhs_im = 0.0;  // ‖Im(A,B)‖²
  Real rhs = 0.0;     // ‖(A,A)‖ ‖(B,B)‖
  bool pass = false;
};

/// Checks ‖Re(A,B)‖² ≤ ‖(A,A)‖‖(B,B)‖ and the same for Im, with 1e−9 slack.
/// Re X = (X + X†)/2, Im X = (X − X†)/2i.
Lemma1Result lemma1_check(const InducedForm& f, const Matrix& a, const Matrix& b);

/// Summary of a randomized Lemma 1 corpus.
struct Lemma1Summary {
  int trials = 0;
  int failures = 0;
  Real max_residual = 0.0;             // max over trials of max(lhs_re, lhs_im) − rhs
  Real min_form_eigenvalue = 0.0;      // min over trials of λ_min((A,A))
};

/// `trials` random (unital CP map, A, B) triples. d = 0 cycles d through
/// {2, 3, 4}. Carriers are square maps on M_d with 1 to 4 Kraus operators.
Lemma1Summary lemma1_randomized(int trials, Index d, std::uint64_t seed);

/// X = |ψ⟩⟨ψ| and Y the projection on (ψ + φ)/√2 with ψ = e₀, φ = e₁.
struct ProjectionPair {
  Projection x;
  Projection y;
};

ProjectionPair commutator_pair(Index d);

/// The four operators of the commutator decomposition
///   [X,Y] = ([X,Y] − CD([X,Y])) + C(D(XY) − D(X)D(Y)) − C(D(YX) − D(Y)D(X)).
struct CommutatorDecomposition {
  Matrix commutator;
  Matrix disturbance;
  Matrix forward;
  Matrix backward;
};

CommutatorDecomposition decompose_commutator(const CodingScheme& s, const Matrix& x,
                                             const Matrix& y);

/// ‖[X,Y] − (disturbance + forward − backward)‖
Real decomposition_residual(const CodingScheme& s, const Projection& x, const Projection& y);

/// Numerical replay of the commutator argument for one scheme.
///
/// `delta_hat` is the maximum of the inner search value and the objective at
/// the effects the argument itself uses (X, Y and the normalized parts A±/‖A±‖
/// of [X,Y]); any such value is a lower bound on Δ and an upper bound on every
/// norm the argument estimates, so the term checks are exact inequalities.
struct BoundChain {
  Real search_value = 0.0;
  Real delta_hat = 0.0;
  Real commutator_norm = 0.0;    // ‖[X,Y]‖
  Real term_disturbance = 0.0;   // ‖[X,Y] − CD([X,Y])‖
  Real term_form = 0.0;          // ‖2i Im(X,Y)‖ for the coding form
  Real disturbance_bound = 0.0;  // δ̂
  Real form_bound = 0.0;         // 2 g(δ̂), g(δ) = δ(1 − δ) capped at ¼
  Real chain_rhs = 0.0;          // δ̂ + 2 δ̂ (1 − δ̂)
  Real implied_bound = 0.0;      // (3 − √5)/4
  bool disturbance_ok = false;
  bool form_ok = false;
  bool chain_ok = false;
  bool theorem_ok = false;

  bool pass() const { return disturbance_ok && form_ok && chain_ok && theorem_ok; }
};

BoundChain bound_chain(const CodingScheme& s, const SearchConfig& cfg = {});

}  // namespace qdelta
