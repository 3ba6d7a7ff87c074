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

#include <functional>
#include <vector>

#include "qdelta/operator_core.hpp"

namespace qdelta {

inline constexpr Real kChoiTolerance = 1e-9;
inline constexpr Real kUnitalTolerance = 1e-10;

/// Completely positive map in Kraus form, Heisenberg picture:
///
///   T : M_{dim_in} → M_{dim_out},   T(A) = Σ_k K_k† A K_k,
///
/// so each Kraus operator is a dim_in × dim_out matrix. The Schrödinger
/// (predual) action T*(ρ) = Σ_k K_k ρ K_k† maps M_{dim_out} → M_{dim_in}.
class CPMap {
 public:
  CPMap(Index dim_in, Index dim_out, std::vector<Matrix> kraus);

  static CPMap identity(Index d);

  Index dim_in() const noexcept { return dim_in_; }
  Index dim_out() const noexcept { return dim_out_; }
  const std::vector<Matrix>& kraus() const noexcept { return kraus_; }

  /// ‖T(I) − I‖ ≤ tol
  bool is_unital(Real tol = kUnitalTolerance) const;

 private:
  Index dim_in_;
  Index dim_out_;
  std::vector<Matrix> kraus_;
};

/// Heisenberg action Σ K† A K.
Matrix apply(const CPMap& t, const Matrix& a);

/// Schrödinger action Σ K ρ K† on an arbitrary dim_out × dim_out matrix.
Matrix dual_apply(const CPMap& t, const Matrix& rho);

/// Schrödinger action on a state; the result is validated as a state, which
/// holds whenever t is unital.
DensityMatrix dual_apply(const CPMap& t, const DensityMatrix& rho);

/// Unnormalized Choi matrix Σ_{ij} |i⟩⟨j| ⊗ T*(|i⟩⟨j|), i, j over the
/// Schrödinger input (dim_out of the Heisenberg map). Its (i, j) block of size
/// dim_in × dim_in is T*(|i⟩⟨j|).
class ChoiMatrix {
 public:
  ChoiMatrix(Index dim_from, Index dim_to, const Matrix& m);

  const HermitianOperator& hermitian() const noexcept { return base_; }
  const Matrix& matrix() const noexcept { return base_.matrix(); }
  Index dim_from() const noexcept { return dim_from_; }
  Index dim_to() const noexcept { return dim_to_; }
  Real min_eigenvalue() const { return base_.min_eigenvalue(); }

 private:
  HermitianOperator base_;
  Index dim_from_;
  Index dim_to_;
};

using LinearAction = std::function<Matrix(const Matrix&)>;

ChoiMatrix choi(const CPMap& t);

/// Choi matrix of an arbitrary linear Schrödinger-picture action
/// M_{dim_from} → M_{dim_to}. Used for maps that have no Kraus form.
ChoiMatrix choi(Index dim_from, Index dim_to, const LinearAction& schrodinger);

bool is_cp(const ChoiMatrix& c);
bool is_cp(const CPMap& t);

/// Heisenberg composite (S ∘ T)(A) = S(T(A)); requires T.dim_out == S.dim_in.
CPMap compose(const CPMap& s, const CPMap& t);

/// T₁ ⊗ T₂ with Kraus operators K ⊗ L.
CPMap tensor(const CPMap& t1, const CPMap& t2);

/// Gaussian Kraus operators G_k rescaled to K_k = G_k S^{−1/2}, S = Σ G_k† G_k,
/// which makes the map unital. S is invertible only when
/// kraus_count * dim_in >= dim_out.
CPMap random_unital_cpmap(Index dim_in, Index dim_out, Index kraus_count, Rng& rng);

/// S^{−1/2} for a positive definite S.
Matrix inverse_sqrt(const Matrix& s);

}  // namespace qdelta
