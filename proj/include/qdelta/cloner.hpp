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

#include <vector>

#include "qdelta/classical_coding.hpp"
#include "qdelta/delta_metrics.hpp"

namespace qdelta {

inline constexpr int kMaxCopies = 8;

/// 1 → M cloner T = C ∘ K ∘ D^{⊗M} built from a coding scheme.
class ClonerSpec {
 public:
  ClonerSpec(CodingScheme scheme, int copies);

  const CodingScheme& scheme() const noexcept { return scheme_; }
  int copies() const noexcept { return copies_; }

 private:
  CodingScheme scheme_;
  int copies_;
};

/// Function on Ω^M stored with the first slot most significant:
/// index(i₁, …, i_M) = Σ_m i_m n^{M−m}.
using MultiClassicalVector = DenseVector<Real>;

/// Linear index of a tuple in Ω^M.
Index multi_index(Index n, const std::vector<Index>& tuple);

/// (K f)(i) = f(i, …, i)
ClassicalVector k_apply(Index n, int copies, const MultiClassicalVector& f);

/// Σ_i (Π_m tr(σ_i B_m)) E_i, which equals C(K(D^{⊗M}(B₁ ⊗ … ⊗ B_M))).
Matrix cloner_apply(const ClonerSpec& c, const std::vector<Matrix>& inputs);

/// ‖T(I ⊗ … ⊗ B ⊗ … ⊗ I) − CD(B)‖ with B in the 1-based `slot`.
Real marginal_identity(const ClonerSpec& c, const Matrix& b, int slot);

/// (M − 1)/M · (d − 1)/(d + 1)
Real kw_bound(Index d, int copies);

/// Effect-form search applied to the single-slot marginal of the cloner,
/// B ↦ T(I ⊗ … ⊗ B ⊗ … ⊗ I) − B.
DeltaReport cloner_marginal_delta(const ClonerSpec& c, int slot, const SearchConfig& cfg = {});

}  // namespace qdelta
