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

#include "qdelta/channel_algebra.hpp"
#include "qdelta/operator_core.hpp"

namespace qdelta {

inline constexpr Real kPovmTolerance = 1e-10;

/// A function on the finite outcome set Ω = {0, …, n−1}.
using ClassicalVector = DenseVector<Real>;

/// Measure-and-prepare coding pair on C^d with n outcomes.
///
/// The coding map C sends a classical function f to Σ_i f(i) E_i, where the
/// effects E_i form a POVM. The decoding map D sends an operator B to the
/// function i ↦ tr(σ_i B), where σ_i is the state prepared on outcome i.
///
/// Validation symmetrizes effects and rejects (never renormalizes) a POVM
/// whose sum is further than 1e−10 from the identity.
class CodingScheme {
 public:
  CodingScheme(const std::vector<Matrix>& effects, const std::vector<Matrix>& preparations);

  Index dim() const noexcept { return dim_; }
  Index outcomes() const noexcept { return static_cast<Index>(effects_.size()); }
  const std::vector<HermitianOperator>& effects() const noexcept { return effects_; }
  const std::vector<DensityMatrix>& preparations() const noexcept { return preparations_; }

 private:
  Index dim_ = 0;
  std::vector<HermitianOperator> effects_;
  std::vector<DensityMatrix> preparations_;
};

/// C(f) = Σ f(i) E_i
Matrix c_apply(const CodingScheme& s, const ClassicalVector& f);

/// D(B)(i) = tr(σ_i B)
ClassicalVector d_apply(const CodingScheme& s, const Matrix& b);

/// CD(B) = Σ tr(σ_i B) E_i
Matrix cd_apply(const CodingScheme& s, const Matrix& b);

/// D*C*(ρ) = Σ tr(ρ E_i) σ_i
DensityMatrix measure_prepare(const CodingScheme& s, const DensityMatrix& rho);
Matrix measure_prepare(const CodingScheme& s, const Matrix& rho);

/// C and D as CP maps, with the classical algebra embedded as diagonal n×n
/// matrices. D : M_d → M_n lands on diagonal matrices; C : M_n → M_d reads
/// only the diagonal of its argument.
struct CodingMaps {
  CPMap c;
  CPMap d;
};

CodingMaps as_cpmaps(const CodingScheme& s);

}  // namespace qdelta
