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
#include <string>

#include "qdelta/channel_algebra.hpp"
#include "qdelta/classical_coding.hpp"
#include "qdelta/operator_core.hpp"

namespace qdelta {

/// Inner maximizer settings.
///
/// For d = 2 the search evaluates `grid_points` points of a nested
/// quasi-uniform sequence on the Bloch sphere and then refines the best
/// `refine_starts` of them for up to `refine_iters` iterations each. For d ≥ 3
/// it refines `restarts` seeded random frames per projection rank. Refinement
/// stops early once its step length falls below `tol`.
struct SearchConfig {
  int grid_points = 20000;
  int restarts = 64;
  int refine_iters = 200;
  int refine_starts = 8;
  std::uint64_t seed = 0;
  Real tol = 1e-6;

  /// Throws ValidationError unless grid_points ≥ 1, restarts ≥ 1, tol > 0.
  void validate() const;
};

enum class WitnessKind { effect, state };

std::string to_string(WitnessKind kind);

/// Certified lower estimate of Δ: `value` is the objective evaluated at
/// `witness` (a projection for the effect form, a pure state for the state
/// form).
struct DeltaReport {
  Real value = 0.0;
  WitnessKind witness_kind = WitnessKind::effect;
  Matrix witness;
  std::string method;
  long evaluations = 0;
  Real tolerance = 0.0;
};

/// ‖B − CD(B)‖ at a single effect.
Real effect_objective(const CodingScheme& s, const Matrix& b);

/// D(ρ, D*C*(ρ)) at a single state.
Real state_objective(const CodingScheme& s, const DensityMatrix& rho);

/// sup over projections P of ‖P − CD(P)‖.
DeltaReport delta_effect_form(const CodingScheme& s, const SearchConfig& cfg = {});

/// Same search for an arbitrary unital Heisenberg-picture map on M_d in place
/// of CD. Evaluates every candidate through dense matrices.
DeltaReport delta_effect_form(Index d, const LinearAction& heisenberg,
                              const SearchConfig& cfg = {});

/// sup over pure states ρ of D(ρ, D*C*(ρ)).
DeltaReport delta_state_form(const CodingScheme& s, const SearchConfig& cfg = {});

/// |effect form − state form|
Real delta_forms_agree(const CodingScheme& s, const SearchConfig& cfg = {});

/// With δ_X = ‖X − CD(X)‖, checks that every eigenvalue of CD(X) lies in
/// [0, δ_X] ∪ [1 − δ_X, 1], each end widened by 1e−10.
bool spectrum_containment(const CodingScheme& s, const Projection& x);

}  // namespace qdelta
