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
#include <utility>
#include <vector>

#include "qdelta/classical_coding.hpp"
#include "qdelta/delta_metrics.hpp"

namespace qdelta {

/// Outer search settings. `outer_iters` is the Nelder-Mead iteration budget
/// of each restart.
struct OptimizerConfig {
  Index d = 2;
  Index n = 4;
  int restarts = 16;
  int outer_iters = 40000;
  SearchConfig inner = default_inner();
  std::uint64_t seed = 0;

  /// Inner search used while optimizing; coarser than the SearchConfig default.
  static SearchConfig default_inner();

  void validate() const;
};

struct HistoryEntry {
  long iteration = 0;
  Real value = 0.0;
};

struct OptimizationResult {
  CodingScheme best_scheme;
  Real delta_hat = 0.0;
  std::vector<HistoryEntry> history;
  OptimizerConfig config_echo;
};

/// Number of real parameters of a (d, n) scheme: 2d² per effect seed matrix
/// and 2d² per preparation factor.
Index scheme_parameter_count(Index d, Index n);

/// Maps an unconstrained real vector to a scheme:
///   E_i = S^{−1/2} A_i†A_i S^{−1/2},  S = Σ A_i†A_i
///   σ_i = L_i L_i† / tr(L_i L_i†)
/// where the first n·d² complex entries (re, im interleaved, column-major per
/// matrix) fill A_1..A_n and the rest fill L_1..L_n.
CodingScheme scheme_from_parameters(Index d, Index n, const RealVector& x);

/// Nelder-Mead minimization with dimension-adaptive coefficients.
struct NelderMeadResult {
  RealVector x;
  Real value = 0.0;
  std::vector<Real> trace;  // best value after each iteration
  long evaluations = 0;
};

NelderMeadResult nelder_mead(const std::function<Real(const RealVector&)>& f,
                             const RealVector& start, Real initial_step, int iterations);

/// Minimizes delta_effect_form over schemes with fixed (d, n). Always returns
/// the best scheme found; restarts combine by (value, restart index).
OptimizationResult optimize(const OptimizerConfig& cfg);

}  // namespace qdelta
