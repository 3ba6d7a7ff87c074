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

#include "qdelta/cloner.hpp"

#include <string>

namespace qdelta {

ClonerSpec::ClonerSpec(CodingScheme scheme, int copies)
    : scheme_(std::move(scheme)), copies_(copies) {
  if (copies < 1) throw DomainError("ClonerSpec: number of copies must be at least 1");
}

Index multi_index(Index n, const std::vector<Index>& tuple) {
  Index idx = 0;
  for (Index i : tuple) {
    if (i < 0 || i >= n) throw DomainError("multi_index: outcome out of range");
    idx = idx * n + i;
  }
  return idx;
}

ClassicalVector k_apply(Index n, int copies, const MultiClassicalVector& f) {
  if (n < 1 || copies < 1) throw DomainError("k_apply: need n >= 1 and M >= 1");
  Index expected = 1;
  for (int m = 0; m < copies; ++m) expected *= n;
  if (f.size() != expected) {
    throw DimensionError("k_apply: function has " + std::to_string(f.size()) +
                         " entries, expected n^M = " + std::to_string(expected));
  }
  // (i, …, i) sits at i · (1 + n + … + n^{M−1}).
  Index stride = 0;
  Index power = 1;
  for (int m = 0; m < copies; ++m) {
    stride += power;
    power *= n;
  }
  ClassicalVector out(n);
  for (Index i = 0; i < n; ++i) out(i) = f(i * stride);
  return out;
}

Matrix cloner_apply(const ClonerSpec& c, const std::vector<Matrix>& inputs) {
  if (static_cast<int>(inputs.size()) != c.copies()) {
    throw DimensionError("cloner_apply: got " + std::to_string(inputs.size()) +
                         " inputs for M = " + std::to_string(c.copies()));
  }
  const CodingScheme& s = c.scheme();
  ClassicalVector weights = ClassicalVector::Ones(s.outcomes());
  for (const Matrix& b : inputs) weights = weights.cwiseProduct(d_apply(s, b));
  return c_apply(s, weights);
}

Real marginal_identity(const ClonerSpec& c, const Matrix& b, int slot) {
  if (slot < 1 || slot > c.copies()) {
    throw DomainError("marginal_identity: slot " + std::to_string(slot) + " outside [1, " +
                      std::to_string(c.copies()) + "]");
  }
  const Index d = c.scheme().dim();
  std::vector<Matrix> inputs(static_cast<std::size_t>(c.copies()), Matrix::Identity(d, d));
  inputs[static_cast<std::size_t>(slot - 1)] = b;
  return op_norm(cloner_apply(c, inputs) - cd_apply(c.scheme(), b));
}

Real kw_bound(Index d, int copies) {
  if (d < 2) throw DomainError("kw_bound: d must be at least 2");
  if (copies < 1) throw DomainError("kw_bound: M must be at least 1");
  const Real m = copies;
  const Real dd = static_cast<Real>(d);
  return (m - 1.0) / m * (dd - 1.0) / (dd + 1.0);
}

DeltaReport cloner_marginal_delta(const ClonerSpec& c, int slot, const SearchConfig& cfg) {
  if (slot < 1 || slot > c.copies()) throw DomainError("cloner_marginal_delta: invalid slot");
  const Index d = c.scheme().dim();
  const LinearAction marginal = [&c, slot, d](const Matrix& b) {
    std::vector<Matrix> inputs(static_cast<std::size_t>(c.copies()), Matrix::Identity(d, d));
    inputs[static_cast<std::size_t>(slot - 1)] = b;
    return cloner_apply(c, inputs);
  };
  return delta_effect_form(d, marginal, cfg);
}

}  // namespace qdelta
