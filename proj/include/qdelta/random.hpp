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

#include <complex>
#include <cstdint>
#include <random>

namespace qdelta {

// Portable seeded generator. The engine is std::mt19937_64 (bit-exact across
// standard libraries); uniforms take the top 53 bits of each draw and
// Gaussians use the Box-Muller transform, so the stream depends only on the
// seed and not on the library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform();

  // Standard normal.
  double gaussian();

  // Real and imaginary parts independent standard normals.
  std::complex<double> complex_gaussian();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// SplitMix64 finalizer over (seed, stream); used to derive independent
// per-candidate and per-restart seeds from one user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace qdelta
