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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdelta/classical_coding.hpp"

namespace qdelta {

enum class SchemeName { sic_qubit, trine_qubit, projective, mub, single_outcome, random };

std::string to_string(SchemeName name);
std::optional<SchemeName> parse_scheme_name(std::string_view text);

/// Identifies a canonical scheme. `n` = 0 selects the natural outcome count
/// for the name; `seed` drives `random` and, when set, rotates the basis of
/// `projective`; `basis` (columns) overrides the `projective` basis.
struct SchemeDescriptor {
  SchemeName name = SchemeName::sic_qubit;
  Index d = 2;
  Index n = 0;
  std::optional<std::uint64_t> seed;
  std::optional<Matrix> basis;
};

/// Materializes a descriptor. Throws DomainError for unsupported (name, d, n).
///
///   sic_qubit       E_i = ½|ψ_i⟩⟨ψ_i| on the tetrahedron, σ_i = |ψ_i⟩⟨ψ_i|
///   trine_qubit     E_i = ⅔|ψ_i⟩⟨ψ_i| at 120° on the equator, σ_i = |ψ_i⟩⟨ψ_i|
///   projective      E_i = σ_i = |e_i⟩⟨e_i|
///   mub             E = |e⟩⟨e|/(d+1) over d+1 mutually unbiased bases, d ∈ {2, 3}
///   single_outcome  E = I, σ = I/d
///   random          E_i = S^{−1/2} A_i†A_i S^{−1/2}, σ_i random states
CodingScheme build(const SchemeDescriptor& desc);

/// Bases used by `mub`, each as a d×d matrix of column vectors.
std::vector<Matrix> mutually_unbiased_bases(Index d);

/// Unit Bloch vectors of the tetrahedron, (±1, ±1, ±1)/√3 with an even number
/// of minus signs.
std::vector<BlochVector> tetrahedron_directions();

/// The fixture set used across the test and acceptance suites.
std::vector<SchemeDescriptor> standard_library();

}  // namespace qdelta
