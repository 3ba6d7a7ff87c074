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

#include "qdelta/scheme_library.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qdelta/channel_algebra.hpp"

namespace qdelta {
namespace {

constexpr std::array<std::pair<SchemeName, std::string_view>, 6> kNames{{
    {SchemeName::sic_qubit, "sic_qubit"},
    {SchemeName::trine_qubit, "trine_qubit"},
    {SchemeName::projective, "projective"},
    {SchemeName::mub, "mub"},
    {SchemeName::single_outcome, "single_outcome"},
    {SchemeName::random, "random"},
}};

Matrix rank_one(const Vector& v) { return v * v.adjoint(); }

CodingScheme from_directions(const std::vector<BlochVector>& dirs, Real weight) {
  std::vector<Matrix> effects;
  std::vector<Matrix> preps;
  for (const BlochVector& n : dirs) {
    const Matrix p = bloch_to_state(n).matrix();
    effects.push_back(weight * p);
    preps.push_back(p);
  }
  return CodingScheme(effects, preps);
}

CodingScheme from_bases(const std::vector<Matrix>& bases) {
  const Real weight = 1.0 / static_cast<Real>(bases.size());
  std::vector<Matrix> effects;
  std::vector<Matrix> preps;
  for (const Matrix& basis : bases) {
    for (Index j = 0; j < basis.cols(); ++j) {
      const Matrix p = rank_one(basis.col(j));
      effects.push_back(weight * p);
      preps.push_back(p);
    }
  }
  return CodingScheme(effects, preps);
}

void require_qubit(const SchemeDescriptor& desc, Index natural_n) {
  if (desc.d != 2) {
    throw DomainError("build: " + to_string(desc.name) + " requires d = 2, got d = " +
                      std::to_string(desc.d));
  }
  if (desc.n != 0 && desc.n != natural_n) {
    throw DomainError("build: " + to_string(desc.name) + " has " + std::to_string(natural_n) +
                      " outcomes, got n = " + std::to_string(desc.n));
  }
}

}  // namespace

std::string to_string(SchemeName name) {
  for (const auto& [value, text] : kNames) {
    if (value == name) return std::string(text);
  }
  return "unknown";
}

std::optional<SchemeName> parse_scheme_name(std::string_view text) {
  for (const auto& [value, name] : kNames) {
    if (name == text) return value;
  }
  return std::nullopt;
}

std::vector<BlochVector> tetrahedron_directions() {
  const Real k = 1.0 / std::sqrt(3.0);
  return {BlochVector(k, k, k), BlochVector(k, -k, -k), BlochVector(-k, k, -k),
          BlochVector(-k, -k, k)};
}

std::vector<Matrix> mutually_unbiased_bases(Index d) {
  std::vector<Matrix> bases;
  if (d == 2) {
    // Eigenbases of Z, X, Y.
    const Real h = 1.0 / std::sqrt(2.0);
    const Complex i(0, 1);
    bases.push_back(Matrix::Identity(2, 2));
    bases.push_back((Matrix(2, 2) << h, h, h, -h).finished());
    bases.push_back((Matrix(2, 2) << h, h, i * h, -i * h).finished());
    return bases;
  }
  if (d == 3) {
    // Computational basis, then for k = 0, 1, 2 the vectors
    // v_{k,j}(x) = ω^{k x² + j x}/√3 with ω = e^{2πi/3}.
    bases.push_back(Matrix::Identity(3, 3));
    const Real norm = 1.0 / std::sqrt(3.0);
    for (int k = 0; k < 3; ++k) {
      Matrix b(3, 3);
      for (int j = 0; j < 3; ++j) {
        for (int x = 0; x < 3; ++x) {
          const int phase = (k * x * x + j * x) % 3;
          b(x, j) = norm * std::polar(1.0, 2.0 * std::numbers::pi * phase / 3.0);
        }
      }
      bases.push_back(b);
    }
    return bases;
  }
  throw DomainError("mutually_unbiased_bases: supported for d in {2, 3}, got d = " +
                    std::to_string(d));
}

CodingScheme build(const SchemeDescriptor& desc) {
  switch (desc.name) {
    case SchemeName::sic_qubit:
      require_qubit(desc, 4);
      return from_directions(tetrahedron_directions(), 0.5);

    case SchemeName::trine_qubit: {
      require_qubit(desc, 3);
      std::vector<BlochVector> dirs;
      for (int k = 0; k < 3; ++k) {
        const Real a = 2.0 * std::numbers::pi * k / 3.0;
        dirs.emplace_back(std::cos(a), std::sin(a), 0.0);
      }
      return from_directions(dirs, 2.0 / 3.0);
    }

    case SchemeName::projective: {
      if (desc.d < 2) throw DomainError("build: projective requires d >= 2");
      if (desc.n != 0 && desc.n != desc.d) {
        throw DomainError("build: projective has n = d outcomes");
      }
      Matrix basis = Matrix::Identity(desc.d, desc.d);
      if (desc.basis) {
        if (desc.basis->rows() != desc.d || desc.basis->cols() != desc.d) {
          throw DomainError("build: projective basis must be d x d");
        }
        basis = orthonormalize_columns(*desc.basis);
      } else if (desc.seed) {
        Rng rng(*desc.seed);
        basis = random_unitary(desc.d, rng);
      }
      return from_bases({basis});
    }

    case SchemeName::mub: {
      if (desc.d != 2 && desc.d != 3) {
        throw DomainError("build: mub requires d in {2, 3}, got d = " + std::to_string(desc.d));
      }
      if (desc.n != 0 && desc.n != desc.d * (desc.d + 1)) {
        throw DomainError("build: mub has d(d+1) outcomes");
      }
      return from_bases(mutually_unbiased_bases(desc.d));
    }

    case SchemeName::single_outcome: {
      if (desc.d < 2) throw DomainError("build: single_outcome requires d >= 2");
      if (desc.n != 0 && desc.n != 1) throw DomainError("build: single_outcome has n = 1");
      const Matrix id = Matrix::Identity(desc.d, desc.d);
      return CodingScheme({id}, {id / Real(desc.d)});
    }

    case SchemeName::random: {
      if (desc.d < 2) throw DomainError("build: random requires d >= 2");
      const Index n = desc.n == 0 ? desc.d * desc.d : desc.n;
      if (n < 1) throw DomainError("build: random requires n >= 1");
      Rng rng(desc.seed.value_or(0));
      std::vector<Matrix> grams;
      Matrix total = Matrix::Zero(desc.d, desc.d);
      for (Index i = 0; i < n; ++i) {
        const Matrix a = gaussian_matrix(desc.d, desc.d, rng);
        grams.push_back(a.adjoint() * a);
        total += grams.back();
      }
      const Matrix scale = inverse_sqrt(total);
      std::vector<Matrix> effects;
      std::vector<Matrix> preps;
      for (Index i = 0; i < n; ++i) {
        effects.push_back(scale * grams[static_cast<std::size_t>(i)] * scale);
        preps.push_back(random_density(desc.d, rng).matrix());
      }
      return CodingScheme(effects, preps);
    }
  }
  throw DomainError("build: unknown scheme name");
}

std::vector<SchemeDescriptor> standard_library() {
  std::vector<SchemeDescriptor> lib;
  lib.push_back({SchemeName::sic_qubit, 2, 0, std::nullopt, std::nullopt});
  lib.push_back({SchemeName::trine_qubit, 2, 0, std::nullopt, std::nullopt});
  lib.push_back({SchemeName::projective, 2, 0, std::nullopt, std::nullopt});
  lib.push_back({SchemeName::mub, 2, 0, std::nullopt, std::nullopt});
  lib.push_back({SchemeName::single_outcome, 2, 0, std::nullopt, std::nullopt});
  lib.push_back({SchemeName::random, 2, 4, 11, std::nullopt});
  lib.push_back({SchemeName::projective, 3, 0, std::nullopt, std::nullopt});
  lib.push_back({SchemeName::mub, 3, 0, std::nullopt, std::nullopt});
  return lib;
}

}  // namespace qdelta
