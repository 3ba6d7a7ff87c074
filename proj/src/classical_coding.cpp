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

#include "qdelta/classical_coding.hpp"

#include <string>

namespace qdelta {
namespace {

void require_dim(const CodingScheme& s, const Matrix& b, const char* what) {
  if (b.rows() != s.dim() || b.cols() != s.dim()) {
    throw DimensionError(std::string(what) + ": operand is " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ", scheme dimension is " +
                         std::to_string(s.dim()));
  }
}

// tr(A B) without forming the product.
Complex trace_product(const Matrix& a, const Matrix& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace

CodingScheme::CodingScheme(const std::vector<Matrix>& effects,
                           const std::vector<Matrix>& preparations) {
  if (effects.empty()) throw ValidationError("outcomes", "CodingScheme: no outcomes");
  if (effects.size() != preparations.size()) {
    throw ValidationError("outcomes", "CodingScheme: " + std::to_string(effects.size()) +
                                          " effects but " + std::to_string(preparations.size()) +
                                          " preparations");
  }
  dim_ = effects.front().rows();
  if (dim_ < 2) throw ValidationError("dimension", "CodingScheme: dimension must be at least 2");

  Matrix total = Matrix::Zero(dim_, dim_);
  for (std::size_t i = 0; i < effects.size(); ++i) {
    if (effects[i].rows() != dim_ || effects[i].cols() != dim_ ||
        preparations[i].rows() != dim_ || preparations[i].cols() != dim_) {
      throw ValidationError("dimension",
                            "CodingScheme: outcome " + std::to_string(i) + " has wrong shape");
    }
    HermitianOperator e(effects[i]);
    const Real lo = e.min_eigenvalue();
    if (lo < -kPsdTolerance) {
      throw ValidationError("effect_psd", "CodingScheme: effect " + std::to_string(i) +
                                              " has eigenvalue " + std::to_string(lo));
    }
    total += e.matrix();
    effects_.push_back(std::move(e));
    try {
      preparations_.emplace_back(preparations[i]);
    } catch (const ValidationError& err) {
      throw ValidationError("preparation_density", "CodingScheme: preparation " +
                                                       std::to_string(i) + ": " + err.what());
    }
  }
  const Real defect = op_norm(total - Matrix::Identity(dim_, dim_));
  if (defect > kPovmTolerance) {
    throw ValidationError("povm_normalization",
                          "CodingScheme: ||sum E_i - I|| = " + std::to_string(defect));
  }
}

Matrix c_apply(const CodingScheme& s, const ClassicalVector& f) {
  if (f.size() != s.outcomes()) {
    throw DimensionError("c_apply: function has " + std::to_string(f.size()) +
                         " entries, scheme has " + std::to_string(s.outcomes()) + " outcomes");
  }
  Matrix out = Matrix::Zero(s.dim(), s.dim());
  for (Index i = 0; i < s.outcomes(); ++i) out += f(i) * s.effects()[i].matrix();
  return out;
}

ClassicalVector d_apply(const CodingScheme& s, const Matrix& b) {
  require_dim(s, b, "d_apply");
  ClassicalVector f(s.outcomes());
  for (Index i = 0; i < s.outcomes(); ++i) f(i) = trace_product(s.preparations()[i].matrix(), b);
  return f;
}

Matrix cd_apply(const CodingScheme& s, const Matrix& b) { return c_apply(s, d_apply(s, b)); }

Matrix measure_prepare(const CodingScheme& s, const Matrix& rho) {
  require_dim(s, rho, "measure_prepare");
  Matrix out = Matrix::Zero(s.dim(), s.dim());
  for (Index i = 0; i < s.outcomes(); ++i) {
    out += trace_product(rho, s.effects()[i].matrix()) * s.preparations()[i].matrix();
  }
  return out;
}

DensityMatrix measure_prepare(const CodingScheme& s, const DensityMatrix& rho) {
  return DensityMatrix(measure_prepare(s, rho.matrix()));
}

CodingMaps as_cpmaps(const CodingScheme& s) {
  const Index d = s.dim();
  const Index n = s.outcomes();

  // C: Kraus √λ |i⟩⟨a| for each eigenpair (λ, a) of E_i, shape n × d.
  std::vector<Matrix> c_kraus;
  // D: Kraus √μ |b⟩⟨i| for each eigenpair (μ, b) of σ_i, shape d × n.
  std::vector<Matrix> d_kraus;
  for (Index i = 0; i < n; ++i) {
    Eigen::SelfAdjointEigenSolver<Matrix> effect(s.effects()[i].matrix());
    for (Index a = 0; a < d; ++a) {
      const Real lambda = effect.eigenvalues()(a);
      if (lambda <= 0.0) continue;
      Matrix k = Matrix::Zero(n, d);
      k.row(i) = std::sqrt(lambda) * effect.eigenvectors().col(a).adjoint();
      c_kraus.push_back(std::move(k));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> prep(s.preparations()[i].matrix());
    for (Index b = 0; b < d; ++b) {
      const Real mu = prep.eigenvalues()(b);
      if (mu <= 0.0) continue;
      Matrix k = Matrix::Zero(d, n);
      k.col(i) = std::sqrt(mu) * prep.eigenvectors().col(b);
      d_kraus.push_back(std::move(k));
    }
  }
  return {CPMap(n, d, std::move(c_kraus)), CPMap(d, n, std::move(d_kraus))};
}

}  // namespace qdelta
