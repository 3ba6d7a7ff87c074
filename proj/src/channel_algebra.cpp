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

#include "qdelta/channel_algebra.hpp"

#include <string>

namespace qdelta {

CPMap::CPMap(Index dim_in, Index dim_out, std::vector<Matrix> kraus)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
  if (dim_in < 1 || dim_out < 1) throw DimensionError("CPMap: dimensions must be positive");
  if (kraus_.empty()) throw ValidationError("kraus_nonempty", "CPMap: empty Kraus list");
  for (const Matrix& k : kraus_) {
    if (k.rows() != dim_in || k.cols() != dim_out) {
      throw DimensionError("CPMap: Kraus operator is " + std::to_string(k.rows()) + "x" +
                           std::to_string(k.cols()) + ", expected " + std::to_string(dim_in) +
                           "x" + std::to_string(dim_out));
    }
    if (!k.allFinite()) throw ValidationError("finite_entries", "CPMap: non-finite Kraus entry");
  }
}

CPMap CPMap::identity(Index d) { return CPMap(d, d, {Matrix::Identity(d, d)}); }

bool CPMap::is_unital(Real tol) const {
  const Matrix id_in = Matrix::Identity(dim_in_, dim_in_);
  return op_norm(apply(*this, id_in) - Matrix::Identity(dim_out_, dim_out_)) <= tol;
}

Matrix apply(const CPMap& t, const Matrix& a) {
  if (a.rows() != t.dim_in() || a.cols() != t.dim_in()) {
    throw DimensionError("apply: operand is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", map input dimension is " +
                         std::to_string(t.dim_in()));
  }
  Matrix out = Matrix::Zero(t.dim_out(), t.dim_out());
  for (const Matrix& k : t.kraus()) out.noalias() += k.adjoint() * a * k;
  return out;
}

Matrix dual_apply(const CPMap& t, const Matrix& rho) {
  if (rho.rows() != t.dim_out() || rho.cols() != t.dim_out()) {
    throw DimensionError("dual_apply: operand is " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + ", map output dimension is " +
                         std::to_string(t.dim_out()));
  }
  Matrix out = Matrix::Zero(t.dim_in(), t.dim_in());
  for (const Matrix& k : t.kraus()) out.noalias() += k * rho * k.adjoint();
  return out;
}

DensityMatrix dual_apply(const CPMap& t, const DensityMatrix& rho) {
  return DensityMatrix(dual_apply(t, rho.matrix()));
}

ChoiMatrix::ChoiMatrix(Index dim_from, Index dim_to, const Matrix& m)
    : base_(m), dim_from_(dim_from), dim_to_(dim_to) {
  if (m.rows() != dim_from * dim_to) {
    throw DimensionError("ChoiMatrix: size " + std::to_string(m.rows()) + " != " +
                         std::to_string(dim_from) + "*" + std::to_string(dim_to));
  }
}

ChoiMatrix choi(Index dim_from, Index dim_to, const LinearAction& schrodinger) {
  Matrix j = Matrix::Zero(dim_from * dim_to, dim_from * dim_to);
  for (Index r = 0; r < dim_from; ++r) {
    for (Index c = 0; c < dim_from; ++c) {
      Matrix unit = Matrix::Zero(dim_from, dim_from);
      unit(r, c) = 1.0;
      const Matrix image = schrodinger(unit);
      if (image.rows() != dim_to || image.cols() != dim_to) {
        throw DimensionError("choi: action returned a " + std::to_string(image.rows()) + "x" +
                             std::to_string(image.cols()) + " matrix");
      }
      j.block(r * dim_to, c * dim_to, dim_to, dim_to) = image;
    }
  }
  return ChoiMatrix(dim_from, dim_to, j);
}

ChoiMatrix choi(const CPMap& t) {
  return choi(t.dim_out(), t.dim_in(), [&t](const Matrix& m) { return dual_apply(t, m); });
}

bool is_cp(const ChoiMatrix& c) { return c.min_eigenvalue() >= -kChoiTolerance; }

bool is_cp(const CPMap& t) { return is_cp(choi(t)); }

CPMap compose(const CPMap& s, const CPMap& t) {
  if (t.dim_out() != s.dim_in()) {
    throw DimensionError("compose: inner map outputs dimension " + std::to_string(t.dim_out()) +
                         ", outer map expects " + std::to_string(s.dim_in()));
  }
  std::vector<Matrix> kraus;
  kraus.reserve(s.kraus().size() * t.kraus().size());
  for (const Matrix& kt : t.kraus()) {
    for (const Matrix& ks : s.kraus()) kraus.push_back(kt * ks);
  }
  return CPMap(t.dim_in(), s.dim_out(), std::move(kraus));
}

CPMap tensor(const CPMap& t1, const CPMap& t2) {
  std::vector<Matrix> kraus;
  kraus.reserve(t1.kraus().size() * t2.kraus().size());
  for (const Matrix& k : t1.kraus()) {
    for (const Matrix& l : t2.kraus()) kraus.push_back(kron(k, l));
  }
  return CPMap(t1.dim_in() * t2.dim_in(), t1.dim_out() * t2.dim_out(), std::move(kraus));
}

Matrix inverse_sqrt(const Matrix& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(s));
  const RealVector& ev = solver.eigenvalues();
  if (!(ev(0) > 0.0)) throw DomainError("inverse_sqrt: matrix is not positive definite");
  const RealVector inv = ev.cwiseSqrt().cwiseInverse();
  return solver.eigenvectors() * inv.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

CPMap random_unital_cpmap(Index dim_in, Index dim_out, Index kraus_count, Rng& rng) {
  if (kraus_count < 1) throw DomainError("random_unital_cpmap: need at least one Kraus operator");
  if (kraus_count * dim_in < dim_out) {
    throw DomainError("random_unital_cpmap: kraus_count * dim_in must be at least dim_out");
  }
  std::vector<Matrix> kraus;
  Matrix gram = Matrix::Zero(dim_out, dim_out);
  for (Index k = 0; k < kraus_count; ++k) {
    kraus.push_back(gaussian_matrix(dim_in, dim_out, rng));
    gram.noalias() += kraus.back().adjoint() * kraus.back();
  }
  const Matrix scale = inverse_sqrt(gram);
  for (Matrix& k : kraus) k = k * scale;
  return CPMap(dim_in, dim_out, std::move(kraus));
}

}  // namespace qdelta
