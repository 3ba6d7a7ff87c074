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

#include "qdelta/operator_core.hpp"

#include <cmath>
#include <string>

namespace qdelta {

Real hermitian_norm(const Matrix& h) {
  require_square(h, "hermitian_norm");
  if (h.rows() == 1) return std::abs(h(0, 0).real());
  if (h.rows() == 2) {
    const Real a = h(0, 0).real();
    const Real c = h(1, 1).real();
    const Real mean = 0.5 * (a + c);
    const Real radius = std::hypot(0.5 * (a - c), std::abs(h(0, 1)));
    return std::abs(mean) + radius;
  }
  const RealVector ev = hermitian_eigenvalues(h);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

RealVector hermitian_eigenvalues(const Matrix& h) {
  require_square(h, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// ---------------------------------------------------------------------------

HermitianOperator::HermitianOperator(const Matrix& m) {
  require_square(m, "HermitianOperator");
  if (!all_finite(m)) {
    throw ValidationError("finite_entries", "HermitianOperator: non-finite entry");
  }
  m_ = hermitian_part(m);
}

HermitianOperator HermitianOperator::zero(Index d) {
  return HermitianOperator(Matrix::Zero(d, d));
}

HermitianOperator HermitianOperator::identity(Index d) {
  return HermitianOperator(Matrix::Identity(d, d));
}

DensityMatrix::DensityMatrix(const Matrix& m) : base_(m) {
  const Real tr = base_.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw ValidationError("unit_trace",
                          "DensityMatrix: trace " + std::to_string(tr) + " differs from 1");
  }
  const Real lo = base_.min_eigenvalue();
  if (lo < -kPsdTolerance) {
    throw ValidationError("positive_semidefinite",
                          "DensityMatrix: minimum eigenvalue " + std::to_string(lo));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(Index d) {
  return DensityMatrix(Matrix::Identity(d, d) / Real(d));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const Real n = psi.norm();
  if (!(n > 0.0)) throw DomainError("DensityMatrix::pure: zero vector");
  const Vector u = psi / n;
  return DensityMatrix(u * u.adjoint());
}

Projection::Projection(const Matrix& m) : base_(m) {
  const Matrix& p = base_.matrix();
  const Real defect = op_norm(p * p - p);
  if (defect > kProjectionTolerance) {
    throw ValidationError("idempotent",
                          "Projection: ||P^2 - P|| = " + std::to_string(defect));
  }
  rank_ = static_cast<Index>(std::lround(base_.trace()));
}

Projection Projection::from_frame(const Matrix& frame) {
  if (frame.cols() == 0) return Projection(Matrix::Zero(frame.rows(), frame.rows()));
  return Projection(frame * frame.adjoint());
}

// ---------------------------------------------------------------------------

Real trace_distance(const DensityMatrix& rho, const DensityMatrix& tau) {
  if (rho.dim() != tau.dim()) {
    throw DimensionError("trace_distance: dimensions " + std::to_string(rho.dim()) + " and " +
                         std::to_string(tau.dim()));
  }
  return 0.5 * hermitian_eigenvalues(rho.matrix() - tau.matrix()).cwiseAbs().sum();
}

AntihermitianSplit antihermitian_split(const Matrix& a) {
  require_square(a, "antihermitian_split");
  const Real defect = op_norm(a + a.adjoint());
  if (defect > kAntihermitianTolerance) {
    throw ContractError("antihermitian",
                        "antihermitian_split: ||A + A^dagger|| = " + std::to_string(defect));
  }
  // −iA is Hermitian; A = i(H₊ − H₋) with H = H₊ − H₋ its spectral split.
  const Matrix h = hermitian_part(Matrix(Complex(0, -1) * a));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const RealVector& ev = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();
  const RealVector pos = ev.cwiseMax(0.0);
  const RealVector neg = (-ev).cwiseMax(0.0);
  return {HermitianOperator(vecs * pos.cast<Complex>().asDiagonal() * vecs.adjoint()),
          HermitianOperator(vecs * neg.cast<Complex>().asDiagonal() * vecs.adjoint())};
}

const Matrix& pauli_x() {
  static const Matrix m = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  return m;
}

const Matrix& pauli_y() {
  static const Matrix m = (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}

const Matrix& pauli_z() {
  static const Matrix m = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  return m;
}

DensityMatrix bloch_to_state(const BlochVector& r) {
  if (!r.allFinite() || r.norm() > 1.0 + 1e-12) {
    throw DomainError("bloch_to_state: |r| = " + std::to_string(r.norm()) + " exceeds 1");
  }
  const Matrix m = 0.5 * (Matrix::Identity(2, 2) + r.x() * pauli_x() + r.y() * pauli_y() +
                          r.z() * pauli_z());
  return DensityMatrix(m);
}

BlochVector state_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw DimensionError("state_to_bloch: qubit state required, got d = " +
                         std::to_string(rho.dim()));
  }
  const Matrix& m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

// ---------------------------------------------------------------------------

Matrix gaussian_matrix(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) g(i, j) = rng.complex_gaussian();
  }
  return g;
}

Matrix orthonormalize_columns(const Matrix& columns) {
  Matrix q = columns;
  for (Index j = 0; j < q.cols(); ++j) {
    for (Index k = 0; k < j; ++k) {
      const Complex overlap = q.col(k).dot(q.col(j));
      q.col(j) -= overlap * q.col(k);
    }
    const Real n = q.col(j).norm();
    if (!(n > 1e-13)) throw DomainError("orthonormalize_columns: rank-deficient input");
    q.col(j) /= n;
  }
  return q;
}

Projection random_projection(Index d, Index rank, Rng& rng) {
  if (d < 1 || rank < 0 || rank > d) {
    throw DomainError("random_projection: rank " + std::to_string(rank) +
                      " outside [0, " + std::to_string(d) + "]");
  }
  if (rank == 0) return Projection(Matrix::Zero(d, d));
  return Projection::from_frame(orthonormalize_columns(gaussian_matrix(d, rank, rng)));
}

Projection random_projection(Index d, Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_projection(d, rank, rng);
}

DensityMatrix random_density(Index d, Rng& rng) {
  if (d < 1) throw DomainError("random_density: d must be positive");
  const Matrix g = gaussian_matrix(d, d, rng);
  const Matrix gram = g * g.adjoint();
  return DensityMatrix(gram / gram.trace().real());
}

DensityMatrix random_density(Index d, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rng);
}

Vector random_unit_vector(Index d, Rng& rng) {
  Vector v = gaussian_matrix(d, 1, rng).col(0);
  return v / v.norm();
}

Matrix random_unitary(Index d, Rng& rng) {
  return orthonormalize_columns(gaussian_matrix(d, d, rng));
}

HermitianOperator random_hermitian(Index d, Rng& rng) {
  return HermitianOperator(gaussian_matrix(d, d, rng));
}

}  // namespace qdelta
