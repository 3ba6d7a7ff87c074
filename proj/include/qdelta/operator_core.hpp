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

#include <Eigen/Dense>

#include "qdelta/errors.hpp"
#include "qdelta/random.hpp"

namespace qdelta {

using Real = double;
using Complex = std::complex<Real>;
using Index = Eigen::Index;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Matrix = DenseMatrix<Real>;
using Vector = DenseVector<Real>;
using RealVector = Eigen::VectorXd;
using BlochVector = Eigen::Vector3d;

inline constexpr Real kPsdTolerance = 1e-10;
inline constexpr Real kTraceTolerance = 1e-10;
inline constexpr Real kProjectionTolerance = 1e-10;
inline constexpr Real kAntihermitianTolerance = 1e-12;

// ---------------------------------------------------------------------------
// Expression-level helpers. These accept any Eigen expression.

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

template <typename DerivedA, typename DerivedB>
void require_same_shape(const Eigen::MatrixBase<DerivedA>& a,
                        const Eigen::MatrixBase<DerivedB>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
}

/// Largest singular value.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real op_norm(
    const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "op_norm");
  using Plain = typename Derived::PlainObject;
  const Plain dense = m;
  Eigen::JacobiSVD<Plain> svd(dense);
  return svd.singularValues()(0);
}

/// (M + M†) / 2
template <typename Derived>
typename Derived::PlainObject hermitian_part(const Eigen::MatrixBase<Derived>& m) {
  return (m + m.adjoint()) / typename Derived::Scalar(2);
}

/// AB − BA
template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject commutator(const Eigen::MatrixBase<DerivedA>& a,
                                          const Eigen::MatrixBase<DerivedB>& b) {
  require_square(a, "commutator");
  require_same_shape(a, b, "commutator");
  return a * b - b * a;
}

/// Kronecker product a ⊗ b; the row index of the result is (i_a · rows_b + i_b).
template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject kron(const Eigen::MatrixBase<DerivedA>& a,
                                    const Eigen::MatrixBase<DerivedB>& b) {
  typename DerivedA::PlainObject out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

// Spectral radius of a Hermitian matrix (upper triangle is not assumed; the
// matrix is read in full). 2×2 inputs use the closed form.
Real hermitian_norm(const Matrix& h);

// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const Matrix& h);

// ---------------------------------------------------------------------------
// Strong types.

/// Square complex matrix equal to its adjoint. The constructor symmetrizes its
/// input with (M + M†)/2, so the stored matrix is exactly Hermitian.
class HermitianOperator {
 public:
  explicit HermitianOperator(const Matrix& m);

  static HermitianOperator zero(Index d);
  static HermitianOperator identity(Index d);

  const Matrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

  RealVector eigenvalues() const { return hermitian_eigenvalues(m_); }
  Real min_eigenvalue() const { return eigenvalues()(0); }
  Real max_eigenvalue() const { return eigenvalues()(dim() - 1); }
  Real norm() const { return hermitian_norm(m_); }
  Real trace() const { return m_.trace().real(); }

 private:
  Matrix m_;
};

/// Positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m);

  static DensityMatrix maximally_mixed(Index d);
  /// |ψ⟩⟨ψ| for a nonzero ψ; the vector is normalized first.
  static DensityMatrix pure(const Vector& psi);

  const Matrix& matrix() const noexcept { return base_.matrix(); }
  const HermitianOperator& hermitian() const noexcept { return base_; }
  Index dim() const noexcept { return base_.dim(); }
  Real purity() const { return (matrix() * matrix()).trace().real(); }

 private:
  HermitianOperator base_;
};

/// Orthogonal projection, ‖P² − P‖ ≤ 1e−10.
class Projection {
 public:
  explicit Projection(const Matrix& m);

  /// V V† for a d×r matrix with orthonormal columns (r may be 0).
  static Projection from_frame(const Matrix& frame);

  const Matrix& matrix() const noexcept { return base_.matrix(); }
  const HermitianOperator& hermitian() const noexcept { return base_; }
  Index dim() const noexcept { return base_.dim(); }
  Index rank() const noexcept { return rank_; }

 private:
  HermitianOperator base_;
  Index rank_ = 0;
};

// ---------------------------------------------------------------------------
// Operations.

/// ½ Σ |λ_k(ρ − τ)|
Real trace_distance(const DensityMatrix& rho, const DensityMatrix& tau);

/// Parts of an antihermitian A = i(A₊ − A₋), both positive and bounded by ‖A‖.
struct AntihermitianSplit {
  HermitianOperator plus;
  HermitianOperator minus;
};

/// Splits A via the positive and negative spectral parts of −iA. Throws
/// ContractError when ‖A + A†‖ exceeds 1e−12.
AntihermitianSplit antihermitian_split(const Matrix& a);

/// ρ = (I + r·σ)/2 for |r| ≤ 1.
DensityMatrix bloch_to_state(const BlochVector& r);
/// Inverse of bloch_to_state; requires a qubit state.
BlochVector state_to_bloch(const DensityMatrix& rho);

/// The three Pauli matrices.
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();

// ---------------------------------------------------------------------------
// Seeded random inputs. The Rng& overloads continue an existing stream.

/// d×cols matrix of independent complex standard normals.
Matrix gaussian_matrix(Index rows, Index cols, Rng& rng);

/// Modified Gram-Schmidt on the columns; throws DomainError on rank deficiency.
Matrix orthonormalize_columns(const Matrix& columns);

/// Rank-r projection onto the span of r orthonormalized Gaussian columns.
Projection random_projection(Index d, Index rank, Rng& rng);
Projection random_projection(Index d, Index rank, std::uint64_t seed);

/// G G† / tr(G G†) for a d×d Gaussian G.
DensityMatrix random_density(Index d, Rng& rng);
DensityMatrix random_density(Index d, std::uint64_t seed);

/// Normalized Gaussian vector.
Vector random_unit_vector(Index d, Rng& rng);

/// Orthonormalized Gaussian square matrix.
Matrix random_unitary(Index d, Rng& rng);

/// (G + G†)/2 for a Gaussian G.
HermitianOperator random_hermitian(Index d, Rng& rng);

}  // namespace qdelta
