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

#include "qdelta/delta_metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <vector>

#include "qdelta/parallel.hpp"

namespace qdelta {
namespace {

constexpr Real kContainmentSlack = 1e-10;

// ---------------------------------------------------------------------------
// Qubit search on the Bloch sphere.

// Point k of the R2 low-discrepancy sequence mapped area-preservingly onto the
// unit sphere. The sequence is nested: the first N points of a larger grid are
// exactly the grid of size N.
Eigen::Vector3d sphere_point(long k) {
  constexpr Real plastic = 1.32471795724474602596;
  constexpr Real a1 = 1.0 / plastic;
  constexpr Real a2 = 1.0 / (plastic * plastic);
  const Real u = std::fmod(0.5 + a1 * static_cast<Real>(k), 1.0);
  const Real v = std::fmod(0.5 + a2 * static_cast<Real>(k), 1.0);
  const Real z = 2.0 * u - 1.0;
  const Real r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const Real phi = 2.0 * std::numbers::pi * v;
  return {r * std::cos(phi), r * std::sin(phi), z};
}

Matrix bloch_projector(const Eigen::Vector3d& n) {
  return 0.5 * (Matrix::Identity(2, 2) + n.x() * pauli_x() + n.y() * pauli_y() +
                n.z() * pauli_z());
}

struct SphereCandidate {
  Real value = -1.0;
  Eigen::Vector3d point = Eigen::Vector3d::UnitZ();
  long evaluations = 0;
};

// Prefers the larger value, then the lower candidate index.
template <typename Candidate>
std::size_t best_index(const std::vector<Candidate>& cands) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    if (cands[i].value > cands[best].value) best = i;
  }
  return best;
}

// Antithetic random-direction hill climb on the sphere with an adaptive step.
template <typename Objective>
SphereCandidate refine_on_sphere(const Objective& f, SphereCandidate start, Real step,
                                 const SearchConfig& cfg, std::uint64_t stream) {
  Rng rng(derive_seed(cfg.seed, stream));
  SphereCandidate cur = start;
  for (int it = 0; it < cfg.refine_iters && step >= cfg.tol; ++it) {
    Eigen::Vector3d g(rng.gaussian(), rng.gaussian(), rng.gaussian());
    g -= g.dot(cur.point) * cur.point;
    const Real gn = g.norm();
    if (!(gn > 0.0)) continue;
    g /= gn;
    const Eigen::Vector3d plus = (cur.point + step * g).normalized();
    const Eigen::Vector3d minus = (cur.point - step * g).normalized();
    const Real fp = f(plus);
    const Real fm = f(minus);
    cur.evaluations += 2;
    if (fp > cur.value || fm > cur.value) {
      if (fp >= fm) {
        cur.value = fp;
        cur.point = plus;
      } else {
        cur.value = fm;
        cur.point = minus;
      }
      step = std::min(step * 1.5, 0.5);
    } else {
      step *= 0.7;
    }
  }
  return cur;
}

// Grids are shared between calls; the sequence is nested, so one growing
// table serves every size.
std::shared_ptr<const std::vector<Eigen::Vector3d>> sphere_grid(long n) {
  static std::mutex mutex;
  static std::shared_ptr<const std::vector<Eigen::Vector3d>> cache;
  std::lock_guard lock(mutex);
  if (!cache || static_cast<long>(cache->size()) < n) {
    auto grid = std::make_shared<std::vector<Eigen::Vector3d>>();
    grid->reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) grid->push_back(sphere_point(k));
    cache = std::move(grid);
  }
  return cache;
}

template <typename Objective>
SphereCandidate search_sphere(const Objective& f, const SearchConfig& cfg) {
  const long n = cfg.grid_points;
  const auto grid = sphere_grid(n);
  std::vector<Real> values(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    values[static_cast<std::size_t>(k)] = f((*grid)[static_cast<std::size_t>(k)]);
  }

  std::vector<long> order(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = k;
  const std::size_t starts = std::min<std::size_t>(std::max(cfg.refine_starts, 1), order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<long>(starts), order.end(),
                    [&](long a, long b) {
                      const Real va = values[static_cast<std::size_t>(a)];
                      const Real vb = values[static_cast<std::size_t>(b)];
                      return va > vb || (va == vb && a < b);
                    });

  // Typical spacing of an n-point quasi-uniform grid on the unit sphere.
  const Real step = std::min(0.5, 2.0 * std::sqrt(4.0 * std::numbers::pi / Real(n)));
  std::vector<SphereCandidate> refined(starts);
  parallel_for(starts, [&](std::size_t i) {
    const long k = order[i];
    SphereCandidate start{values[static_cast<std::size_t>(k)], (*grid)[static_cast<std::size_t>(k)], 0};
    refined[i] = refine_on_sphere(f, start, step, cfg, static_cast<std::uint64_t>(i));
  });

  SphereCandidate best = refined[best_index(refined)];
  best.evaluations = n;
  for (const auto& r : refined) best.evaluations += r.evaluations;
  return best;
}

// Closed-form qubit objectives. With E_i = e0_i I + e_i·σ and
// σ_i = (I + s_i·σ)/2:
//   P(n) − CD(P(n)) = (½ − (q0 + t·n)/2) I + (n/2 − (q + Tᵀn)/2)·σ
//   ρ(r) − D*C*(ρ(r)) = (½ − (q0 + q·r)/2) I + (r/2 − (t + T r)/2)·σ
// where q0 = Σ e0_i, q = Σ e_i, t = Σ e0_i s_i, T = Σ s_i e_iᵀ.
struct QubitModel {
  Real q0 = 0.0;
  Eigen::Vector3d q = Eigen::Vector3d::Zero();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
  Eigen::Matrix3d big_t = Eigen::Matrix3d::Zero();

  explicit QubitModel(const CodingScheme& s) {
    const std::array<const Matrix*, 3> paulis{&pauli_x(), &pauli_y(), &pauli_z()};
    for (Index i = 0; i < s.outcomes(); ++i) {
      const Matrix& e = s.effects()[i].matrix();
      const Matrix& p = s.preparations()[i].matrix();
      const Real e0 = 0.5 * e.trace().real();
      Eigen::Vector3d ev;
      Eigen::Vector3d sv;
      for (int a = 0; a < 3; ++a) {
        ev(a) = 0.5 * (e * *paulis[a]).trace().real();
        sv(a) = (p * *paulis[a]).trace().real();
      }
      q0 += e0;
      q += ev;
      t += e0 * sv;
      big_t += sv * ev.transpose();
    }
  }

  // |c| + |v| is the operator norm of c I + v·σ.
  Real effect(const Eigen::Vector3d& n) const {
    const Real c = 0.5 - 0.5 * (q0 + t.dot(n));
    const Eigen::Vector3d v = 0.5 * n - 0.5 * (q + big_t.transpose() * n);
    return std::abs(c) + v.norm();
  }

  // ½(|c + |v|| + |c − |v||) is half the trace norm of c I + v·σ.
  Real state(const Eigen::Vector3d& r) const {
    const Real c = 0.5 - 0.5 * (q0 + q.dot(r));
    const Real v = (0.5 * r - 0.5 * (t + big_t * r)).norm();
    return 0.5 * (std::abs(c + v) + std::abs(c - v));
  }
};

std::string sphere_method(const SearchConfig& cfg, const char* route) {
  std::ostringstream os;
  os << "bloch-r2-grid(" << cfg.grid_points << ")+refine(" << cfg.refine_starts << "x"
     << cfg.refine_iters << ")/" << route;
  return os.str();
}

std::string frame_method(const SearchConfig& cfg, const char* route) {
  std::ostringstream os;
  os << "multistart-frames(" << cfg.restarts << "/rank)+refine(" << cfg.refine_iters << ")/"
     << route;
  return os.str();
}

// ---------------------------------------------------------------------------
// General-dimension search over d×r orthonormal frames.

struct FrameCandidate {
  Real value = -1.0;
  Matrix frame;
  long evaluations = 0;
};

template <typename Objective>
FrameCandidate refine_frame(const Objective& f, Matrix frame, const SearchConfig& cfg,
                            std::uint64_t stream) {
  Rng rng(derive_seed(cfg.seed, stream));
  FrameCandidate cur{f(frame), frame, 1};
  Real step = 0.3;
  for (int it = 0; it < cfg.refine_iters && step >= cfg.tol; ++it) {
    Matrix g = gaussian_matrix(frame.rows(), frame.cols(), rng);
    g /= g.norm();
    const Matrix plus = orthonormalize_columns(cur.frame + step * g);
    const Matrix minus = orthonormalize_columns(cur.frame - step * g);
    const Real fp = f(plus);
    const Real fm = f(minus);
    cur.evaluations += 2;
    if (fp > cur.value || fm > cur.value) {
      if (fp >= fm) {
        cur.value = fp;
        cur.frame = plus;
      } else {
        cur.value = fm;
        cur.frame = minus;
      }
      step = std::min(step * 1.5, 1.0);
    } else {
      step *= 0.7;
    }
  }
  return cur;
}

// Restart k of rank r uses stream (r · 2^32 + k), so a larger restart count
// evaluates a superset of the candidates of a smaller one.
template <typename Objective>
FrameCandidate search_frames(Index d, Index rank_lo, Index rank_hi, const Objective& f,
                             const SearchConfig& cfg) {
  const std::size_t per_rank = static_cast<std::size_t>(cfg.restarts);
  const std::size_t ranks = static_cast<std::size_t>(rank_hi - rank_lo + 1);
  std::vector<FrameCandidate> cands(per_rank * ranks);
  parallel_for(cands.size(), [&](std::size_t idx) {
    const Index rank = rank_lo + static_cast<Index>(idx / per_rank);
    const std::uint64_t stream =
        (static_cast<std::uint64_t>(rank) << 32) + static_cast<std::uint64_t>(idx % per_rank);
    Rng rng(derive_seed(cfg.seed ^ 0x5bd1e995ULL, stream));
    const Matrix start = orthonormalize_columns(gaussian_matrix(d, rank, rng));
    cands[idx] = refine_frame(f, start, cfg, stream);
  });
  FrameCandidate best = cands[best_index(cands)];
  best.evaluations = 0;
  for (const auto& c : cands) best.evaluations += c.evaluations;
  return best;
}

Real generic_effect_value(const LinearAction& heisenberg, const Matrix& p) {
  return hermitian_norm(hermitian_part(Matrix(p - heisenberg(p))));
}

DeltaReport finish_effect(const LinearAction& heisenberg, const Matrix& witness,
                          std::string method, long evaluations, const SearchConfig& cfg) {
  DeltaReport rep;
  rep.witness_kind = WitnessKind::effect;
  rep.witness = witness;
  rep.value = generic_effect_value(heisenberg, witness);
  rep.method = std::move(method);
  rep.evaluations = evaluations;
  rep.tolerance = cfg.tol;
  return rep;
}

}  // namespace

void SearchConfig::validate() const {
  if (grid_points < 1) throw ValidationError("grid_points", "SearchConfig: grid_points < 1");
  if (restarts < 1) throw ValidationError("restarts", "SearchConfig: restarts < 1");
  if (refine_iters < 0) throw ValidationError("refine_iters", "SearchConfig: refine_iters < 0");
  if (!(tol > 0.0)) throw ValidationError("tol", "SearchConfig: tol must be positive");
}

std::string to_string(WitnessKind kind) {
  return kind == WitnessKind::effect ? "effect" : "state";
}

Real effect_objective(const CodingScheme& s, const Matrix& b) {
  return hermitian_norm(hermitian_part(Matrix(b - cd_apply(s, b))));
}

Real state_objective(const CodingScheme& s, const DensityMatrix& rho) {
  return trace_distance(rho, measure_prepare(s, rho));
}

DeltaReport delta_effect_form(const CodingScheme& s, const SearchConfig& cfg) {
  cfg.validate();
  const LinearAction cd = [&s](const Matrix& b) { return cd_apply(s, b); };
  if (s.dim() == 2) {
    const QubitModel model(s);
    const auto best =
        search_sphere([&model](const Eigen::Vector3d& n) { return model.effect(n); }, cfg);
    return finish_effect(cd, bloch_projector(best.point), sphere_method(cfg, "closed-form"),
                         best.evaluations, cfg);
  }
  return delta_effect_form(s.dim(), cd, cfg);
}

DeltaReport delta_effect_form(Index d, const LinearAction& heisenberg, const SearchConfig& cfg) {
  cfg.validate();
  if (d < 2) throw DomainError("delta_effect_form: dimension must be at least 2");
  if (d == 2) {
    const auto best = search_sphere(
        [&heisenberg](const Eigen::Vector3d& n) {
          return generic_effect_value(heisenberg, bloch_projector(n));
        },
        cfg);
    return finish_effect(heisenberg, bloch_projector(best.point), sphere_method(cfg, "dense"),
                         best.evaluations, cfg);
  }
  const auto best = search_frames(
      d, 1, d - 1,
      [&heisenberg](const Matrix& v) {
        return generic_effect_value(heisenberg, Matrix(v * v.adjoint()));
      },
      cfg);
  return finish_effect(heisenberg, best.frame * best.frame.adjoint(),
                       frame_method(cfg, "dense"), best.evaluations, cfg);
}

DeltaReport delta_state_form(const CodingScheme& s, const SearchConfig& cfg) {
  cfg.validate();
  DeltaReport rep;
  rep.witness_kind = WitnessKind::state;
  rep.tolerance = cfg.tol;
  if (s.dim() == 2) {
    const QubitModel model(s);
    const auto best =
        search_sphere([&model](const Eigen::Vector3d& r) { return model.state(r); }, cfg);
    rep.witness = bloch_projector(best.point);
    rep.method = sphere_method(cfg, "closed-form");
    rep.evaluations = best.evaluations;
  } else {
    const auto best = search_frames(
        s.dim(), 1, 1,
        [&s](const Matrix& v) {
          const Matrix rho = v * v.adjoint();
          return 0.5 *
                 hermitian_eigenvalues(hermitian_part(Matrix(rho - measure_prepare(s, rho))))
                     .cwiseAbs()
                     .sum();
        },
        cfg);
    rep.witness = best.frame * best.frame.adjoint();
    rep.method = frame_method(cfg, "dense");
    rep.evaluations = best.evaluations;
  }
  rep.value = state_objective(s, DensityMatrix(rep.witness));
  return rep;
}

Real delta_forms_agree(const CodingScheme& s, const SearchConfig& cfg) {
  return std::abs(delta_effect_form(s, cfg).value - delta_state_form(s, cfg).value);
}

bool spectrum_containment(const CodingScheme& s, const Projection& x) {
  if (x.dim() != s.dim()) {
    throw DimensionError("spectrum_containment: projection dimension " +
                         std::to_string(x.dim()) + ", scheme dimension " +
                         std::to_string(s.dim()));
  }
  const Matrix image = hermitian_part(cd_apply(s, x.matrix()));
  const Real delta_x = hermitian_norm(hermitian_part(Matrix(x.matrix() - image)));
  const RealVector ev = hermitian_eigenvalues(image);
  for (Index k = 0; k < ev.size(); ++k) {
    const Real l = ev(k);
    const bool low = l >= -kContainmentSlack && l <= delta_x + kContainmentSlack;
    const bool high = l >= 1.0 - delta_x - kContainmentSlack && l <= 1.0 + kContainmentSlack;
    if (!low && !high) return false;
  }
  return true;
}

}  // namespace qdelta
