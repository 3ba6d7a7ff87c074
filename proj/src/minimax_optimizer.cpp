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

#include "qdelta/minimax_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qdelta/channel_algebra.hpp"
#include "qdelta/parallel.hpp"

namespace qdelta {
namespace {

constexpr Real kInfeasible = std::numeric_limits<Real>::infinity();

Matrix unpack_matrix(const RealVector& x, Index offset, Index d) {
  Matrix m(d, d);
  Index k = offset;
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) {
      m(i, j) = Complex(x(k), x(k + 1));
      k += 2;
    }
  }
  return m;
}

Real scheme_objective(Index d, Index n, const RealVector& x, const SearchConfig& inner) {
  try {
    return delta_effect_form(scheme_from_parameters(d, n, x), inner).value;
  } catch (const Error&) {
    return kInfeasible;
  }
}

}  // namespace

SearchConfig OptimizerConfig::default_inner() {
  SearchConfig c;
  c.grid_points = 2000;
  c.refine_starts = 4;
  c.refine_iters = 80;
  return c;
}

void OptimizerConfig::validate() const {
  if (d < 2) throw ValidationError("d", "OptimizerConfig: d must be at least 2");
  if (n < 1) throw ValidationError("n", "OptimizerConfig: n must be at least 1");
  if (restarts < 1) throw ValidationError("restarts", "OptimizerConfig: restarts must be >= 1");
  if (outer_iters < 0) throw ValidationError("outer_iters", "OptimizerConfig: outer_iters < 0");
  inner.validate();
}

Index scheme_parameter_count(Index d, Index n) { return 4 * n * d * d; }

CodingScheme scheme_from_parameters(Index d, Index n, const RealVector& x) {
  if (x.size() != scheme_parameter_count(d, n)) {
    throw DimensionError("scheme_from_parameters: expected " +
                         std::to_string(scheme_parameter_count(d, n)) + " parameters, got " +
                         std::to_string(x.size()));
  }
  const Index block = 2 * d * d;
  std::vector<Matrix> grams;
  Matrix total = Matrix::Zero(d, d);
  for (Index i = 0; i < n; ++i) {
    const Matrix a = unpack_matrix(x, i * block, d);
    grams.push_back(a.adjoint() * a);
    total += grams.back();
  }
  const Matrix scale = inverse_sqrt(total);
  std::vector<Matrix> effects;
  std::vector<Matrix> preps;
  for (Index i = 0; i < n; ++i) {
    effects.push_back(scale * grams[static_cast<std::size_t>(i)] * scale);
    const Matrix l = unpack_matrix(x, (n + i) * block, d);
    const Matrix gram = l * l.adjoint();
    const Real tr = gram.trace().real();
    if (!(tr > 0.0)) throw DomainError("scheme_from_parameters: zero preparation factor");
    preps.push_back(gram / tr);
  }
  return CodingScheme(effects, preps);
}

NelderMeadResult nelder_mead(const std::function<Real(const RealVector&)>& f,
                             const RealVector& start, Real initial_step, int iterations) {
  const Index dim = start.size();
  const Real nd = static_cast<Real>(dim);
  // Coefficients adapted to the dimension (Gao and Han).
  const Real reflect = 1.0;
  const Real expand = 1.0 + 2.0 / nd;
  const Real contract = 0.75 - 1.0 / (2.0 * nd);
  const Real shrink = 1.0 - 1.0 / nd;

  NelderMeadResult out;
  std::vector<RealVector> pts(static_cast<std::size_t>(dim + 1));
  std::vector<Real> vals(static_cast<std::size_t>(dim + 1));
  for (Index j = 0; j <= dim; ++j) {
    auto& p = pts[static_cast<std::size_t>(j)];
    p = start;
    if (j > 0) p(j - 1) += initial_step;
    vals[static_cast<std::size_t>(j)] = f(p);
  }
  out.evaluations = dim + 1;

  std::vector<std::size_t> order(pts.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<RealVector> p2;
    std::vector<Real> v2;
    for (std::size_t k : order) {
      p2.push_back(std::move(pts[k]));
      v2.push_back(vals[k]);
    }
    pts = std::move(p2);
    vals = std::move(v2);
  };
  sort_simplex();

  for (int it = 0; it < iterations; ++it) {
    const std::size_t worst = pts.size() - 1;
    RealVector centroid = RealVector::Zero(dim);
    for (std::size_t k = 0; k < worst; ++k) centroid += pts[k];
    centroid /= nd;

    const RealVector xr = centroid + reflect * (centroid - pts[worst]);
    const Real fr = f(xr);
    ++out.evaluations;
    if (fr < vals[0]) {
      const RealVector xe = centroid + expand * (xr - centroid);
      const Real fe = f(xe);
      ++out.evaluations;
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[worst - 1]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      const bool outside = fr < vals[worst];
      const RealVector xc = outside ? RealVector(centroid + contract * (xr - centroid))
                                    : RealVector(centroid - contract * (centroid - pts[worst]));
      const Real fc = f(xc);
      ++out.evaluations;
      if (fc < std::min(fr, vals[worst])) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        for (std::size_t k = 1; k < pts.size(); ++k) {
          pts[k] = pts[0] + shrink * (pts[k] - pts[0]);
          vals[k] = f(pts[k]);
        }
        out.evaluations += dim;
      }
    }
    sort_simplex();
    out.trace.push_back(vals[0]);
  }
  out.x = pts[0];
  out.value = vals[0];
  return out;
}

OptimizationResult optimize(const OptimizerConfig& cfg) {
  cfg.validate();
  const Index params = scheme_parameter_count(cfg.d, cfg.n);
  const auto restarts = static_cast<std::size_t>(cfg.restarts);
  std::vector<NelderMeadResult> runs(restarts);

  parallel_for(restarts, [&](std::size_t r) {
    Rng rng(derive_seed(cfg.seed, r));
    RealVector start(params);
    for (Index k = 0; k < params; ++k) start(k) = rng.gaussian();
    runs[r] = nelder_mead(
        [&cfg](const RealVector& x) { return scheme_objective(cfg.d, cfg.n, x, cfg.inner); },
        start, 0.5, cfg.outer_iters);
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r) {
    if (runs[r].value < runs[best].value) best = r;
  }

  std::vector<HistoryEntry> history;
  Real running = kInfeasible;
  long iteration = 0;
  for (const auto& run : runs) {
    for (Real v : run.trace) {
      if (v < running) {
        running = v;
        history.push_back({iteration, running});
      }
      ++iteration;
    }
  }

  CodingScheme scheme = scheme_from_parameters(cfg.d, cfg.n, runs[best].x);
  const Real value = delta_effect_form(scheme, cfg.inner).value;
  return {std::move(scheme), value, std::move(history), cfg};
}

}  // namespace qdelta
