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

#include <doctest.h>

#include <cmath>

#include <qdelta/cs_inequality.hpp>
#include <qdelta/minimax_optimizer.hpp>
#include <qdelta/parallel.hpp>

#include "test_support.hpp"

using namespace qdelta;
using qdelta::testing::max_abs_diff;

namespace {

OptimizerConfig quick(Index d, Index n, int iters, int restarts = 2) {
  OptimizerConfig cfg;
  cfg.d = d;
  cfg.n = n;
  cfg.outer_iters = iters;
  cfg.restarts = restarts;
  cfg.seed = 3;
  return cfg;
}

void check_history_monotone(const OptimizationResult& r) {
  REQUIRE_FALSE(r.history.empty());
  for (std::size_t k = 1; k < r.history.size(); ++k) {
    CHECK(r.history[k].value <= r.history[k - 1].value);
    CHECK(r.history[k].iteration > r.history[k - 1].iteration);
  }
}

}  // namespace

TEST_CASE("optimizer config validation") {
  OptimizerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.d = 1;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = {};
  cfg.n = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = {};
  cfg.restarts = 0;
  CHECK_THROWS_AS(optimize(cfg), ValidationError);
  cfg = {};
  cfg.inner.tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

TEST_CASE("scheme parametrization") {
  CHECK(scheme_parameter_count(2, 4) == 64);
  CHECK(scheme_parameter_count(3, 2) == 72);
  Rng rng(81);
  for (int trial = 0; trial < 30; ++trial) {
    const Index d = 2 + trial % 3;
    const Index n = 1 + trial % 5;
    RealVector x(scheme_parameter_count(d, n));
    for (Index k = 0; k < x.size(); ++k) x(k) = rng.gaussian();
    const CodingScheme s = scheme_from_parameters(d, n, x);
    CHECK(s.dim() == d);
    CHECK(s.outcomes() == n);
    const CodingScheme again = scheme_from_parameters(d, n, x);
    CHECK(max_abs_diff(s.preparations()[0].matrix(), again.preparations()[0].matrix()) == 0.0);
  }
  CHECK_THROWS_AS(scheme_from_parameters(2, 4, RealVector::Zero(10)), DimensionError);
}

TEST_CASE("nelder_mead minimizes smooth functions") {
  SUBCASE("shifted quadratic") {
    RealVector target(6);
    target << 1, -2, 3, 0.5, -0.25, 2;
    const auto f = [&](const RealVector& x) { return (x - target).squaredNorm(); };
    const NelderMeadResult r = nelder_mead(f, RealVector::Zero(6), 1.0, 3000);
    CHECK(r.value <= 1e-10);
    CHECK((r.x - target).norm() <= 1e-5);
    CHECK(r.evaluations > 0);
    for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k] <= r.trace[k - 1]);
  }
  SUBCASE("Rosenbrock") {
    const auto f = [](const RealVector& x) {
      return 100.0 * std::pow(x(1) - x(0) * x(0), 2) + std::pow(1.0 - x(0), 2);
    };
    RealVector start(2);
    start << -1.2, 1.0;
    const NelderMeadResult r = nelder_mead(f, start, 0.5, 2000);
    CHECK(r.value <= 1e-8);
  }
  SUBCASE("zero iterations returns the start") {
    const auto f = [](const RealVector& x) { return x.squaredNorm(); };
    RealVector start = RealVector::Ones(3);
    const NelderMeadResult r = nelder_mead(f, start, 0.5, 0);
    CHECK(r.value <= 3.0);
  }
}

TEST_CASE("single outcome forces a constant channel") {
  const OptimizationResult r = optimize(quick(2, 1, 1000));
  CHECK(std::abs(r.delta_hat - 0.5) <= 1e-2);
}

TEST_CASE("optimization is deterministic") {
  const OptimizerConfig cfg = quick(2, 3, 300);
  const int saved = thread_count();
  set_thread_count(1);
  const OptimizationResult a = optimize(cfg);
  set_thread_count(3);
  const OptimizationResult b = optimize(cfg);
  set_thread_count(saved);
  CHECK(a.delta_hat == b.delta_hat);
  REQUIRE(a.history.size() == b.history.size());
  for (std::size_t k = 0; k < a.history.size(); ++k) {
    CHECK(a.history[k].iteration == b.history[k].iteration);
    CHECK(a.history[k].value == b.history[k].value);
  }
  CHECK(max_abs_diff(a.best_scheme.effects()[0].matrix(), b.best_scheme.effects()[0].matrix()) ==
        0.0);
}

TEST_CASE("optimization results respect the lower bounds") {
  for (const Index n : {2, 3, 4, 6}) {
    const OptimizerConfig cfg = quick(2, n, 600);
    const OptimizationResult r = optimize(cfg);
    INFO("n=", n);
    check_history_monotone(r);
    CHECK(r.history.back().value < r.history.front().value + 1e-15);
    CHECK(r.delta_hat >= cs_lower_bound() - 1e-3);
    CHECK(r.delta_hat >= 1.0 / 3.0 - 5e-3);
    CHECK(r.config_echo.n == n);
    CHECK(r.config_echo.outer_iters == 600);
    // Reproducible from the returned scheme.
    CHECK(std::abs(delta_effect_form(r.best_scheme, cfg.inner).value - r.delta_hat) <=
          2.0 * cfg.inner.tol);
  }
  const OptimizationResult r3 = optimize(quick(3, 3, 20, 1));
  CHECK(r3.delta_hat >= 0.5 - 5e-3);
  CHECK(r3.best_scheme.dim() == 3);
}
