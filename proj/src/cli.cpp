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

#include "qdelta/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qdelta/cloner.hpp"
#include "qdelta/cs_inequality.hpp"
#include "qdelta/delta_metrics.hpp"
#include "qdelta/minimax_optimizer.hpp"
#include "qdelta/parallel.hpp"
#include "qdelta/scheme_library.hpp"
#include "qdelta/serialization.hpp"

namespace qdelta::cli {
namespace {

constexpr Real kCloningSlack = 5e-3;
constexpr Real kTheoremSlack = 1e-6;

struct SearchOptions {
  int grid = SearchConfig{}.grid_points;
  int restarts = SearchConfig{}.restarts;
  std::uint64_t seed = 0;
  Real tol = SearchConfig{}.tol;

  SearchConfig config() const {
    SearchConfig c;
    c.grid_points = grid;
    c.restarts = restarts;
    c.seed = seed;
    c.tol = tol;
    return c;
  }
};

void add_search_options(CLI::App* cmd, SearchOptions& opts) {
  cmd->add_option("--grid", opts.grid, "Bloch-sphere grid points (d = 2)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--restarts", opts.restarts, "Random restarts per rank (d >= 3)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "Search seed");
  cmd->add_option("--tol", opts.tol, "Refinement step tolerance")->check(CLI::PositiveNumber);
}

Json error_json(const std::string& message, const std::string& invariant) {
  return Json{{"error", message}, {"invariant", invariant}};
}

Json delta_report_pair(const CodingScheme& s, const SearchConfig& cfg, const std::string& form) {
  if (form == "effect") return to_json(delta_effect_form(s, cfg));
  if (form == "state") return to_json(delta_state_form(s, cfg));
  const DeltaReport effect = delta_effect_form(s, cfg);
  const DeltaReport state = delta_state_form(s, cfg);
  return Json{{"effect", to_json(effect)},
              {"state", to_json(state)},
              {"residual", std::abs(effect.value - state.value)}};
}

Json bounds_report(const CodingScheme& s, const SearchConfig& cfg, bool& all_pass) {
  const BoundChain chain = bound_chain(s, cfg);
  const Real cloning = (Real(s.dim()) - 1.0) / (Real(s.dim()) + 1.0);
  const bool cs_ok = chain.search_value >= cs_lower_bound() - kTheoremSlack && chain.pass();
  const bool cloning_ok = chain.search_value >= cloning - kCloningSlack;
  all_pass = cs_ok && cloning_ok;
  return Json{{"d", s.dim()},
              {"n", s.outcomes()},
              {"delta_hat", chain.search_value},
              {"cs_bound", cs_lower_bound()},
              {"cloning_bound", cloning},
              {"cs_check", cs_ok ? "pass" : "fail"},
              {"cloning_check", cloning_ok ? "pass" : "fail"},
              {"chain", to_json(chain)}};
}

// Residual of the marginal identity over every slot and a fixed operator set:
// the d² matrix units and eight seeded Gaussian matrices.
Real clone_marginal_residual(const ClonerSpec& c) {
  const Index d = c.scheme().dim();
  std::vector<Matrix> probes;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      Matrix u = Matrix::Zero(d, d);
      u(i, j) = 1.0;
      probes.push_back(u);
    }
  }
  Rng rng(0);
  for (int k = 0; k < 8; ++k) probes.push_back(gaussian_matrix(d, d, rng));
  Real worst = 0.0;
  for (int slot = 1; slot <= c.copies(); ++slot) {
    for (const Matrix& b : probes) worst = std::max(worst, marginal_identity(c, b, slot));
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qdelta: classical coding of quantum states, deviation bounds and searches",
               "qdelta"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: QDELTA_THREADS or all cores)");

  std::string scheme_path;
  SearchOptions search;

  auto* validate = app.add_subcommand("validate", "Validate a scheme file");
  validate->add_option("scheme", scheme_path, "Scheme JSON file")->required();

  std::string form = "effect";
  auto* delta = app.add_subcommand("delta", "Estimate the worst-case deviation of a scheme");
  delta->add_option("scheme", scheme_path, "Scheme JSON file")->required();
  delta->add_option("--form", form, "effect, state or both")
      ->check(CLI::IsMember({"effect", "state", "both"}));
  add_search_options(delta, search);

  auto* bounds = app.add_subcommand("bounds", "Check both lower bounds for a scheme");
  bounds->add_option("scheme", scheme_path, "Scheme JSON file")->required();
  add_search_options(bounds, search);

  int trials = 1000;
  Index cs_dim = 2;
  auto* cs_check = app.add_subcommand("cs-check", "Randomized operator Cauchy-Schwarz check");
  cs_check->add_option("--trials", trials, "Number of random triples")
      ->check(CLI::NonNegativeNumber);
  cs_check->add_option("--d", cs_dim, "Dimension (0 cycles through 2, 3, 4)")
      ->check(CLI::Range(0, 16));
  cs_check->add_option("--seed", search.seed, "Corpus seed");

  int copies = 2;
  auto* clone = app.add_subcommand("clone", "Cloner built from a scheme");
  clone->add_option("scheme", scheme_path, "Scheme JSON file")->required();
  clone->add_option("--M", copies, "Number of copies (1..8)")
      ->required()
      ->check(CLI::Range(1, kMaxCopies));
  add_search_options(clone, search);

  std::string name;
  Index scheme_d = 2;
  Index scheme_n = 0;
  std::optional<std::uint64_t> scheme_seed;
  std::string out_path;
  auto* scheme = app.add_subcommand("scheme", "Write a named scheme to a file");
  scheme->add_option("--name", name, "sic_qubit, trine_qubit, projective, mub, single_outcome "
                                     "or random")
      ->required()
      ->check(CLI::IsMember(
          {"sic_qubit", "trine_qubit", "projective", "mub", "single_outcome", "random"}));
  scheme->add_option("--d", scheme_d, "Hilbert-space dimension")->check(CLI::Range(2, 16));
  scheme->add_option("--n", scheme_n, "Outcome count (0: natural for the name)")
      ->check(CLI::NonNegativeNumber);
  scheme->add_option("--seed", scheme_seed, "Seed (random, projective)");
  scheme->add_option("--out", out_path, "Output file")->required();

  OptimizerConfig opt;
  std::string opt_out;
  auto* optimize_cmd = app.add_subcommand("optimize", "Search for schemes with small deviation");
  optimize_cmd->add_option("--d", opt.d, "Hilbert-space dimension")
      ->required()
      ->check(CLI::Range(2, 16));
  optimize_cmd->add_option("--n", opt.n, "Outcome count")->required()->check(CLI::PositiveNumber);
  optimize_cmd->add_option("--restarts", opt.restarts, "Independent restarts")
      ->check(CLI::PositiveNumber);
  optimize_cmd->add_option("--iters", opt.outer_iters, "Simplex iterations per restart")
      ->check(CLI::NonNegativeNumber);
  optimize_cmd->add_option("--seed", opt.seed, "Seed");
  optimize_cmd->add_option("--out", opt_out, "Write the best scheme to this file");

  std::vector<std::string> argv_storage{"qdelta"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (threads > 0) set_thread_count(threads);

  try {
    if (*validate) {
      const CodingScheme s = read_scheme_file(scheme_path);
      out << dump(Json{{"valid", true}, {"d", s.dim()}, {"n", s.outcomes()}});
      return kExitOk;
    }
    if (*delta) {
      const CodingScheme s = read_scheme_file(scheme_path);
      out << dump(delta_report_pair(s, search.config(), form));
      return kExitOk;
    }
    if (*bounds) {
      const CodingScheme s = read_scheme_file(scheme_path);
      bool all_pass = false;
      out << dump(bounds_report(s, search.config(), all_pass));
      if (!all_pass) err << "bound check failed\n";
      return all_pass ? kExitOk : kExitValidation;
    }
    if (*cs_check) {
      const Lemma1Summary summary = lemma1_randomized(trials, cs_dim, search.seed);
      Json j = to_json(summary);
      j["d"] = cs_dim;
      j["seed"] = search.seed;
      out << dump(j);
      return summary.failures == 0 ? kExitOk : kExitValidation;
    }
    if (*clone) {
      const ClonerSpec c(read_scheme_file(scheme_path), copies);
      const DeltaReport marginal = cloner_marginal_delta(c, 1, search.config());
      out << dump(Json{{"M", copies},
                       {"d", c.scheme().dim()},
                       {"n", c.scheme().outcomes()},
                       {"kw_bound", kw_bound(c.scheme().dim(), copies)},
                       {"marginal_max_residual", clone_marginal_residual(c)},
                       {"delta_hat", marginal.value}});
      return kExitOk;
    }
    if (*scheme) {
      SchemeDescriptor desc;
      desc.name = *parse_scheme_name(name);
      desc.d = scheme_d;
      desc.n = scheme_n;
      desc.seed = scheme_seed;
      const CodingScheme s = build(desc);
      write_scheme_file(out_path, s);
      out << dump(Json{{"name", name}, {"d", s.dim()}, {"n", s.outcomes()}, {"out", out_path}});
      return kExitOk;
    }
    if (*optimize_cmd) {
      const OptimizationResult result = optimize(opt);
      if (!opt_out.empty()) write_scheme_file(opt_out, result.best_scheme);
      err << "best delta_hat " << result.delta_hat << "\n";
      out << dump(to_json(result));
      return kExitOk;
    }
  } catch (const Error& e) {
    out << dump(error_json(e.what(), e.invariant()));
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    out << dump(error_json(e.what(), "internal"));
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace qdelta::cli
