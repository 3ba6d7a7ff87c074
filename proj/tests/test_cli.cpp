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

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <qdelta/cli.hpp>
#include <qdelta/serialization.hpp>

using qdelta::Json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = qdelta::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qdelta_cli_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string make_scheme(const std::string& name, const std::vector<std::string>& extra = {}) {
  const std::string path = scratch(name + ".json");
  std::vector<std::string> args{"scheme", "--name", name, "--out", path};
  args.insert(args.end(), extra.begin(), extra.end());
  REQUIRE(run(args).code == 0);
  return path;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == qdelta::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == qdelta::cli::kExitUsage);
  CHECK(run({"delta"}).code == qdelta::cli::kExitUsage);
  CHECK(run({"clone", "x.json"}).code == qdelta::cli::kExitUsage);
  CHECK(run({"clone", "x.json", "--M", "9"}).code == qdelta::cli::kExitUsage);
  CHECK(run({"delta", "x.json", "--form", "diamond"}).code == qdelta::cli::kExitUsage);
  CHECK(run({"scheme", "--name", "sic"}).code == qdelta::cli::kExitUsage);
  CHECK(run({"--help"}).code == qdelta::cli::kExitOk);
}

TEST_CASE("missing and malformed files exit with 1 and a JSON error") {
  const Outcome missing = run({"delta", scratch("missing.json")});
  CHECK(missing.code == qdelta::cli::kExitValidation);
  CHECK(missing.json().at("invariant") == "io");
  CHECK(missing.json().contains("error"));

  const std::string bad = scratch("bad.json");
  std::ofstream(bad) << "[1, 2";
  CHECK(run({"validate", bad}).json().at("invariant") == "json_syntax");

  Json s = Json::parse(run({"scheme", "--name", "sic_qubit", "--out", scratch("s.json")}).out);
  Json doc = qdelta::to_json(qdelta::read_scheme_file(s.at("out").get<std::string>()));
  doc["effects"][1]["re"][0][0] = doc["effects"][1]["re"][0][0].get<double>() + 0.1;
  doc["effects"][1]["re"][1][1] = doc["effects"][1]["re"][1][1].get<double>() + 0.1;
  const std::string unnormalized = scratch("unnormalized.json");
  std::ofstream(unnormalized) << doc.dump();
  const Outcome o = run({"validate", unnormalized});
  CHECK(o.code == qdelta::cli::kExitValidation);
  CHECK(o.json().at("invariant") == "povm_normalization");

  CHECK(run({"scheme", "--name", "mub", "--d", "4", "--out", scratch("m4.json")}).code ==
        qdelta::cli::kExitValidation);
}

TEST_CASE("scheme and validate") {
  const std::string path = make_scheme("mub", {"--d", "3"});
  const Outcome o = run({"validate", path});
  CHECK(o.code == 0);
  CHECK(o.json().at("valid") == true);
  CHECK(o.json().at("d") == 3);
  CHECK(o.json().at("n") == 12);
  const std::string r = make_scheme("random", {"--d", "2", "--n", "5", "--seed", "4"});
  CHECK(run({"validate", r}).json().at("n") == 5);
}

TEST_CASE("SIC scheme passes both bound checks") {
  const std::string path = make_scheme("sic_qubit");
  const Outcome o = run({"bounds", path});
  CHECK(o.code == 0);
  const Json j = o.json();
  CHECK(std::abs(j.at("delta_hat").get<double>() - 1.0 / 3.0) <= 1e-3);
  CHECK(j.at("cs_check") == "pass");
  CHECK(j.at("cloning_check") == "pass");
  CHECK(std::abs(j.at("cs_bound").get<double>() - 0.19098300562505258) <= 1e-15);
  CHECK(std::abs(j.at("cloning_bound").get<double>() - 1.0 / 3.0) <= 1e-15);
  CHECK(j.at("chain").at("pass") == true);
}

TEST_CASE("delta forms") {
  const std::string path = make_scheme("trine_qubit");
  const Json effect = run({"delta", path, "--grid", "5000"}).json();
  CHECK(effect.at("witness_kind") == "effect");
  CHECK(std::abs(effect.at("value").get<double>() - 0.5) <= 1e-3);
  const Json both = run({"delta", path, "--form", "both", "--seed", "2"}).json();
  CHECK(both.at("effect").at("witness_kind") == "effect");
  CHECK(both.at("state").at("witness_kind") == "state");
  CHECK(both.at("residual").get<double>() <= 1e-3);
}

TEST_CASE("cs-check") {
  const Outcome o = run({"cs-check", "--trials", "1000", "--d", "2", "--seed", "7"});
  CHECK(o.code == 0);
  CHECK(o.json().at("failures") == 0);
  CHECK(o.json().at("trials") == 1000);
  CHECK(run({"cs-check", "--trials", "100", "--d", "0"}).json().at("failures") == 0);
}

TEST_CASE("clone") {
  const std::string path = make_scheme("sic_qubit");
  const Json j = run({"clone", path, "--M", "3"}).json();
  CHECK(j.at("M") == 3);
  CHECK(std::abs(j.at("kw_bound").get<double>() - 2.0 / 9.0) <= 1e-15);
  CHECK(j.at("marginal_max_residual").get<double>() <= 1e-12);
  CHECK(std::abs(j.at("delta_hat").get<double>() - 1.0 / 3.0) <= 1e-3);
}

TEST_CASE("optimize writes its best scheme") {
  const std::string out = scratch("opt.json");
  std::filesystem::remove(out);
  const Outcome o = run({"optimize", "--d", "2", "--n", "2", "--restarts", "2", "--iters", "50",
                         "--seed", "1", "--out", out});
  CHECK(o.code == 0);
  CHECK(o.json().at("config").at("restarts") == 2);
  CHECK(run({"validate", out}).code == 0);
}

TEST_CASE("identical commands give identical output") {
  const std::string path = make_scheme("random", {"--d", "3", "--n", "4", "--seed", "8"});
  const std::vector<std::string> args{"delta", path, "--restarts", "4", "--seed", "5"};
  const Outcome a = run(args);
  const Outcome b = run({"--threads", "2", "delta", path, "--restarts", "4", "--seed", "5"});
  CHECK(a.out == b.out);
  CHECK(run(args).out == a.out);
}

TEST_CASE("installed binary follows the exit-code contract") {
  const std::string bin = QDELTA_CLI_PATH;
  const auto exit_of = [&](const std::string& args, std::string* out = nullptr) {
    FILE* pipe = popen((bin + " " + args + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) text += buf.data();
    const int status = pclose(pipe);
    if (out != nullptr) *out = text;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  std::string out;
  CHECK(exit_of("delta " + scratch("definitely_missing.json"), &out) == 1);
  CHECK(Json::parse(out).at("invariant") == "io");
  CHECK(exit_of("") == 2);
  CHECK(exit_of("validate " + make_scheme("projective"), &out) == 0);
  CHECK(Json::parse(out).at("valid") == true);
}
