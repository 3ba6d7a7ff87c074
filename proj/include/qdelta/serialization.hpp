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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qdelta/channel_algebra.hpp"
#include "qdelta/classical_coding.hpp"
#include "qdelta/cs_inequality.hpp"
#include "qdelta/delta_metrics.hpp"
#include "qdelta/minimax_optimizer.hpp"

namespace qdelta {

using Json = nlohmann::json;

inline constexpr int kSchemeFormatVersion = 1;

// Matrices: {"re": [[...]], "im": [[...]]}, row-major, square.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"dim_in": d, "dim_out": d', "kraus": [matrix, ...]}
Json to_json(const CPMap& t);
CPMap cpmap_from_json(const Json& j);

// {"version": 1, "d": d, "n": n, "effects": [...], "preparations": [...]}
Json to_json(const CodingScheme& s);
CodingScheme scheme_from_json(const Json& j);

Json to_json(const SearchConfig& c);
Json to_json(const DeltaReport& r);
Json to_json(const BoundChain& b);
Json to_json(const Lemma1Summary& s);
Json to_json(const OptimizerConfig& c);
Json to_json(const OptimizationResult& r);

/// Parse errors, I/O errors and scheme validation failures all surface as
/// qdelta::Error subclasses.
CodingScheme read_scheme_file(const std::filesystem::path& path);
void write_scheme_file(const std::filesystem::path& path, const CodingScheme& s);

/// Two-space indented document with a trailing newline.
std::string dump(const Json& j);

}  // namespace qdelta
