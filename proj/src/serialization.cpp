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

#include "qdelta/serialization.hpp"

#include <fstream>
#include <sstream>

namespace qdelta {
namespace {

const Json& require_field(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError("schema", std::string(context) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

Index require_int(const Json& j, const char* key, const char* context) {
  const Json& v = require_field(j, key, context);
  if (!v.is_number_integer()) {
    throw ValidationError("schema", std::string(context) + ": \"" + key + "\" must be an integer");
  }
  return v.get<Index>();
}

Json real_rows(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    // -0.0 is written as 0.0 so that reparsed documents dump identically.
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j) == 0.0 ? 0.0 : m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd rows_to_real(const Json& rows, const char* part) {
  if (!rows.is_array() || rows.empty()) {
    throw ValidationError("matrix_format", std::string("matrix: \"") + part +
                                               "\" must be a non-empty array of rows");
  }
  const auto n = static_cast<Index>(rows.size());
  Eigen::MatrixXd m(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw ValidationError("matrix_format",
                            std::string("matrix: \"") + part + "\" must be square");
    }
    for (Index j = 0; j < n; ++j) {
      const Json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) {
        throw ValidationError("matrix_format", std::string("matrix: non-numeric entry in \"") +
                                                   part + "\"");
      }
      m(i, j) = v.get<double>();
    }
  }
  return m;
}

std::vector<Matrix> matrix_list(const Json& j, const char* key, const char* context) {
  const Json& arr = require_field(j, key, context);
  if (!arr.is_array()) {
    throw ValidationError("schema", std::string(context) + ": \"" + key + "\" must be an array");
  }
  std::vector<Matrix> out;
  for (const Json& m : arr) out.push_back(matrix_from_json(m));
  return out;
}

}  // namespace

Json to_json(const Matrix& m) {
  return Json{{"re", real_rows(m.real())}, {"im", real_rows(m.imag())}};
}

Matrix matrix_from_json(const Json& j) {
  const Eigen::MatrixXd re = rows_to_real(require_field(j, "re", "matrix"), "re");
  const Eigen::MatrixXd im = rows_to_real(require_field(j, "im", "matrix"), "im");
  if (re.rows() != im.rows()) {
    throw ValidationError("matrix_format", "matrix: \"re\" and \"im\" sizes differ");
  }
  Matrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

Json to_json(const CPMap& t) {
  Json kraus = Json::array();
  for (const Matrix& k : t.kraus()) {
    kraus.push_back(Json{{"re", real_rows(k.real())}, {"im", real_rows(k.imag())}});
  }
  return Json{{"dim_in", t.dim_in()}, {"dim_out", t.dim_out()}, {"kraus", kraus}};
}

CPMap cpmap_from_json(const Json& j) {
  const Index din = require_int(j, "dim_in", "cpmap");
  const Index dout = require_int(j, "dim_out", "cpmap");
  const Json& arr = require_field(j, "kraus", "cpmap");
  if (!arr.is_array()) throw ValidationError("schema", "cpmap: \"kraus\" must be an array");
  std::vector<Matrix> kraus;
  for (const Json& k : arr) {
    // Kraus operators are rectangular (dim_in × dim_out).
    const Json& re = require_field(k, "re", "kraus");
    const Json& im = require_field(k, "im", "kraus");
    if (!re.is_array() || !im.is_array() || static_cast<Index>(re.size()) != din ||
        static_cast<Index>(im.size()) != din) {
      throw ValidationError("matrix_format", "kraus: expected dim_in rows");
    }
    Matrix m(din, dout);
    for (Index r = 0; r < din; ++r) {
      const Json& rr = re[static_cast<std::size_t>(r)];
      const Json& ir = im[static_cast<std::size_t>(r)];
      if (!rr.is_array() || !ir.is_array() || static_cast<Index>(rr.size()) != dout ||
          static_cast<Index>(ir.size()) != dout) {
        throw ValidationError("matrix_format", "kraus: expected dim_out columns");
      }
      for (Index c = 0; c < dout; ++c) {
        const Json& a = rr[static_cast<std::size_t>(c)];
        const Json& b = ir[static_cast<std::size_t>(c)];
        if (!a.is_number() || !b.is_number()) {
          throw ValidationError("matrix_format", "kraus: non-numeric entry");
        }
        m(r, c) = Complex(a.get<double>(), b.get<double>());
      }
    }
    kraus.push_back(std::move(m));
  }
  return CPMap(din, dout, std::move(kraus));
}

Json to_json(const CodingScheme& s) {
  Json effects = Json::array();
  Json preps = Json::array();
  for (const auto& e : s.effects()) effects.push_back(to_json(e.matrix()));
  for (const auto& p : s.preparations()) preps.push_back(to_json(p.matrix()));
  return Json{{"version", kSchemeFormatVersion},
              {"d", s.dim()},
              {"n", s.outcomes()},
              {"effects", effects},
              {"preparations", preps}};
}

CodingScheme scheme_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("schema", "scheme: document must be an object");
  if (require_int(j, "version", "scheme") != kSchemeFormatVersion) {
    throw ValidationError("version", "scheme: unsupported format version");
  }
  const Index d = require_int(j, "d", "scheme");
  const Index n = require_int(j, "n", "scheme");
  const std::vector<Matrix> effects = matrix_list(j, "effects", "scheme");
  const std::vector<Matrix> preps = matrix_list(j, "preparations", "scheme");
  if (static_cast<Index>(effects.size()) != n || static_cast<Index>(preps.size()) != n) {
    throw ValidationError("outcomes", "scheme: \"n\" does not match the number of effects or "
                                      "preparations");
  }
  for (const Matrix& m : effects) {
    if (m.rows() != d) throw ValidationError("dimension", "scheme: effect size differs from d");
  }
  for (const Matrix& m : preps) {
    if (m.rows() != d) {
      throw ValidationError("dimension", "scheme: preparation size differs from d");
    }
  }
  return CodingScheme(effects, preps);
}

Json to_json(const SearchConfig& c) {
  return Json{{"grid_points", c.grid_points}, {"restarts", c.restarts},
              {"refine_iters", c.refine_iters}, {"refine_starts", c.refine_starts},
              {"seed", c.seed}, {"tol", c.tol}};
}

Json to_json(const DeltaReport& r) {
  return Json{{"value", r.value},
              {"witness_kind", to_string(r.witness_kind)},
              {"witness", to_json(r.witness)},
              {"method", r.method},
              {"evaluations", r.evaluations},
              {"tolerance", r.tolerance}};
}

Json to_json(const BoundChain& b) {
  return Json{{"search_value", b.search_value},
              {"delta_hat", b.delta_hat},
              {"commutator_norm", b.commutator_norm},
              {"term_disturbance", b.term_disturbance},
              {"term_form", b.term_form},
              {"disturbance_bound", b.disturbance_bound},
              {"form_bound", b.form_bound},
              {"chain_rhs", b.chain_rhs},
              {"implied_bound", b.implied_bound},
              {"pass", b.pass()}};
}

Json to_json(const Lemma1Summary& s) {
  return Json{{"trials", s.trials},
              {"failures", s.failures},
              {"max_residual", s.max_residual},
              {"min_form_eigenvalue", s.min_form_eigenvalue}};
}

Json to_json(const OptimizerConfig& c) {
  return Json{{"d", c.d},           {"n", c.n},       {"restarts", c.restarts},
              {"outer_iters", c.outer_iters}, {"seed", c.seed}, {"inner", to_json(c.inner)}};
}

Json to_json(const OptimizationResult& r) {
  Json history = Json::array();
  for (const auto& h : r.history) history.push_back(Json{{"iteration", h.iteration}, {"value", h.value}});
  return Json{{"delta_hat", r.delta_hat},
              {"best_scheme", to_json(r.best_scheme)},
              {"history", history},
              {"config", to_json(r.config_echo)}};
}

CodingScheme read_scheme_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("io", "cannot open scheme file " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ValidationError("json_syntax", path.string() + ": " + e.what());
  }
  return scheme_from_json(j);
}

void write_scheme_file(const std::filesystem::path& path, const CodingScheme& s) {
  std::ofstream out(path);
  if (!out) throw ValidationError("io", "cannot write scheme file " + path.string());
  out << dump(to_json(s));
  if (!out) throw ValidationError("io", "write failed for " + path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qdelta
