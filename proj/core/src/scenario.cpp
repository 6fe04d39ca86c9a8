// Copyright 2026 The qwc Authors
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

#include "qwc/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "qwc/random.hpp"

namespace qwc {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

const json& require_key(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail(path, "missing key \"" + key + "\"");
  }
  return obj.at(key);
}

double as_real(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(path, "non-finite number");
  return x;
}

Index as_dim(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    fail(path, "expected a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

Complex as_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {as_real(v, path), 0.0};
  if (v.is_array() && v.size() == 2) {
    return {as_real(v[0], path + "[0]"), as_real(v[1], path + "[1]")};
  }
  fail(path, "expected a complex number [re, im] or a real number");
}

ComplexVector as_vector(const json& v, Index n, const std::string& path) {
  if (!v.is_array() || static_cast<Index>(v.size()) != n) {
    fail(path, "expected a vector of length " + std::to_string(n));
  }
  ComplexVector out(n);
  for (Index i = 0; i < n; ++i) {
    out(i) = as_complex(v[static_cast<std::size_t>(i)], path + "[" + std::to_string(i) + "]");
  }
  return out;
}

ComplexMatrix generated(const std::string& name, Index rows, Index cols, Rng& rng,
                        const std::string& path) {
  const bool square = rows == cols;
  if (name == "zero") return ComplexMatrix::Zero(rows, cols);
  if (name == "identity" && square) return ComplexMatrix::Identity(rows, cols);
  if (name == "random_gaussian") return rng.gaussian(rows, cols);
  if (name == "random_contraction") return rng.contraction(rows, cols);
  if (square) {
    if (name == "random_hermitian") return rng.hermitian(rows);
    if (name == "random_skewadjoint") return rng.skewadjoint(rows);
    if (name == "random_unitary") return rng.unitary(rows);
    if (name == "random_phases") {
      return rng.hermitian_with_spectrum(rows, 0.1, 2.0 * std::numbers::pi - 0.1);
    }
  }
  fail(path, "unknown or inapplicable matrix generator \"" + name + "\"");
}

ComplexMatrix as_matrix(const json& v, Index rows, Index cols, Rng& rng,
                        const std::string& path) {
  if (v.is_string()) return generated(v.get<std::string>(), rows, cols, rng, path);
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!v.is_array() || static_cast<Index>(v.size()) != rows) {
    fail(path, "expected a " + shape + " matrix");
  }
  ComplexMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      fail(path, "expected a " + shape + " matrix");
    }
    for (Index j = 0; j < cols; ++j) {
      out(i, j) = as_complex(row[static_cast<std::size_t>(j)],
                             path + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  return out;
}

ComplexMatrix param_matrix(const json& params, const std::string& key, Index rows, Index cols,
                           Rng& rng, const std::string& path, const char* fallback) {
  const std::string p = path + "." + key;
  if (!params.contains(key)) {
    return generated(fallback, rows, cols, rng, p);
  }
  return as_matrix(params.at(key), rows, cols, rng, p);
}

StepFunction as_step(const json& v, Index dk, const std::string& path) {
  const json& bps = require_key(v, "breakpoints", path);
  const json& vals = require_key(v, "values", path);
  if (!bps.is_array() || !vals.is_array() || vals.empty()) {
    fail(path, "breakpoints and values must be arrays, values nonempty");
  }
  std::vector<double> t;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    t.push_back(as_real(bps[i], path + ".breakpoints[" + std::to_string(i) + "]"));
  }
  if (t.size() + 1 == vals.size()) {
    t.insert(t.begin(), 0.0);
  }
  if (t.size() != vals.size()) {
    fail(path, "need one value per breakpoint");
  }
  std::vector<ComplexVector> values;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    values.push_back(as_vector(vals[i], dk, path + ".values[" + std::to_string(i) + "]"));
  }
  try {
    return StepFunction(std::move(t), std::move(values));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

RQIParams rqi_params(const json& params, Index dh, Index dk, Rng& rng, const std::string& path) {
  RQIParams p;
  p.h_s = param_matrix(params, "H_S", dh, dh, rng, path, "zero");
  p.h_p = param_matrix(params, "H_P", dk + 1, dk + 1, rng, path, "zero");
  p.v_d = param_matrix(params, "V_D", dh * dk, dh, rng, path, "zero");
  p.h_sc = param_matrix(params, "H_Sc", dh * dk, dh * dk, rng, path, "zero");
  return p;
}

GeneratorFamily explicit_table(const json& params, Index dh, Index dk, Rng& rng,
                               const std::string& path) {
  const Index n = dh * (1 + dk);
  const BlockOperator limit(dh, dk, as_matrix(require_key(params, "limit", path), n, n, rng,
                                              path + ".limit"));
  const json& table = require_key(params, "table", path);
  if (!table.is_array() || table.empty()) fail(path + ".table", "expected a nonempty array");
  std::vector<std::pair<double, BlockOperator>> entries;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string p = path + ".table[" + std::to_string(i) + "]";
    const double h = as_real(require_key(table[i], "h", p), p + ".h");
    entries.emplace_back(
        h, BlockOperator(dh, dk, as_matrix(require_key(table[i], "G", p), n, n, rng, p + ".G")));
  }
  GeneratorFamily fam;
  fam.evaluator = [entries](double h) {
    for (const auto& [key, g] : entries) {
      if (std::abs(key - h) <= 1e-12 * std::max(1.0, std::abs(h))) return g;
    }
    throw ConfigError("explicit_Gh_table: no entry for h = " + std::to_string(h));
  };
  fam.limit = limit;
  fam.kind = GeneratorKind::general;
  return fam;
}

GeneratorFamily build_family(const std::string& type, const json& params, Index dh, Index dk,
                             const json& dims, Rng& rng, Index& dim_h_out) {
  const std::string path = "family.params";
  dim_h_out = dh;
  if (type == "rqi") {
    return rqi_family(rqi_params(params, dh, dk, rng, path));
  }
  if (type == "bipartite") {
    const Index d1 = as_dim(require_key(dims, "d_h1", "dims"), "dims.d_h1");
    const Index d2 = as_dim(require_key(dims, "d_h2", "dims"), "dims.d_h2");
    const RQIParams p1 = rqi_params(require_key(params, "first", path), d1, dk, rng, path + ".first");
    const RQIParams p2 =
        rqi_params(require_key(params, "second", path), d2, dk, rng, path + ".second");
    dim_h_out = d1 * d2;
    return bipartite_family(p1, p2).family;
  }
  if (type == "preservation") {
    return preservation_family(
        param_matrix(params, "C", dh * dk, dh * dk, rng, path, "identity"), dh);
  }
  if (type == "realize_isometric" || type == "realize_general") {
    BlockOperator t(dh, dk);
    if (type == "realize_general") {
      const Index n = dh * (1 + dk);
      t = BlockOperator(dh, dk, param_matrix(params, "T", n, n, rng, path, "zero"));
    }
    GeneratorParams p;
    p.z = param_matrix(params, "Z", dh, dh, rng, path, "zero");
    p.l = param_matrix(params, "L", dh * dk, dh, rng, path, "zero");
    p.w = param_matrix(params, "W", dh * dk, dh * dk, rng, path, "identity");
    return type == "realize_isometric" ? realize_isometric(p) : realize_general(t, p);
  }
  if (type == "realize_unitary_exp") {
    const ComplexMatrix z = param_matrix(params, "Z", dh, dh, rng, path, "zero");
    const ComplexMatrix l = param_matrix(params, "L", dh * dk, dh, rng, path, "zero");
    const ComplexMatrix r = param_matrix(params, "R", dh * dk, dh * dk, rng, path, "zero");
    return realize_unitary_exp(z, l, r);
  }
  if (type == "explicit_Gh_table") {
    return explicit_table(params, dh, dk, rng, path);
  }
  fail("family.type", "unknown family type \"" + type + "\"");
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("<root>", "expected an object");

  ScenarioConfig cfg;
  const json& dims = require_key(doc, "dims", "<root>");
  cfg.dim_k = as_dim(require_key(dims, "d_k", "dims"), "dims.d_k");
  const json& family = require_key(doc, "family", "<root>");
  const json& type = require_key(family, "type", "family");
  if (!type.is_string()) fail("family.type", "expected a string");
  cfg.family_type = type.get<std::string>();
  const json params = family.contains("params") ? family.at("params") : json::object();
  if (!params.is_object()) fail("family.params", "expected an object");

  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_integer() || s.get<long long>() < 0) fail("seed", "expected a nonnegative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  Rng rng(cfg.seed);

  Index family_dk = cfg.dim_k;
  std::optional<ComplexMatrix> embedding;
  if (doc.contains("noise_embedding")) {
    const json& ne = doc.at("noise_embedding");
    family_dk = as_dim(require_key(ne, "d_K", "noise_embedding"), "noise_embedding.d_K");
    if (family_dk < cfg.dim_k) fail("noise_embedding.d_K", "must be at least d_k");
    const json& j = require_key(ne, "J", "noise_embedding");
    if (j.is_string() && j.get<std::string>() == "first_columns") {
      embedding = ComplexMatrix::Identity(family_dk, cfg.dim_k);
    } else {
      embedding = as_matrix(j, family_dk, cfg.dim_k, rng, "noise_embedding.J");
    }
  }

  Index dh = 0;
  if (cfg.family_type != "bipartite") {
    dh = as_dim(require_key(dims, "d_h", "dims"), "dims.d_h");
  }
  try {
    cfg.family = build_family(cfg.family_type, params, dh, family_dk, dims, rng, cfg.dim_h);
    if (embedding) {
      cfg.family = compress_noise(cfg.family, *embedding);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const DilationRequiredError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("family: ") + e.what());
  }

  const json& tf = require_key(doc, "test_functions", "<root>");
  if (!tf.is_array() || tf.empty()) fail("test_functions", "expected a nonempty array");
  for (std::size_t i = 0; i < tf.size(); ++i) {
    const std::string p = "test_functions[" + std::to_string(i) + "]";
    cfg.test_functions.push_back({as_step(require_key(tf[i], "f", p), cfg.dim_k, p + ".f"),
                                  as_step(require_key(tf[i], "g", p), cfg.dim_k, p + ".g")});
  }

  cfg.horizon = as_real(require_key(doc, "horizon", "<root>"), "horizon");
  if (!(cfg.horizon > 0.0)) fail("horizon", "must be positive");
  const json& hg = require_key(doc, "h_grid", "<root>");
  if (!hg.is_array() || hg.empty()) fail("h_grid", "expected a nonempty array");
  for (std::size_t i = 0; i < hg.size(); ++i) {
    const double h = as_real(hg[i], "h_grid[" + std::to_string(i) + "]");
    if (!(h > 0.0)) fail("h_grid[" + std::to_string(i) + "]", "must be positive");
    cfg.h_grid.push_back(h);
  }
  if (doc.contains("time_grid_extra")) {
    const json& e = doc.at("time_grid_extra");
    if (!e.is_number_integer() || e.get<long long>() < 0) {
      fail("time_grid_extra", "expected a nonnegative integer");
    }
    cfg.time_grid_extra = e.get<int>();
  }
  if (doc.contains("tolerances")) {
    const json& t = doc.at("tolerances");
    if (!t.is_object()) fail("tolerances", "expected an object");
    if (t.contains("zero_tol")) cfg.tolerances.zero_tol = as_real(t.at("zero_tol"), "tolerances.zero_tol");
    if (t.contains("final_ratio")) {
      cfg.tolerances.final_ratio = as_real(t.at("final_ratio"), "tolerances.final_ratio");
    }
    if (t.contains("order_min")) cfg.tolerances.order_min = as_real(t.at("order_min"), "tolerances.order_min");
    if (t.contains("order_max")) cfg.tolerances.order_max = as_real(t.at("order_max"), "tolerances.order_max");
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open scenario file " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace qwc
