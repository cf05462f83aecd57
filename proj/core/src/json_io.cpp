/*
 * Copyright 2026 The lkcfield Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lkcfield/json_io.hpp"

#include <string>

#include "lkcfield/errors.hpp"

namespace lkcfield {

namespace {

template <class T>
T require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    raise(ErrorCode::kConfigInvalid, std::string("missing key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    raise(ErrorCode::kConfigInvalid, std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

void to_json(Json& j, const KernelMoments& m) {
  j = Json{{"kernel", m.kernel},   {"N", m.N},
           {"gamma", m.gamma},     {"kappa", m.kappa},
           {"kappa22", m.kappa22}, {"kappa4", m.kappa4},
           {"rho", m.rho},         {"ctilde", m.ctilde},
           {"c_small", m.c_small}, {"c_big", m.c_big},
           {"d_big", m.d_big},
           {"diagnostics",
            {{"norm", m.norm},
             {"kappa_direct", m.kappa_direct},
             {"kappa4_minus_3kappa22", m.kappa4_residual},
             {"kappa_direct_minus_4ctilde2", m.kappa_residual}}}};
}

void from_json(const Json& j, KernelMoments& m) {
  m.kernel = j.value("kernel", std::string("custom"));
  m.N = require<int>(j, "N");
  m.gamma = require<double>(j, "gamma");
  m.kappa22 = require<double>(j, "kappa22");
  m.kappa4 = require<double>(j, "kappa4");
  m.rho = require<double>(j, "rho");
  complete_moments(m);
  m.kappa_direct = m.kappa;
}

void to_json(Json& j, const DomainGeometry& g) {
  j = Json{{"dimension", g.dimension},
           {"shape", std::string(shape_name(g.shape))},
           {"parameters", g.parameters},
           {"euclid_lkcs", g.euclid_lkcs},
           {"volume", g.volume},
           {"boundary_measure", g.boundary_measure},
           {"boundary_curvature_integrals", g.boundary_curvature_integrals}};
}

void from_json(const Json& j, DomainGeometry& g) {
  g.dimension = require<int>(j, "dimension");
  g.shape = parse_shape_name(j.value("shape", std::string("custom")));
  g.parameters = j.value("parameters", std::vector<double>{});
  g.euclid_lkcs = require<std::vector<double>>(j, "euclid_lkcs");
  g.volume = require<double>(j, "volume");
  g.boundary_measure = require<double>(j, "boundary_measure");
  g.boundary_curvature_integrals = require<std::vector<double>>(j, "boundary_curvature_integrals");
  validate_geometry(g);
}

void to_json(Json& j, const ScaleRange& r) {
  j = Json{{"sigma_low", r.sigma_low}, {"sigma_high", r.sigma_high}};
}

void from_json(const Json& j, ScaleRange& r) {
  r.sigma_low = require<double>(j, "sigma_low");
  r.sigma_high = require<double>(j, "sigma_high");
}

void to_json(Json& j, const LkcVector& v) {
  j = Json{{"dim", v.dim},
           {"values", v.values},
           {"truncated", v.truncated},
           {"lowest_valid", v.lowest_valid}};
  if (!v.breakdown.empty()) j["breakdown"] = v.breakdown;
}

void from_json(const Json& j, LkcVector& v) {
  v.values = require<std::vector<double>>(j, "values");
  v.dim = j.value("dim", static_cast<int>(v.values.size()) - 1);
  if (v.values.size() != static_cast<std::size_t>(v.dim) + 1) {
    raise(ErrorCode::kConfigInvalid, "LKC vector length must be dim + 1");
  }
  v.truncated = j.value("truncated", false);
  v.lowest_valid = j.value("lowest_valid", 0);
  v.breakdown.clear();
  if (j.contains("breakdown")) {
    v.breakdown = j.at("breakdown").get<std::map<std::string, std::vector<double>>>();
  }
}

void to_json(Json& j, const RotationTopTwo& r) {
  j = Json{{"D", r.D},
           {"L_D", r.L_D},
           {"L_D-1", r.L_Dm1},
           {"F_KN", r.F_KN},
           {"F_KNm1", r.F_KNm1},
           {"F_Km1N", r.F_Km1N},
           {"standard_errors", {{"L_D", 0.0}, {"L_D-1", r.L_Dm1_se}, {"F_KNm1", r.F_KNm1_se}}}};
}

void to_json(Json& j, const EecCurve& c) {
  j = Json{{"thresholds", c.thresholds},
           {"eec", c.eec_values},
           {"lkcs", c.lkcs},
           {"metadata", c.metadata}};
}

void to_json(Json& j, const ExcursionStats& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.thresholds.size(); ++i) {
    rows.push_back({{"u", s.thresholds[i]},
                    {"mean_chi", s.mean_chi[i]},
                    {"se", s.se_chi[i]},
                    {"p_sup", s.p_sup[i]},
                    {"se_p_sup", s.se_p_sup[i]}});
  }
  j = Json{{"realizations", s.realizations}, {"seed", s.seed}, {"thresholds", rows}};
}

LkcVector lkc_vector_from_document(const Json& doc) {
  if (doc.is_object() && doc.contains("values")) return doc.get<LkcVector>();
  if (doc.is_object() && doc.contains("lkcs")) return doc.at("lkcs").get<LkcVector>();
  raise(ErrorCode::kConfigInvalid, "document holds no LKC vector");
}

}  // namespace lkcfield
