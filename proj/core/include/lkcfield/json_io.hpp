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

#ifndef LKCFIELD_JSON_IO_HPP
#define LKCFIELD_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "lkcfield/domain.hpp"
#include "lkcfield/gkf.hpp"
#include "lkcfield/kernel.hpp"
#include "lkcfield/rotation_space.hpp"
#include "lkcfield/scale_space.hpp"
#include "lkcfield/simulation.hpp"

namespace lkcfield {

using Json = nlohmann::json;

void to_json(Json& j, const KernelMoments& m);
void from_json(const Json& j, KernelMoments& m);

void to_json(Json& j, const DomainGeometry& g);
void from_json(const Json& j, DomainGeometry& g);

void to_json(Json& j, const ScaleRange& r);
void from_json(const Json& j, ScaleRange& r);

void to_json(Json& j, const LkcVector& v);
void from_json(const Json& j, LkcVector& v);

void to_json(Json& j, const RotationTopTwo& r);
void to_json(Json& j, const EecCurve& c);
void to_json(Json& j, const ExcursionStats& s);

/// Accepts a bare LkcVector object or any object carrying one under "lkcs".
LkcVector lkc_vector_from_document(const Json& doc);

}  // namespace lkcfield

#endif  // LKCFIELD_JSON_IO_HPP
