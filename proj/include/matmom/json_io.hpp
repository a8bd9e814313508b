// Copyright 2026 The matmom Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON schemas for every public type. Parsers throw InputError whose message
 * starts with the offending field path, e.g. "coeffs[2][1]: ragged row".
 * Doubles are written with round-trip precision.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "certificates.hpp"
#include "measures.hpp"
#include "moments.hpp"
#include "recovery.hpp"
#include "shiftgap.hpp"
#include "spectral.hpp"

namespace matmom::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parses text; malformed JSON becomes InputError.
Json parse(const std::string &text, const std::string &source);

Json to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j, const std::string &path);

Json to_json(const MatrixPoly &p);
MatrixPoly poly_from_json(const Json &j, const std::string &path = "");

Json to_json(const MomentSequence &s);
MomentSequence moments_from_json(const Json &j);

Json to_json(const LaurentPoly &u);
LaurentPoly laurent_from_json(const Json &j);

Json to_json(const AtomicMatrixMeasure &mu);
AtomicMatrixMeasure measure_from_json(const Json &j);

Json to_json(const PositiveMapMeasure &m);
PositiveMapMeasure map_measure_from_json(const Json &j);

/// True when the document describes a map measure ("kraus" atoms).
bool is_map_measure(const Json &j);

Json to_json(const SosCertificate &c);
SosCertificate certificate_from_json(const Json &j);

// Reports. Each carries "schema_version".
Json report(const PsdReport &r, MomentVariant variant);
Json report(const SpectralFactor &f);
Json report(const RecoveryResult &r);
Json report(const ProbeReport &r);
Json report(const ChainReport &r);
Json report(const ModuleAudit &a);

} // namespace matmom::io
