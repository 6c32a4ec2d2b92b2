/*
 * Copyright 2026 The Symmetria Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

#include "symmetria/cli/report.hpp"
#include "symmetria/cli/runner.hpp"
#include "symmetria/fullerene/graph.hpp"
#include "symmetria/fullerene/matching.hpp"
#include "symmetria/liealg/structure.hpp"
#include "symmetria/spacetime/galilei.hpp"
#include "symmetria/spacetime/poincare.hpp"

namespace symmetria::cli {

/// {name, basis: [...], brackets: [{a, b, out: [{gen, coeff}]}]}, pairs a < b
/// with a nonzero bracket. Coefficients are integers or "p/q" strings.
Json algebra_to_json(const liealg::LieStructure& s);

/// {vertices, edges, faces, bonds: {"i-j": "single" | "double"}}.
Json graph_to_json(const fullerene::PolyhedralGraph& g, const fullerene::BondAssignment& bonds);

Json sweep_to_json(const std::vector<SweepRecord>& sweep);

/// {"galilei": {R, v, xi, tau}} and {"poincare": {a, b, v, R}}.
Json element_to_json(const spacetime::GalileiElement& g);
Json element_to_json(const spacetime::PoincareElement& p);

/// Parses either element form; throws ParameterError on malformed input.
spacetime::GalileiElement galilei_from_json(const Json& j);
spacetime::PoincareElement poincare_from_json(const Json& j);

/// Writes text to a file; throws IoError when it cannot be written.
void write_file(const std::string& path, const std::string& contents);

}  // namespace symmetria::cli
