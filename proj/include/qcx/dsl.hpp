// Copyright 2026 The qcx Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qcx/circuit.hpp"

namespace qcx {

/**
 * Parses the line-oriented ".qc" circuit format:
 *
 *     # Bell pair
 *     qubits 2
 *     clbits 2
 *     h 0
 *     cnot 0 1
 *     cphase(pi/2) 0 1
 *     measure 0 -> 0
 *
 * The two header lines are required and come first, in that order. Angles
 * are decimals or one of pi, -pi, pi/2, pi/4, pi/8, pi/16, -pi/2, -pi/4.
 * Gate names are case-insensitive. "#" starts a comment; blank lines are
 * skipped; "\r\n" endings are accepted.
 *
 * Throws ParseError carrying the 1-based line of the first problem.
 */
[[nodiscard]] Circuit parse_circuit(std::string_view text);

/// Canonical text: lowercase names, shortest round-trip decimal angles,
/// single spaces, "\n" endings.
[[nodiscard]] std::string serialize_circuit(const Circuit &circuit);

/// Evaluates an angle token; nullopt when malformed or non-finite.
[[nodiscard]] std::optional<double> parse_angle(std::string_view token);

} // namespace qcx
