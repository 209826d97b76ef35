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

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qcx/circuit.hpp"

namespace qcx {

/// Target framework source formats.
enum class Dialect { Qiskit, Cirq, PennyLane, PyQuil, Braket };

inline constexpr std::array<Dialect, 5> kAllDialects{
    Dialect::Qiskit, Dialect::Cirq, Dialect::PennyLane, Dialect::PyQuil,
    Dialect::Braket};

[[nodiscard]] std::string_view dialect_name(Dialect d) noexcept;

/// Case-insensitive; also accepts "amazonbraket" and "quil".
[[nodiscard]] std::optional<Dialect> parse_dialect(std::string_view name);

struct EmittedProgram {
    Dialect dialect;
    std::string source; // "\n" line endings
};

/**
 * Renders `circuit` as a self-contained program for `dialect`, one line per
 * instruction in program order.
 *
 *   pyquil   - Quil text: DECLARE ro BIT[nc], H 0, CNOT 0 1, CCNOT, SWAP,
 *              CPHASE(t) c t, RX(t) q, MEASURE q ro[c]
 *   qiskit   - qc = QuantumCircuit(nq, nc); qc.h / qc.cx / qc.ccx / qc.swap
 *              / qc.cp / qc.measure
 *   cirq     - circuit.append(...) on LineQubits; measurements keyed c<j>
 *   pennylane- one qml call per gate inside a qnode; measure instructions
 *              become "# measure: wire q -> clbit c" comments and the qnode
 *              returns Z samples of the measured wires
 *   braket   - chained Circuit() calls; .measure(q) with a clbit comment
 *
 * Angles are printed as shortest round-trip decimals.
 */
[[nodiscard]] EmittedProgram translate(const Circuit &circuit,
                                       Dialect dialect);

/// The single line (or, for pennylane measure, comment) rendering `op`.
[[nodiscard]] std::string render_instruction(const GateOp &op,
                                             Dialect dialect);

/// ASCII diagram, one "q<i>: " row per qubit.
[[nodiscard]] std::string print_circuit(const Circuit &circuit);

} // namespace qcx
