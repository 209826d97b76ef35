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
#include "qcx/emit.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "qcx/errors.hpp"
#include "qcx/format.hpp"

namespace qcx {

namespace {

std::string angle(const GateOp &op) { return format_angle(op.params.at(0)); }

std::string render_pyquil(const GateOp &op) {
    const auto &q = op.qubits;
    switch (op.kind) {
    case GateKind::H:
        return fmt::format("H {}", q[0]);
    case GateKind::X:
        return fmt::format("X {}", q[0]);
    case GateKind::Y:
        return fmt::format("Y {}", q[0]);
    case GateKind::Z:
        return fmt::format("Z {}", q[0]);
    case GateKind::RX:
        return fmt::format("RX({}) {}", angle(op), q[0]);
    case GateKind::RY:
        return fmt::format("RY({}) {}", angle(op), q[0]);
    case GateKind::RZ:
        return fmt::format("RZ({}) {}", angle(op), q[0]);
    case GateKind::CNOT:
        return fmt::format("CNOT {} {}", q[0], q[1]);
    case GateKind::Toffoli:
        return fmt::format("CCNOT {} {} {}", q[0], q[1], q[2]);
    case GateKind::Swap:
        return fmt::format("SWAP {} {}", q[0], q[1]);
    case GateKind::CPhase:
        return fmt::format("CPHASE({}) {} {}", angle(op), q[0], q[1]);
    case GateKind::Measure:
        return fmt::format("MEASURE {} ro[{}]", q[0], *op.clbit);
    }
    throw EmitError("unhandled gate kind");
}

std::string render_qiskit(const GateOp &op) {
    const auto &q = op.qubits;
    switch (op.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
        return fmt::format("qc.{}({})", gate_name(op.kind), q[0]);
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        return fmt::format("qc.{}({}, {})", gate_name(op.kind), angle(op),
                           q[0]);
    case GateKind::CNOT:
        return fmt::format("qc.cx({}, {})", q[0], q[1]);
    case GateKind::Toffoli:
        return fmt::format("qc.ccx({}, {}, {})", q[0], q[1], q[2]);
    case GateKind::Swap:
        return fmt::format("qc.swap({}, {})", q[0], q[1]);
    case GateKind::CPhase:
        return fmt::format("qc.cp({}, {}, {})", angle(op), q[0], q[1]);
    case GateKind::Measure:
        return fmt::format("qc.measure({}, {})", q[0], *op.clbit);
    }
    throw EmitError("unhandled gate kind");
}

std::string render_cirq(const GateOp &op) {
    const auto &q = op.qubits;
    std::string body;
    switch (op.kind) {
    case GateKind::H:
        body = fmt::format("cirq.H(q[{}])", q[0]);
        break;
    case GateKind::X:
        body = fmt::format("cirq.X(q[{}])", q[0]);
        break;
    case GateKind::Y:
        body = fmt::format("cirq.Y(q[{}])", q[0]);
        break;
    case GateKind::Z:
        body = fmt::format("cirq.Z(q[{}])", q[0]);
        break;
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        body = fmt::format("cirq.{}({}).on(q[{}])", gate_name(op.kind),
                           angle(op), q[0]);
        break;
    case GateKind::CNOT:
        body = fmt::format("cirq.CNOT(q[{}], q[{}])", q[0], q[1]);
        break;
    case GateKind::Toffoli:
        body = fmt::format("cirq.CCNOT(q[{}], q[{}], q[{}])", q[0], q[1], q[2]);
        break;
    case GateKind::Swap:
        body = fmt::format("cirq.SWAP(q[{}], q[{}])", q[0], q[1]);
        break;
    case GateKind::CPhase:
        body = fmt::format("cirq.cphase({}).on(q[{}], q[{}])", angle(op), q[0],
                           q[1]);
        break;
    case GateKind::Measure:
        body = fmt::format("cirq.measure(q[{}], key='c{}')", q[0], *op.clbit);
        break;
    }
    return fmt::format("circuit.append({})", body);
}

std::string render_pennylane(const GateOp &op) {
    const auto &q = op.qubits;
    switch (op.kind) {
    case GateKind::H:
        return fmt::format("qml.Hadamard(wires={})", q[0]);
    case GateKind::X:
        return fmt::format("qml.PauliX(wires={})", q[0]);
    case GateKind::Y:
        return fmt::format("qml.PauliY(wires={})", q[0]);
    case GateKind::Z:
        return fmt::format("qml.PauliZ(wires={})", q[0]);
    case GateKind::RX:
        return fmt::format("qml.RX({}, wires={})", angle(op), q[0]);
    case GateKind::RY:
        return fmt::format("qml.RY({}, wires={})", angle(op), q[0]);
    case GateKind::RZ:
        return fmt::format("qml.RZ({}, wires={})", angle(op), q[0]);
    case GateKind::CNOT:
        return fmt::format("qml.CNOT(wires=[{}, {}])", q[0], q[1]);
    case GateKind::Toffoli:
        return fmt::format("qml.Toffoli(wires=[{}, {}, {}])", q[0], q[1], q[2]);
    case GateKind::Swap:
        return fmt::format("qml.SWAP(wires=[{}, {}])", q[0], q[1]);
    case GateKind::CPhase:
        return fmt::format("qml.ControlledPhaseShift({}, wires=[{}, {}])",
                           angle(op), q[0], q[1]);
    case GateKind::Measure:
        return fmt::format("# measure: wire {} -> clbit {}", q[0], *op.clbit);
    }
    throw EmitError("unhandled gate kind");
}

std::string render_braket(const GateOp &op) {
    const auto &q = op.qubits;
    switch (op.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
        return fmt::format(".{}({})", gate_name(op.kind), q[0]);
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        return fmt::format(".{}({}, {})", gate_name(op.kind), q[0], angle(op));
    case GateKind::CNOT:
        return fmt::format(".cnot({}, {})", q[0], q[1]);
    case GateKind::Toffoli:
        return fmt::format(".ccnot({}, {}, {})", q[0], q[1], q[2]);
    case GateKind::Swap:
        return fmt::format(".swap({}, {})", q[0], q[1]);
    case GateKind::CPhase:
        return fmt::format(".cphaseshift({}, {}, {})", q[0], q[1], angle(op));
    case GateKind::Measure:
        return fmt::format(".measure({})  # clbit {}", q[0], *op.clbit);
    }
    throw EmitError("unhandled gate kind");
}

/// Measured qubits in order of first measurement.
std::vector<std::size_t> measured_wires(const Circuit &circuit) {
    std::vector<std::size_t> wires;
    for (const auto &op : circuit.ops()) {
        if (op.kind == GateKind::Measure &&
            std::find(wires.begin(), wires.end(), op.qubits[0]) ==
                wires.end()) {
            wires.push_back(op.qubits[0]);
        }
    }
    return wires;
}

std::string emit_pyquil(const Circuit &circuit) {
    std::string out;
    if (circuit.num_clbits() > 0) {
        out += fmt::format("DECLARE ro BIT[{}]\n", circuit.num_clbits());
    }
    for (const auto &op : circuit.ops()) {
        out += render_pyquil(op) + "\n";
    }
    return out;
}

std::string emit_qiskit(const Circuit &circuit) {
    std::string out = "from qiskit import QuantumCircuit\n\n";
    out += fmt::format("qc = QuantumCircuit({}, {})\n", circuit.num_qubits(),
                       circuit.num_clbits());
    for (const auto &op : circuit.ops()) {
        out += render_qiskit(op) + "\n";
    }
    return out;
}

std::string emit_cirq(const Circuit &circuit) {
    std::string out = "import cirq\n\n";
    out += fmt::format("q = cirq.LineQubit.range({})\n", circuit.num_qubits());
    out += "circuit = cirq.Circuit()\n";
    for (const auto &op : circuit.ops()) {
        out += render_cirq(op) + "\n";
    }
    return out;
}

std::string emit_pennylane(const Circuit &circuit) {
    const auto wires = measured_wires(circuit);
    std::string out = "import pennylane as qml\n\n";
    if (wires.empty()) {
        out += fmt::format("dev = qml.device(\"default.qubit\", wires={})\n",
                           circuit.num_qubits());
    } else {
        out += fmt::format(
            "dev = qml.device(\"default.qubit\", wires={}, shots=1000)\n",
            circuit.num_qubits());
    }
    out += "\n\n@qml.qnode(dev)\ndef circuit():\n";
    for (const auto &op : circuit.ops()) {
        out += "    " + render_pennylane(op) + "\n";
    }
    if (wires.empty()) {
        out += "    return qml.state()\n";
    } else {
        std::vector<std::string> samples;
        samples.reserve(wires.size());
        for (std::size_t w : wires) {
            samples.push_back(fmt::format("qml.sample(qml.PauliZ({}))", w));
        }
        out += fmt::format("    return [{}]\n", fmt::join(samples, ", "));
    }
    return out;
}

std::string emit_braket(const Circuit &circuit) {
    std::string out = "from braket.circuits import Circuit\n\n";
    out += "circuit = (\n    Circuit()\n";
    for (const auto &op : circuit.ops()) {
        out += "    " + render_braket(op) + "\n";
    }
    out += ")\n";
    return out;
}

// ---------------------------------------------------------------------------
// ASCII diagram

struct Column {
    std::vector<std::string> cells; // empty string = wire
};

std::string label_for(const GateOp &op) {
    switch (op.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ: {
        std::string name(gate_name(op.kind));
        for (auto &ch : name) {
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        }
        return name + "(" + format_angle_short(op.params[0]) + ")";
    }
    default: {
        std::string name(gate_name(op.kind));
        return std::string(1, static_cast<char>(std::toupper(
                                  static_cast<unsigned char>(name[0]))));
    }
    }
}

} // namespace

std::string_view dialect_name(Dialect d) noexcept {
    switch (d) {
    case Dialect::Qiskit:
        return "qiskit";
    case Dialect::Cirq:
        return "cirq";
    case Dialect::PennyLane:
        return "pennylane";
    case Dialect::PyQuil:
        return "pyquil";
    case Dialect::Braket:
        return "braket";
    }
    return "unknown";
}

std::optional<Dialect> parse_dialect(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) {
                       return static_cast<char>(std::tolower(ch));
                   });
    for (Dialect d : kAllDialects) {
        if (dialect_name(d) == lower) {
            return d;
        }
    }
    if (lower == "amazonbraket") {
        return Dialect::Braket;
    }
    if (lower == "quil") {
        return Dialect::PyQuil;
    }
    return std::nullopt;
}

std::string render_instruction(const GateOp &op, Dialect dialect) {
    switch (dialect) {
    case Dialect::Qiskit:
        return render_qiskit(op);
    case Dialect::Cirq:
        return render_cirq(op);
    case Dialect::PennyLane:
        return render_pennylane(op);
    case Dialect::PyQuil:
        return render_pyquil(op);
    case Dialect::Braket:
        return render_braket(op);
    }
    throw EmitError("unknown dialect");
}

EmittedProgram translate(const Circuit &circuit, Dialect dialect) {
    switch (dialect) {
    case Dialect::Qiskit:
        return {dialect, emit_qiskit(circuit)};
    case Dialect::Cirq:
        return {dialect, emit_cirq(circuit)};
    case Dialect::PennyLane:
        return {dialect, emit_pennylane(circuit)};
    case Dialect::PyQuil:
        return {dialect, emit_pyquil(circuit)};
    case Dialect::Braket:
        return {dialect, emit_braket(circuit)};
    }
    throw EmitError("unknown dialect");
}

std::string print_circuit(const Circuit &circuit) {
    const std::size_t nq = circuit.num_qubits();
    std::vector<Column> columns;
    // First column each qubit / clbit is free in.
    std::vector<std::size_t> qubit_free(nq, 0);
    std::vector<std::size_t> clbit_free(circuit.num_clbits(), 0);

    for (const auto &op : circuit.ops()) {
        const auto [lo_it, hi_it] =
            std::minmax_element(op.qubits.begin(), op.qubits.end());
        const std::size_t lo = *lo_it;
        const std::size_t hi = *hi_it;

        std::size_t col = 0;
        for (std::size_t q = lo; q <= hi; ++q) {
            col = std::max(col, qubit_free[q]);
        }
        if (op.clbit) {
            col = std::max(col, clbit_free[*op.clbit]);
            clbit_free[*op.clbit] = col + 1;
        }
        for (std::size_t q = lo; q <= hi; ++q) {
            qubit_free[q] = col + 1;
        }
        if (col == columns.size()) {
            columns.push_back({std::vector<std::string>(nq)});
        }
        auto &cells = columns[col].cells;
        for (std::size_t q = lo + 1; q < hi; ++q) {
            cells[q] = "|";
        }

        const auto &q = op.qubits;
        switch (op.kind) {
        case GateKind::CNOT:
            cells[q[0]] = "*";
            cells[q[1]] = "+";
            break;
        case GateKind::Toffoli:
            cells[q[0]] = "*";
            cells[q[1]] = "*";
            cells[q[2]] = "+";
            break;
        case GateKind::Swap:
            cells[q[0]] = "x";
            cells[q[1]] = "x";
            break;
        case GateKind::CPhase:
            cells[q[0]] = "*";
            cells[q[1]] = "P(" + format_angle_short(op.params[0]) + ")";
            break;
        case GateKind::Measure:
            cells[q[0]] = "M" + std::to_string(*op.clbit);
            break;
        default:
            cells[q[0]] = label_for(op);
            break;
        }
    }

    std::vector<std::string> labels(nq);
    std::size_t label_width = 0;
    for (std::size_t q = 0; q < nq; ++q) {
        labels[q] = "q" + std::to_string(q) + ":";
        label_width = std::max(label_width, labels[q].size());
    }

    std::vector<std::string> rows(nq);
    for (std::size_t q = 0; q < nq; ++q) {
        rows[q] = labels[q];
        rows[q].append(label_width - labels[q].size() + 1, ' ');
        rows[q] += '-';
    }
    for (const auto &column : columns) {
        std::size_t width = 1;
        for (const auto &cell : column.cells) {
            width = std::max(width, cell.size());
        }
        for (std::size_t q = 0; q < nq; ++q) {
            const std::string &cell = column.cells[q];
            rows[q] += cell;
            rows[q].append(width - cell.size() + 1, '-');
        }
    }

    std::string out;
    for (const auto &row : rows) {
        out += row + "\n";
    }
    return out;
}

} // namespace qcx
