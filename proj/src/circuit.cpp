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
#include "qcx/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "qcx/errors.hpp"

namespace qcx {

namespace {

constexpr std::array<GateInfo, kGateKindCount> kGates{{
    {GateKind::H, "h", 1, 0},
    {GateKind::X, "x", 1, 0},
    {GateKind::Y, "y", 1, 0},
    {GateKind::Z, "z", 1, 0},
    {GateKind::RX, "rx", 1, 1},
    {GateKind::RY, "ry", 1, 1},
    {GateKind::RZ, "rz", 1, 1},
    {GateKind::CNOT, "cnot", 2, 0},
    {GateKind::Toffoli, "toffoli", 3, 0},
    {GateKind::Swap, "swap", 2, 0},
    {GateKind::CPhase, "cphase", 2, 1},
    {GateKind::Measure, "measure", 1, 0},
}};

struct Alias {
    std::string_view alias;
    GateKind kind;
};

constexpr std::array<Alias, 3> kAliases{{
    {"cx", GateKind::CNOT},
    {"ccnot", GateKind::Toffoli},
    {"cp", GateKind::CPhase},
}};

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) {
        return static_cast<char>(std::tolower(ch));
    });
    return out;
}

} // namespace

std::span<const GateInfo, kGateKindCount> all_gates() noexcept {
    return kGates;
}

const GateInfo &gate_info(GateKind kind) noexcept {
    return kGates[static_cast<std::size_t>(kind)];
}

GateKind resolve_gate_name(std::string_view name) {
    const std::string lower = to_lower(name);
    for (const auto &g : kGates) {
        if (g.name == lower) {
            return g.kind;
        }
    }
    for (const auto &a : kAliases) {
        if (a.alias == lower) {
            return a.kind;
        }
    }
    throw UnknownGateError("unknown gate '" + std::string(name) + "'");
}

Circuit::Circuit(std::size_t num_qubits, std::size_t num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits) {
    if (num_qubits < 1) {
        throw ValidationError("circuit needs at least one qubit");
    }
    if (num_qubits > kMaxQubits) {
        throw CapacityError("circuit has " + std::to_string(num_qubits) +
                            " qubits; the limit is " +
                            std::to_string(kMaxQubits));
    }
}

void Circuit::validate(const GateOp &op) const {
    const GateInfo &info = gate_info(op.kind);
    const std::string name(info.name);

    if (op.qubits.size() != info.qubit_arity) {
        throw ArityError(name + " takes " + std::to_string(info.qubit_arity) +
                         " qubit operand(s), got " +
                         std::to_string(op.qubits.size()));
    }
    if (op.params.size() != info.param_count) {
        throw ArityError(name + " takes " + std::to_string(info.param_count) +
                         " parameter(s), got " +
                         std::to_string(op.params.size()));
    }
    if (op.kind == GateKind::Measure && !op.clbit) {
        throw ArityError("measure needs a classical bit");
    }
    if (op.kind != GateKind::Measure && op.clbit) {
        throw ArityError(name + " does not take a classical bit");
    }
    for (double p : op.params) {
        if (!std::isfinite(p)) {
            throw ValidationError(name + " angle must be finite");
        }
    }
    for (std::size_t i = 0; i < op.qubits.size(); ++i) {
        if (op.qubits[i] >= num_qubits_) {
            throw IndexError(name + " qubit " + std::to_string(op.qubits[i]) +
                             " out of range [0, " +
                             std::to_string(num_qubits_) + ")");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (op.qubits[i] == op.qubits[j]) {
                throw DuplicateOperandError(name + " repeats qubit " +
                                            std::to_string(op.qubits[i]));
            }
        }
    }
    if (op.clbit && *op.clbit >= num_clbits_) {
        throw IndexError(name + " classical bit " + std::to_string(*op.clbit) +
                         " out of range [0, " + std::to_string(num_clbits_) +
                         ")");
    }
}

Circuit &Circuit::append(GateOp op) {
    validate(op);
    ops_.push_back(std::move(op));
    return *this;
}

Circuit &Circuit::add_gate(std::string_view name,
                           std::span<const std::size_t> operands,
                           std::span<const double> params) {
    GateOp op;
    op.kind = resolve_gate_name(name);
    op.params.assign(params.begin(), params.end());
    if (op.kind == GateKind::Measure) {
        if (operands.size() != 2) {
            throw ArityError("measure takes [qubit, clbit], got " +
                             std::to_string(operands.size()) + " operand(s)");
        }
        op.qubits = {operands[0]};
        op.clbit = operands[1];
    } else {
        op.qubits.assign(operands.begin(), operands.end());
    }
    return append(std::move(op));
}

Circuit &Circuit::add_gate(std::string_view name,
                           std::initializer_list<std::size_t> operands,
                           std::initializer_list<double> params) {
    return add_gate(name, std::span(operands.begin(), operands.size()),
                    std::span(params.begin(), params.size()));
}

Circuit &Circuit::h(std::size_t q) { return append({GateKind::H, {q}, {}, {}}); }
Circuit &Circuit::x(std::size_t q) { return append({GateKind::X, {q}, {}, {}}); }
Circuit &Circuit::y(std::size_t q) { return append({GateKind::Y, {q}, {}, {}}); }
Circuit &Circuit::z(std::size_t q) { return append({GateKind::Z, {q}, {}, {}}); }

Circuit &Circuit::rx(double theta, std::size_t q) {
    return append({GateKind::RX, {q}, {}, {theta}});
}
Circuit &Circuit::ry(double theta, std::size_t q) {
    return append({GateKind::RY, {q}, {}, {theta}});
}
Circuit &Circuit::rz(double theta, std::size_t q) {
    return append({GateKind::RZ, {q}, {}, {theta}});
}
Circuit &Circuit::cnot(std::size_t control, std::size_t target) {
    return append({GateKind::CNOT, {control, target}, {}, {}});
}
Circuit &Circuit::toffoli(std::size_t c0, std::size_t c1, std::size_t target) {
    return append({GateKind::Toffoli, {c0, c1, target}, {}, {}});
}
Circuit &Circuit::swap(std::size_t a, std::size_t b) {
    return append({GateKind::Swap, {a, b}, {}, {}});
}
Circuit &Circuit::cphase(double theta, std::size_t control,
                         std::size_t target) {
    return append({GateKind::CPhase, {control, target}, {}, {theta}});
}
Circuit &Circuit::measure(std::size_t q, std::size_t c) {
    return append({GateKind::Measure, {q}, c, {}});
}

bool Circuit::has_measurement() const noexcept {
    return std::any_of(ops_.begin(), ops_.end(), [](const GateOp &op) {
        return op.kind == GateKind::Measure;
    });
}

} // namespace qcx
