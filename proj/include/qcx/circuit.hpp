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
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcx {

enum class GateKind {
    H,
    X,
    Y,
    Z,
    RX,
    RY,
    RZ,
    CNOT,
    Toffoli,
    Swap,
    CPhase,
    Measure,
};

struct GateInfo {
    GateKind kind;
    std::string_view name; // canonical lowercase
    std::size_t qubit_arity;
    std::size_t param_count;
};

inline constexpr std::size_t kGateKindCount = 12;

/// Metadata for every gate kind, in enum order.
[[nodiscard]] std::span<const GateInfo, kGateKindCount> all_gates() noexcept;

[[nodiscard]] const GateInfo &gate_info(GateKind kind) noexcept;

[[nodiscard]] inline std::string_view gate_name(GateKind kind) noexcept {
    return gate_info(kind).name;
}

/// Case-insensitive lookup over canonical names and the aliases
/// cx, ccnot, cp. Throws UnknownGateError.
[[nodiscard]] GateKind resolve_gate_name(std::string_view name);

/// One circuit instruction. For cnot/cphase the qubits are
/// [control, target]; for toffoli [control0, control1, target].
struct GateOp {
    GateKind kind{GateKind::H};
    std::vector<std::size_t> qubits;
    std::optional<std::size_t> clbit; // measure only
    std::vector<double> params;       // radians

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

/// Largest register the dense simulator accepts (2^24 amplitudes).
inline constexpr std::size_t kMaxQubits = 24;

/// Ordered instruction list over `num_qubits` qubits and `num_clbits`
/// classical bits. Every append is validated; a rejected append leaves the
/// circuit untouched.
class Circuit {
  public:
    Circuit(std::size_t num_qubits, std::size_t num_clbits);

    [[nodiscard]] std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    [[nodiscard]] std::size_t num_clbits() const noexcept {
        return num_clbits_;
    }
    [[nodiscard]] std::span<const GateOp> ops() const noexcept { return ops_; }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }

    /// Name-based append. For measure, `operands` is {qubit, clbit}.
    Circuit &add_gate(std::string_view name,
                      std::span<const std::size_t> operands,
                      std::span<const double> params = {});
    Circuit &add_gate(std::string_view name,
                      std::initializer_list<std::size_t> operands,
                      std::initializer_list<double> params = {});

    /// Appends a fully formed instruction after validating it.
    Circuit &append(GateOp op);

    Circuit &h(std::size_t q);
    Circuit &x(std::size_t q);
    Circuit &y(std::size_t q);
    Circuit &z(std::size_t q);
    Circuit &rx(double theta, std::size_t q);
    Circuit &ry(double theta, std::size_t q);
    Circuit &rz(double theta, std::size_t q);
    Circuit &cnot(std::size_t control, std::size_t target);
    Circuit &toffoli(std::size_t c0, std::size_t c1, std::size_t target);
    Circuit &swap(std::size_t a, std::size_t b);
    Circuit &cphase(double theta, std::size_t control, std::size_t target);
    Circuit &measure(std::size_t q, std::size_t c);

    [[nodiscard]] bool has_measurement() const noexcept;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    void validate(const GateOp &op) const;

    std::size_t num_qubits_;
    std::size_t num_clbits_;
    std::vector<GateOp> ops_;
};

[[nodiscard]] inline bool has_measurement(const Circuit &c) noexcept {
    return c.has_measurement();
}

} // namespace qcx
