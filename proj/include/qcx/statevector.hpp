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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcx/circuit.hpp"
#include "qcx/semantics.hpp"

namespace qcx {

/// Branch probabilities below this are treated as numerically zero.
inline constexpr double kDegenerateProbability = 1e-15;

/**
 * Dense n-qubit register. Bit q of an amplitude index is the basis state of
 * qubit q, so qubit 0 is the least significant bit.
 *
 * Gates are applied in place with strided loops over the 2^n amplitudes;
 * the full 2^n x 2^n operator is never formed.
 */
class StateVector {
  public:
    /// |0...0> over `num_qubits` qubits. Throws CapacityError past
    /// kMaxQubits.
    explicit StateVector(std::size_t num_qubits);

    /// Takes ownership of explicit amplitudes; size must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] double norm_squared() const noexcept;

    /// Applies any non-measure instruction. Throws SimError on measure or
    /// an operand outside the register.
    void apply(const GateOp &op);

    /// Generic kernel: `u` acts on `qubits` with qubits[0] as the local MSB.
    void apply_matrix(std::span<const std::size_t> qubits,
                      const GateUnitary &u);

    /// Probability that qubit q reads 0 and 1, summed independently.
    [[nodiscard]] std::pair<double, double>
    outcome_probabilities(std::size_t q) const;

    /// Projects qubit q onto `outcome` and renormalizes by sqrt(probability).
    /// Throws SimError when the branch probability is below
    /// kDegenerateProbability.
    void collapse(std::size_t q, int outcome, double probability);

  private:
    StateVector() = default;

    void check_qubit(std::size_t q) const;
    void apply_single(std::size_t q, const GateUnitary &u);
    void apply_diagonal_phase(std::size_t q, Complex on_zero, Complex on_one);
    void apply_controlled_x(std::span<const std::size_t> controls,
                            std::size_t target);
    void apply_swap(std::size_t a, std::size_t b);
    void apply_cphase(std::size_t a, std::size_t b, Complex phase);

    std::size_t n_ = 0;
    std::vector<Complex> amps_;
};

/// Classical bits of one shot, all zero initially.
struct ClassicalRegister {
    explicit ClassicalRegister(std::size_t num_clbits) : bits(num_clbits, 0) {}

    /// Renders clbit nc-1 leftmost, clbit 0 rightmost.
    [[nodiscard]] std::string to_string() const;

    std::vector<std::uint8_t> bits;
};

/**
 * Measures qubit `q` into `reg.bits[c]` using the uniform draw `u` in
 * [0, 1): the outcome is 1 iff u < p1. The state collapses onto the
 * outcome and any previous value of the classical bit is overwritten.
 * Returns the outcome.
 */
int apply_measure(StateVector &state, std::size_t q, std::size_t c,
                  ClassicalRegister &reg, double u);

} // namespace qcx
