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
#include "qcx/statevector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "qcx/errors.hpp"

namespace qcx {

namespace {

/// Spreads the bits of `k` over the positions not listed in `sorted_holes`,
/// leaving zeros at the hole positions.
inline std::size_t insert_zero_bits(std::size_t k,
                                    std::span<const std::size_t> sorted_holes) {
    for (std::size_t hole : sorted_holes) {
        const std::size_t low = k & ((std::size_t{1} << hole) - 1);
        k = ((k >> hole) << (hole + 1)) | low;
    }
    return k;
}

} // namespace

StateVector::StateVector(std::size_t num_qubits) : n_(num_qubits) {
    if (num_qubits < 1) {
        throw SimError("state needs at least one qubit");
    }
    if (num_qubits > kMaxQubits) {
        throw CapacityError("simulator supports at most " +
                            std::to_string(kMaxQubits) + " qubits");
    }
    amps_.assign(std::size_t{1} << n_, Complex{});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw SimError("amplitude count must be a power of two >= 2");
    }
    StateVector sv;
    sv.n_ = static_cast<std::size_t>(std::countr_zero(amps.size()));
    if (sv.n_ > kMaxQubits) {
        throw CapacityError("simulator supports at most " +
                            std::to_string(kMaxQubits) + " qubits");
    }
    sv.amps_ = std::move(amps);
    return sv;
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::check_qubit(std::size_t q) const {
    if (q >= n_) {
        throw SimError("qubit " + std::to_string(q) + " out of range [0, " +
                       std::to_string(n_) + ")");
    }
}

void StateVector::apply(const GateOp &op) {
    if (op.kind == GateKind::Measure) {
        throw SimError("measure is not a unitary instruction");
    }
    for (std::size_t q : op.qubits) {
        check_qubit(q);
    }
    using namespace std::complex_literals;
    switch (op.kind) {
    case GateKind::Z:
        apply_diagonal_phase(op.qubits[0], 1.0, -1.0);
        return;
    case GateKind::RZ: {
        const double half = op.params.at(0) / 2;
        apply_diagonal_phase(op.qubits[0], std::polar(1.0, -half),
                             std::polar(1.0, half));
        return;
    }
    case GateKind::CNOT:
        apply_controlled_x(std::span(op.qubits).first(1), op.qubits[1]);
        return;
    case GateKind::Toffoli:
        apply_controlled_x(std::span(op.qubits).first(2), op.qubits[2]);
        return;
    case GateKind::Swap:
        apply_swap(op.qubits[0], op.qubits[1]);
        return;
    case GateKind::CPhase:
        apply_cphase(op.qubits[0], op.qubits[1],
                     std::polar(1.0, op.params.at(0)));
        return;
    default:
        apply_single(op.qubits[0], unitary_of(op));
        return;
    }
}

void StateVector::apply_single(std::size_t q, const GateUnitary &u) {
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t size = amps_.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i0 = base; i0 < base + stride; ++i0) {
            const std::size_t i1 = i0 + stride;
            const Complex a0 = amps_[i0];
            const Complex a1 = amps_[i1];
            amps_[i0] = u00 * a0 + u01 * a1;
            amps_[i1] = u10 * a0 + u11 * a1;
        }
    }
}

void StateVector::apply_diagonal_phase(std::size_t q, Complex on_zero,
                                       Complex on_one) {
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] *= (i & mask) ? on_one : on_zero;
    }
}

void StateVector::apply_controlled_x(std::span<const std::size_t> controls,
                                     std::size_t target) {
    std::array<std::size_t, 3> holes{};
    std::size_t control_mask = 0;
    for (std::size_t i = 0; i < controls.size(); ++i) {
        holes[i] = controls[i];
        control_mask |= std::size_t{1} << controls[i];
    }
    holes[controls.size()] = target;
    const std::span<std::size_t> sorted(holes.data(), controls.size() + 1);
    std::sort(sorted.begin(), sorted.end());

    const std::size_t target_bit = std::size_t{1} << target;
    const std::size_t count = amps_.size() >> sorted.size();
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t i0 = insert_zero_bits(k, sorted) | control_mask;
        std::swap(amps_[i0], amps_[i0 | target_bit]);
    }
}

void StateVector::apply_swap(std::size_t a, std::size_t b) {
    std::array<std::size_t, 2> sorted{std::min(a, b), std::max(a, b)};
    const std::size_t abit = std::size_t{1} << a;
    const std::size_t bbit = std::size_t{1} << b;
    const std::size_t count = amps_.size() >> 2;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t base = insert_zero_bits(k, sorted);
        std::swap(amps_[base | abit], amps_[base | bbit]);
    }
}

void StateVector::apply_cphase(std::size_t a, std::size_t b, Complex phase) {
    std::array<std::size_t, 2> sorted{std::min(a, b), std::max(a, b)};
    const std::size_t both = (std::size_t{1} << a) | (std::size_t{1} << b);
    const std::size_t count = amps_.size() >> 2;
    for (std::size_t k = 0; k < count; ++k) {
        amps_[insert_zero_bits(k, sorted) | both] *= phase;
    }
}

void StateVector::apply_matrix(std::span<const std::size_t> qubits,
                               const GateUnitary &u) {
    const std::size_t k = qubits.size();
    if (k == 0 || u.dim() != (std::size_t{1} << k)) {
        throw SimError("matrix size does not match operand count");
    }
    for (std::size_t q : qubits) {
        check_qubit(q);
    }
    std::vector<std::size_t> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw SimError("repeated qubit operand");
    }

    const std::size_t dim = u.dim();
    // offsets[l] is the amplitude offset of local basis state l.
    std::vector<std::size_t> offsets(dim, 0);
    for (std::size_t l = 0; l < dim; ++l) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((l >> (k - 1 - t)) & 1U) {
                offsets[l] |= std::size_t{1} << qubits[t];
            }
        }
    }

    std::vector<Complex> local(dim);
    const std::size_t count = amps_.size() >> k;
    for (std::size_t g = 0; g < count; ++g) {
        const std::size_t base = insert_zero_bits(g, sorted);
        for (std::size_t l = 0; l < dim; ++l) {
            local[l] = amps_[base | offsets[l]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            Complex acc{};
            for (std::size_t c = 0; c < dim; ++c) {
                acc += u(r, c) * local[c];
            }
            amps_[base | offsets[r]] = acc;
        }
    }
}

std::pair<double, double>
StateVector::outcome_probabilities(std::size_t q) const {
    check_qubit(q);
    const std::size_t mask = std::size_t{1} << q;
    double p0 = 0.0;
    double p1 = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) {
            p1 += std::norm(amps_[i]);
        } else {
            p0 += std::norm(amps_[i]);
        }
    }
    return {p0, p1};
}

void StateVector::collapse(std::size_t q, int outcome, double probability) {
    check_qubit(q);
    if (!(probability >= kDegenerateProbability)) {
        throw SimError("measurement branch has numerically zero probability");
    }
    const std::size_t mask = std::size_t{1} << q;
    const std::size_t keep = outcome ? mask : 0;
    const double scale = 1.0 / std::sqrt(probability);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == keep) {
            amps_[i] *= scale;
        } else {
            amps_[i] = Complex{};
        }
    }
}

std::string ClassicalRegister::to_string() const {
    std::string out(bits.size(), '0');
    for (std::size_t c = 0; c < bits.size(); ++c) {
        out[bits.size() - 1 - c] = bits[c] ? '1' : '0';
    }
    return out;
}

int apply_measure(StateVector &state, std::size_t q, std::size_t c,
                  ClassicalRegister &reg, double u) {
    if (c >= reg.bits.size()) {
        throw SimError("classical bit " + std::to_string(c) +
                       " out of range [0, " + std::to_string(reg.bits.size()) +
                       ")");
    }
    const auto [p0, p1] = state.outcome_probabilities(q);
    const int outcome = u < p1 ? 1 : 0;
    state.collapse(q, outcome, outcome ? p1 : p0);
    reg.bits[c] = static_cast<std::uint8_t>(outcome);
    return outcome;
}

} // namespace qcx
