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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qcx/circuit.hpp"

namespace qcx {

using Complex = std::complex<double>;

/// Dense row-major square complex matrix acting on k qubits.
///
/// Local basis ordering puts the FIRST operand of the gate on the most
/// significant bit, so CNOT over |control,target> reads
/// [[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,1,0]].
class GateUnitary {
  public:
    GateUnitary() = default;
    explicit GateUnitary(std::size_t dim);
    GateUnitary(std::size_t dim, std::vector<Complex> entries);

    static GateUnitary identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * dim_ + c];
    }
    [[nodiscard]] const Complex &operator()(std::size_t r,
                                            std::size_t c) const {
        return entries_[r * dim_ + c];
    }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    [[nodiscard]] GateUnitary adjoint() const;
    friend GateUnitary operator*(const GateUnitary &a, const GateUnitary &b);

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// Matrix of `kind` for the given angles. Throws SemanticsError for measure
/// or a parameter-count mismatch.
[[nodiscard]] GateUnitary unitary_of(GateKind kind,
                                     std::span<const double> params = {});

[[nodiscard]] inline GateUnitary unitary_of(const GateOp &op) {
    return unitary_of(op.kind, op.params);
}

/// max |U^dagger U - I| entrywise is within `tol`.
[[nodiscard]] bool is_unitary(const GateUnitary &u, double tol);

/// Largest entrywise absolute difference. Dimensions must match.
[[nodiscard]] double max_abs_diff(const GateUnitary &a, const GateUnitary &b);

/// Determinant by LU with partial pivoting.
[[nodiscard]] Complex determinant(const GateUnitary &u);

} // namespace qcx
