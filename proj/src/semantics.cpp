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
#include "qcx/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qcx/errors.hpp"

namespace qcx {

GateUnitary::GateUnitary(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

GateUnitary::GateUnitary(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim * dim) {
        throw SemanticsError("matrix needs " + std::to_string(dim * dim) +
                             " entries, got " +
                             std::to_string(entries_.size()));
    }
}

GateUnitary GateUnitary::identity(std::size_t dim) {
    GateUnitary u(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        u(i, i) = 1.0;
    }
    return u;
}

GateUnitary GateUnitary::adjoint() const {
    GateUnitary out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

GateUnitary operator*(const GateUnitary &a, const GateUnitary &b) {
    if (a.dim() != b.dim()) {
        throw SemanticsError("matrix dimension mismatch");
    }
    const std::size_t n = a.dim();
    GateUnitary out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

GateUnitary unitary_of(GateKind kind, std::span<const double> params) {
    const GateInfo &info = gate_info(kind);
    if (kind == GateKind::Measure) {
        throw SemanticsError("measure has no unitary matrix");
    }
    if (params.size() != info.param_count) {
        throw SemanticsError(std::string(info.name) + " takes " +
                             std::to_string(info.param_count) +
                             " parameter(s)");
    }

    using namespace std::complex_literals;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

    switch (kind) {
    case GateKind::H:
        return GateUnitary(2, {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2});
    case GateKind::X:
        return GateUnitary(2, {0.0, 1.0, 1.0, 0.0});
    case GateKind::Y:
        return GateUnitary(2, {0.0, -1.0i, 1.0i, 0.0});
    case GateKind::Z:
        return GateUnitary(2, {1.0, 0.0, 0.0, -1.0});
    case GateKind::RX: {
        const double c = std::cos(params[0] / 2);
        const double s = std::sin(params[0] / 2);
        return GateUnitary(2, {c, -1.0i * s, -1.0i * s, c});
    }
    case GateKind::RY: {
        const double c = std::cos(params[0] / 2);
        const double s = std::sin(params[0] / 2);
        return GateUnitary(2, {c, -s, s, c});
    }
    case GateKind::RZ: {
        const double half = params[0] / 2;
        return GateUnitary(2, {std::polar(1.0, -half), 0.0, 0.0,
                               std::polar(1.0, half)});
    }
    case GateKind::CNOT: {
        GateUnitary u(4);
        u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1.0;
        return u;
    }
    case GateKind::Toffoli: {
        GateUnitary u = GateUnitary::identity(8);
        u(6, 6) = u(7, 7) = 0.0;
        u(6, 7) = u(7, 6) = 1.0;
        return u;
    }
    case GateKind::Swap: {
        GateUnitary u(4);
        u(0, 0) = u(1, 2) = u(2, 1) = u(3, 3) = 1.0;
        return u;
    }
    case GateKind::CPhase: {
        GateUnitary u = GateUnitary::identity(4);
        u(3, 3) = std::polar(1.0, params[0]);
        return u;
    }
    case GateKind::Measure:
        break;
    }
    throw SemanticsError("unhandled gate kind");
}

double max_abs_diff(const GateUnitary &a, const GateUnitary &b) {
    if (a.dim() != b.dim()) {
        throw SemanticsError("matrix dimension mismatch");
    }
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

bool is_unitary(const GateUnitary &u, double tol) {
    if (u.dim() == 0) {
        return false;
    }
    return max_abs_diff(u.adjoint() * u, GateUnitary::identity(u.dim())) <=
           tol;
}

Complex determinant(const GateUnitary &u) {
    const std::size_t n = u.dim();
    GateUnitary lu = u;
    Complex det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) {
                pivot = r;
            }
        }
        if (std::abs(lu(pivot, col)) == 0.0) {
            return Complex{};
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(lu(pivot, c), lu(col, c));
            }
            det = -det;
        }
        det *= lu(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = lu(r, col) / lu(col, col);
            for (std::size_t c = col; c < n; ++c) {
                lu(r, c) -= f * lu(col, c);
            }
        }
    }
    return det;
}

} // namespace qcx
