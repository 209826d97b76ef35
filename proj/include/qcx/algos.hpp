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

#include <cstdint>
#include <set>
#include <vector>

#include "qcx/circuit.hpp"
#include "qcx/simulator.hpp"

namespace qcx {

/// H on 0, CNOT 0->1, then measure each qubit into its own clbit.
[[nodiscard]] Circuit build_bell();

/**
 * Compiled order-finding circuit for a = 7, N = 15 on 8 qubits.
 *
 * Qubits 0-3 count, 4-7 hold the work register. The work register is
 * measured into clbits 4-7 before the Fourier stage; the counting qubits
 * are then measured into the same clbits (qubit i -> clbit i+4), so the
 * final strings carry the counting result in their leftmost four
 * characters and zeros on the right.
 */
[[nodiscard]] Circuit build_shor15();

struct ShorConfig {
    unsigned n_count = 4;
    std::uint64_t modulus = 15;
};

/// Leftmost `n_count` characters of each key read as binary; zero dropped.
[[nodiscard]] std::set<std::uint64_t>
extract_measured_values(const Counts &counts, unsigned n_count);

/// Denominator of m / 2^n_count in lowest terms.
[[nodiscard]] std::uint64_t estimate_period(std::uint64_t m, unsigned n_count);

struct PeriodTrial {
    std::uint64_t base;
    std::uint64_t measured;
    std::uint64_t period;
    bool accepted; // base^period mod N == 1

    friend bool operator==(const PeriodTrial &, const PeriodTrial &) = default;
};

struct BaseOutcome {
    std::uint64_t base;
    bool found_period;

    friend bool operator==(const BaseOutcome &, const BaseOutcome &) = default;
};

struct FactorReport {
    Counts counts;
    std::set<std::uint64_t> measured_values;
    std::vector<PeriodTrial> periods_tried;
    std::vector<BaseOutcome> bases;
    std::set<std::uint64_t> factors;

    /// Members of `factors` that are prime.
    [[nodiscard]] std::set<std::uint64_t> prime_factors() const;

    friend bool operator==(const FactorReport &, const FactorReport &) = default;
};

/**
 * For every base a in [2, N) coprime to N and every measured value m:
 * r = estimate_period(m); when a^r mod N == 1 the gcds of a^(r/2) +- 1
 * with N (floor division, odd r included) are added to the factor set
 * when greater than one.
 */
[[nodiscard]] FactorReport
extract_factors(const std::set<std::uint64_t> &measured_values,
                const ShorConfig &config = {});

/// build_shor15 -> run_shots -> extract_measured_values -> extract_factors.
[[nodiscard]] FactorReport run_shor15_pipeline(std::size_t shots,
                                               std::uint64_t seed,
                                               const ShotOptions &options = {});

[[nodiscard]] std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                                    std::uint64_t mod);

[[nodiscard]] bool is_prime(std::uint64_t n);

} // namespace qcx
