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
#include <map>
#include <random>
#include <string>

#include "qcx/circuit.hpp"
#include "qcx/statevector.hpp"

namespace qcx {

inline constexpr std::size_t kDefaultShots = 1000;
inline constexpr std::size_t kMaxExactMeasurements = 30;

/// Histogram of classical-register strings over `shots` executions.
struct Counts {
    std::map<std::string, std::uint64_t> entries;
    std::uint64_t shots = 0;

    /// Folds `other` into this histogram.
    void merge(const Counts &other);

    friend bool operator==(const Counts &, const Counts &) = default;
};

/// Exact probability of every reachable classical-register string.
struct ExactDistribution {
    std::map<std::string, double> entries;
};

struct ShotOptions {
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    std::size_t threads = 1;
};

/// Random stream for shot `shot` of a run seeded with `seed`. Streams are
/// independent of how shots are scheduled across threads.
[[nodiscard]] std::mt19937_64 shot_stream(std::uint64_t seed,
                                          std::uint64_t shot);

/// Uniform double in [0, 1) with 53 random bits.
[[nodiscard]] double uniform_draw(std::mt19937_64 &rng);

/// Executes one shot from |0...0> and returns the final classical register.
ClassicalRegister run_single_shot(const Circuit &circuit,
                                  std::mt19937_64 &rng);

/**
 * Samples `shots` executions of `circuit`. Every shot re-runs the
 * instructions from the first measurement onward on a copy of the
 * measurement-free prefix state, with a fresh zeroed classical register.
 *
 * Throws NoMeasurementError when the circuit never measures and
 * ValidationError when `shots` is zero.
 */
[[nodiscard]] Counts run_shots(const Circuit &circuit, std::size_t shots,
                               std::uint64_t seed,
                               const ShotOptions &options = {});

/// Depth-first enumeration over both outcomes of every measurement.
/// Throws BranchCapError past kMaxExactMeasurements measure instructions.
[[nodiscard]] ExactDistribution exact_distribution(const Circuit &circuit);

/// Applies every instruction; throws SimError on a measure instruction.
[[nodiscard]] StateVector evolve_unitary(const Circuit &circuit);

/// 0.5 * sum |empirical - exact| over the union of keys.
[[nodiscard]] double total_variation_distance(const Counts &counts,
                                              const ExactDistribution &exact);

} // namespace qcx
