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
#include "qcx/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>
#include <vector>

#include "qcx/errors.hpp"

namespace qcx {

namespace {

std::size_t first_measurement(const Circuit &circuit) {
    const auto ops = circuit.ops();
    const auto it = std::find_if(ops.begin(), ops.end(), [](const GateOp &op) {
        return op.kind == GateKind::Measure;
    });
    return static_cast<std::size_t>(it - ops.begin());
}

StateVector evolve_prefix(const Circuit &circuit, std::size_t end) {
    StateVector state(circuit.num_qubits());
    const auto ops = circuit.ops();
    for (std::size_t i = 0; i < end; ++i) {
        state.apply(ops[i]);
    }
    return state;
}

void run_from(const Circuit &circuit, std::size_t start, StateVector &state,
              ClassicalRegister &reg, std::mt19937_64 &rng) {
    const auto ops = circuit.ops();
    for (std::size_t i = start; i < ops.size(); ++i) {
        const GateOp &op = ops[i];
        if (op.kind == GateKind::Measure) {
            apply_measure(state, op.qubits[0], *op.clbit, reg,
                          uniform_draw(rng));
        } else {
            state.apply(op);
        }
    }
}

void require_measurement(const Circuit &circuit) {
    if (!circuit.has_measurement()) {
        throw NoMeasurementError(
            "circuit has no measure instruction; nothing to sample");
    }
}

} // namespace

void Counts::merge(const Counts &other) {
    for (const auto &[key, n] : other.entries) {
        entries[key] += n;
    }
    shots += other.shots;
}

std::mt19937_64 shot_stream(std::uint64_t seed, std::uint64_t shot) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shot),
                      static_cast<std::uint32_t>(shot >> 32)};
    return std::mt19937_64(seq);
}

double uniform_draw(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ClassicalRegister run_single_shot(const Circuit &circuit,
                                  std::mt19937_64 &rng) {
    StateVector state(circuit.num_qubits());
    ClassicalRegister reg(circuit.num_clbits());
    run_from(circuit, 0, state, reg, rng);
    return reg;
}

Counts run_shots(const Circuit &circuit, std::size_t shots,
                 std::uint64_t seed, const ShotOptions &options) {
    require_measurement(circuit);
    if (shots == 0) {
        throw ValidationError("shots must be at least 1");
    }

    // The measurement-free prefix is identical in every shot.
    const std::size_t start = first_measurement(circuit);
    const StateVector prefix = evolve_prefix(circuit, start);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        Counts local;
        for (std::size_t s = begin; s < end; ++s) {
            auto rng = shot_stream(seed, s);
            StateVector state = prefix;
            ClassicalRegister reg(circuit.num_clbits());
            run_from(circuit, start, state, reg, rng);
            ++local.entries[reg.to_string()];
        }
        local.shots = end - begin;
        return local;
    };

    std::size_t threads = options.threads;
    if (threads == 0) {
        threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, shots);
    if (threads <= 1) {
        return run_range(0, shots);
    }

    std::vector<Counts> partial(threads);
    std::vector<std::exception_ptr> failures(threads);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t begin = shots * t / threads;
            const std::size_t end = shots * (t + 1) / threads;
            workers.emplace_back([&, t, begin, end] {
                try {
                    partial[t] = run_range(begin, end);
                } catch (...) {
                    failures[t] = std::current_exception();
                }
            });
        }
    }
    for (const auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    Counts total;
    for (const auto &p : partial) {
        total.merge(p);
    }
    return total;
}

ExactDistribution exact_distribution(const Circuit &circuit) {
    require_measurement(circuit);
    const auto ops = circuit.ops();
    const auto measures = static_cast<std::size_t>(
        std::count_if(ops.begin(), ops.end(), [](const GateOp &op) {
            return op.kind == GateKind::Measure;
        }));
    if (measures > kMaxExactMeasurements) {
        throw BranchCapError("exact enumeration supports at most " +
                             std::to_string(kMaxExactMeasurements) +
                             " measurements, circuit has " +
                             std::to_string(measures));
    }

    ExactDistribution dist;
    auto visit = [&](auto &&self, std::size_t index, StateVector state,
                     ClassicalRegister reg, double weight) -> void {
        for (; index < ops.size(); ++index) {
            const GateOp &op = ops[index];
            if (op.kind != GateKind::Measure) {
                state.apply(op);
                continue;
            }
            const auto [p0, p1] = state.outcome_probabilities(op.qubits[0]);
            for (int outcome : {0, 1}) {
                const double p = outcome ? p1 : p0;
                if (p < kDegenerateProbability) {
                    continue;
                }
                StateVector branch = state;
                branch.collapse(op.qubits[0], outcome, p);
                ClassicalRegister branch_reg = reg;
                branch_reg.bits[*op.clbit] =
                    static_cast<std::uint8_t>(outcome);
                self(self, index + 1, std::move(branch), std::move(branch_reg),
                     weight * p);
            }
            return;
        }
        dist.entries[reg.to_string()] += weight;
    };
    visit(visit, 0, StateVector(circuit.num_qubits()),
          ClassicalRegister(circuit.num_clbits()), 1.0);
    return dist;
}

StateVector evolve_unitary(const Circuit &circuit) {
    return evolve_prefix(circuit, circuit.size());
}

double total_variation_distance(const Counts &counts,
                                const ExactDistribution &exact) {
    std::set<std::string> keys;
    for (const auto &[k, _] : counts.entries) {
        keys.insert(k);
    }
    for (const auto &[k, _] : exact.entries) {
        keys.insert(k);
    }
    const double shots = static_cast<double>(counts.shots);
    double total = 0.0;
    for (const auto &k : keys) {
        const auto ci = counts.entries.find(k);
        const auto ei = exact.entries.find(k);
        const double empirical =
            ci == counts.entries.end() ? 0.0
                                       : static_cast<double>(ci->second) / shots;
        const double p = ei == exact.entries.end() ? 0.0 : ei->second;
        total += std::abs(empirical - p);
    }
    return 0.5 * total;
}

} // namespace qcx
