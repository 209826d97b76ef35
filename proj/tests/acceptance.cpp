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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here and not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "qcx/algos.hpp"
#include "qcx/dsl.hpp"
#include "qcx/emit.hpp"
#include "qcx/semantics.hpp"
#include "qcx/simulator.hpp"
#include "qcx/statevector.hpp"
#include "support/dense_oracle.hpp"

using namespace qcx;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 2026;
constexpr double kUnitaryTol = 1e-12;
constexpr double kBellExactTol = 1e-12;
constexpr double kShorExactTol = 1e-9;
constexpr double kAmplitudeTol = 1e-10;
constexpr double kTvTol = 0.01;
constexpr std::size_t kTvShots = 100000;
constexpr double kBellSeconds = 1.0;
constexpr double kShorSeconds = 5.0;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/**
 * Independent branch enumeration on dense vectors: every gate is applied as
 * its full 2^n Kronecker embedding, every measurement forks on the
 * projector. Shares nothing with the simulator kernels.
 */
std::map<std::string, double> dense_branch_distribution(const Circuit &c) {
    const std::size_t n = c.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<testing::Matrix> full(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto &op = c.ops()[i];
        if (op.kind != GateKind::Measure) {
            full[i] = testing::embed(n, op.qubits, unitary_of(op.kind, op.params));
        }
    }

    std::map<std::string, double> dist;
    std::function<void(std::size_t, std::vector<Complex>, std::string)> walk =
        [&](std::size_t at, std::vector<Complex> psi, std::string bits) {
            for (; at < c.size(); ++at) {
                const auto &op = c.ops()[at];
                if (op.kind != GateKind::Measure) {
                    std::vector<Complex> next(dim);
                    for (std::size_t r = 0; r < dim; ++r) {
                        for (std::size_t k = 0; k < dim; ++k) {
                            next[r] += full[at][r][k] * psi[k];
                        }
                    }
                    psi = std::move(next);
                    continue;
                }
                const std::size_t q = op.qubits[0];
                for (int outcome = 0; outcome < 2; ++outcome) {
                    std::vector<Complex> proj(dim);
                    double p = 0;
                    for (std::size_t k = 0; k < dim; ++k) {
                        if (static_cast<int>((k >> q) & 1U) == outcome) {
                            proj[k] = psi[k];
                            p += std::norm(psi[k]);
                        }
                    }
                    if (p < 1e-15) {
                        continue;
                    }
                    // The projected vector is left unnormalized so its
                    // squared norm carries the branch probability.
                    std::string nb = bits;
                    nb[nb.size() - 1 - *op.clbit] = outcome ? '1' : '0';
                    walk(at + 1, std::move(proj), nb);
                }
                return;
            }
            double w = 0;
            for (const auto &a : psi) {
                w += std::norm(a);
            }
            dist[bits] += w;
        };
    std::vector<Complex> psi(dim);
    psi[0] = 1.0;
    walk(0, std::move(psi), std::string(c.num_clbits(), '0'));
    return dist;
}

Check bell_distribution() {
    Check ck;
    const auto t0 = Clock::now();
    const Counts counts = run_shots(build_bell(), 1000, kSeed);
    const auto exact = exact_distribution(build_bell());
    const double elapsed = seconds_since(t0);

    std::set<std::string> keys;
    for (const auto &[k, n] : counts.entries) {
        keys.insert(k);
        ck.require(n >= 450 && n <= 550, "count for '" + k + "' = " +
                                             std::to_string(n));
    }
    ck.require(keys == std::set<std::string>{"00", "11"}, "support != {00, 11}");
    ck.require(exact.entries.size() == 2, "exact support size");
    for (const char *k : {"00", "11"}) {
        const auto it = exact.entries.find(k);
        ck.require(it != exact.entries.end() &&
                       std::abs(it->second - 0.5) <= kBellExactTol,
                   std::string("exact p(") + k + ")");
    }
    ck.require(elapsed < kBellSeconds, "runtime " + std::to_string(elapsed));
    ck.detail += (ck.detail.empty() ? "" : "; ") +
                 std::string("00=") + std::to_string(counts.entries.count("00") ? counts.entries.at("00") : 0) +
                 " 11=" + std::to_string(counts.entries.count("11") ? counts.entries.at("11") : 0);
    return ck;
}

Check shor_distribution() {
    Check ck;
    const std::set<std::string> expected = {"00000000", "01000000", "10000000",
                                            "11000000"};
    const auto t0 = Clock::now();
    const Counts counts = run_shots(build_shor15(), 1000, kSeed);
    const auto exact = exact_distribution(build_shor15());
    const double elapsed = seconds_since(t0);

    std::set<std::string> keys;
    for (const auto &[k, n] : counts.entries) {
        keys.insert(k);
        ck.require(n >= 200 && n <= 300,
                   "count for '" + k + "' = " + std::to_string(n));
    }
    ck.require(keys == expected, "support mismatch");
    ck.require(elapsed < kShorSeconds, "runtime " + std::to_string(elapsed));

    const auto oracle = dense_branch_distribution(build_shor15());
    for (const auto &k : expected) {
        const double p = exact.entries.count(k) ? exact.entries.at(k) : -1.0;
        const double o = oracle.count(k) ? oracle.at(k) : -1.0;
        ck.require(std::abs(p - 0.25) <= kShorExactTol, "exact p(" + k + ")");
        ck.require(std::abs(o - 0.25) <= kShorExactTol, "oracle p(" + k + ")");
    }
    double oracle_mass = 0;
    for (const auto &[k, p] : oracle) {
        if (!expected.count(k)) {
            oracle_mass += p;
        }
    }
    ck.require(oracle_mass <= kShorExactTol, "oracle mass outside support");
    ck.require(exact.entries.size() == 4, "exact support size");
    return ck;
}

Check factor_pipeline() {
    Check ck;
    const std::set<std::uint64_t> values = {4, 8, 12};
    const std::set<std::uint64_t> factors = {3, 5, 15};
    const std::set<std::uint64_t> primes = {3, 5};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = run_shor15_pipeline(1000, kSeed + seed);
        const std::string tag = "seed " + std::to_string(kSeed + seed);
        ck.require(r.measured_values == values, tag + " measured values");
        ck.require(r.factors == factors, tag + " factors");
        ck.require(r.prime_factors() == primes, tag + " prime factors");
    }
    return ck;
}

Check quil_golden() {
    Check ck;
    const std::string expected =
        "DECLARE ro BIT[2]\nH 0\nCNOT 0 1\nMEASURE 0 ro[0]\nMEASURE 1 ro[1]\n";
    ck.require(translate(build_bell(), Dialect::PyQuil).source == expected,
               "pyquil text differs");
    return ck;
}

double unitarity_error(const GateUnitary &u) {
    const GateUnitary prod = u.adjoint() * u;
    return max_abs_diff(prod, GateUnitary::identity(u.dim()));
}

Check gate_semantics() {
    Check ck;
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> angle(-4 * std::numbers::pi,
                                                 4 * std::numbers::pi);
    for (const auto &g : all_gates()) {
        if (g.kind == GateKind::Measure) {
            continue;
        }
        const int trials = g.param_count ? 100 : 1;
        for (int t = 0; t < trials; ++t) {
            std::vector<double> params;
            if (g.param_count) {
                params.push_back(angle(rng));
            }
            ck.require(unitarity_error(unitary_of(g.kind, params)) <= kUnitaryTol,
                       std::string(g.name) + " not unitary");
        }
    }

    const double pi_angle[] = {std::numbers::pi};
    const GateUnitary cp = unitary_of(GateKind::CPhase, pi_angle);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const Complex want = r != c ? 0.0 : (r == 3 ? -1.0 : 1.0);
            ck.require(std::abs(cp(r, c) - want) <= kUnitaryTol,
                       "cphase(pi) != CZ");
        }
    }

    const GateUnitary ccx = unitary_of(GateKind::Toffoli);
    for (std::size_t in = 0; in < 8; ++in) {
        // Local basis: first operand is the MSB, target is the LSB.
        const std::size_t out = (in & 0b110) == 0b110 ? in ^ 1U : in;
        for (std::size_t r = 0; r < 8; ++r) {
            ck.require(ccx(r, in) == Complex(r == out ? 1.0 : 0.0),
                       "toffoli truth table at " + std::to_string(in));
        }
    }
    return ck;
}

Check simulator_vs_oracle() {
    Check ck;
    std::mt19937_64 rng(kSeed);
    for (int trial = 0; trial < 200; ++trial) {
        const Circuit c = testing::random_circuit(rng, 4, 20, false);
        const auto dense = testing::dense_evolve(c);
        const StateVector sv = evolve_unitary(c);
        double worst = 0;
        for (std::size_t i = 0; i < dense.size(); ++i) {
            worst = std::max(worst, std::abs(dense[i] - sv.amplitudes()[i]));
        }
        ck.require(worst <= kAmplitudeTol,
                   "circuit " + std::to_string(trial) + " off by " +
                       std::to_string(worst));
    }

    for (const auto &[name, circuit] :
         {std::pair{"bell", build_bell()}, std::pair{"shor15", build_shor15()}}) {
        const Counts counts = run_shots(circuit, kTvShots, kSeed, ShotOptions{0});
        const double tv =
            total_variation_distance(counts, exact_distribution(circuit));
        ck.require(tv <= kTvTol,
                   std::string(name) + " tv " + std::to_string(tv));
    }
    return ck;
}

Check round_trip() {
    Check ck;
    std::mt19937_64 rng(kSeed);
    for (int trial = 0; trial < 1000; ++trial) {
        const Circuit c = testing::random_circuit(rng, 6, 30, true);
        ck.require(parse_circuit(serialize_circuit(c)) == c,
                   "trial " + std::to_string(trial));
    }
    for (const auto &[name, circuit] :
         {std::pair{"bell", build_bell()}, std::pair{"shor15", build_shor15()}}) {
        std::istringstream in;
        std::ostringstream out, err;
        const int code = cli::run({"demo", name}, in, out, err);
        ck.require(code == 0 && parse_circuit(out.str()) == circuit,
                   std::string("demo ") + name);
    }
    return ck;
}

Check determinism() {
    Check ck;
    for (const auto &circuit : {build_bell(), build_shor15()}) {
        const Counts first = run_shots(circuit, 5000, kSeed);
        for (int rep = 0; rep < 3; ++rep) {
            ck.require(run_shots(circuit, 5000, kSeed) == first, "repeat run");
        }
        for (std::size_t threads : {2U, 4U, 7U, 0U}) {
            ck.require(run_shots(circuit, 5000, kSeed, ShotOptions{threads}) ==
                           first,
                       "threads " + std::to_string(threads));
        }
    }
    return ck;
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Check()>>> criteria = {
        {"bell distribution", bell_distribution},
        {"shor15 distribution", shor_distribution},
        {"factor pipeline", factor_pipeline},
        {"quil golden", quil_golden},
        {"gate semantics", gate_semantics},
        {"simulator vs oracle", simulator_vs_oracle},
        {"round trip", round_trip},
        {"determinism", determinism},
    };
    int failed = 0;
    int index = 1;
    for (const auto &[name, fn] : criteria) {
        Check ck;
        try {
            ck = fn();
        } catch (const std::exception &e) {
            ck.ok = false;
            ck.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s%s%s\n", ck.ok ? "PASS" : "FAIL",
                    index++, name, ck.detail.empty() ? "" : " | ",
                    ck.detail.c_str());
        failed += ck.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
