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
#include "qcx/algos.hpp"

#include <numbers>
#include <numeric>
#include <string>

#include "qcx/errors.hpp"

namespace qcx {

Circuit build_bell() {
    Circuit c(2, 2);
    c.h(0).cnot(0, 1).measure(0, 0).measure(1, 1);
    return c;
}

Circuit build_shor15() {
    constexpr std::size_t n = 4;
    Circuit c(8, 8);

    for (std::size_t i = 0; i < n; ++i) {
        c.h(i);
    }

    // Controlled multiplication by 7 mod 15.
    c.x(4);
    c.cnot(0, 5).cnot(0, 6).cnot(1, 4).cnot(1, 6);
    for (std::size_t t = 4; t < 8; ++t) {
        c.toffoli(0, 1, t);
    }
    for (std::size_t q = 4; q < 8; ++q) {
        c.measure(q, q);
    }

    for (std::size_t i = n; i-- > 0;) {
        c.h(i);
        for (std::size_t j = i; j-- > 0;) {
            const double theta =
                std::numbers::pi / static_cast<double>(std::size_t{1} << (i - j));
            c.cphase(theta, j, i);
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
        c.swap(i, n - i - 1);
    }

    for (std::size_t i = 0; i < n; ++i) {
        c.measure(i, i + 4);
    }
    return c;
}

std::set<std::uint64_t> extract_measured_values(const Counts &counts,
                                                unsigned n_count) {
    std::set<std::uint64_t> values;
    for (const auto &[key, count] : counts.entries) {
        if (key.size() < n_count) {
            throw ValidationError("counts key '" + key + "' shorter than " +
                                  std::to_string(n_count) + " bits");
        }
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < n_count; ++i) {
            m = (m << 1) | (key[i] == '1' ? 1U : 0U);
        }
        if (m != 0) {
            values.insert(m);
        }
    }
    return values;
}

std::uint64_t estimate_period(std::uint64_t m, unsigned n_count) {
    const std::uint64_t denom = std::uint64_t{1} << n_count;
    if (m == 0 || m >= denom) {
        throw ValidationError("measured value " + std::to_string(m) +
                              " outside [1, " + std::to_string(denom) + ")");
    }
    return denom / std::gcd(m, denom);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod) {
    if (mod == 0 || mod > 0xFFFFFFFFULL) {
        throw ValidationError("modulus must be in [1, 2^32)");
    }
    if (mod == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    std::uint64_t b = base % mod;
    while (exp > 0) {
        if (exp & 1U) {
            result = (result * b) % mod;
        }
        b = (b * b) % mod;
        exp >>= 1U;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::set<std::uint64_t> FactorReport::prime_factors() const {
    std::set<std::uint64_t> primes;
    for (auto f : factors) {
        if (is_prime(f)) {
            primes.insert(f);
        }
    }
    return primes;
}

FactorReport extract_factors(const std::set<std::uint64_t> &measured_values,
                             const ShorConfig &config) {
    const std::uint64_t n = config.modulus;
    FactorReport report;
    report.measured_values = measured_values;

    for (std::uint64_t a = 2; a < n; ++a) {
        if (std::gcd(a, n) != 1) {
            continue;
        }
        bool found = false;
        for (std::uint64_t m : measured_values) {
            const std::uint64_t r = estimate_period(m, config.n_count);
            const bool accepted = pow_mod(a, r, n) == 1;
            report.periods_tried.push_back({a, m, r, accepted});
            if (!accepted) {
                continue;
            }
            // gcd(y, n) == gcd(y mod n, n), so the reduced power suffices.
            const std::uint64_t half = pow_mod(a, r / 2, n);
            const std::uint64_t plus = std::gcd((half + 1) % n, n);
            const std::uint64_t minus = std::gcd((half + n - 1) % n, n);
            if (plus > 1) {
                report.factors.insert(plus);
            }
            if (minus > 1) {
                report.factors.insert(minus);
            }
            found = true;
        }
        report.bases.push_back({a, found});
    }
    return report;
}

FactorReport run_shor15_pipeline(std::size_t shots, std::uint64_t seed,
                                 const ShotOptions &options) {
    const ShorConfig config;
    Counts counts = run_shots(build_shor15(), shots, seed, options);
    FactorReport report =
        extract_factors(extract_measured_values(counts, config.n_count), config);
    report.counts = std::move(counts);
    return report;
}

} // namespace qcx
