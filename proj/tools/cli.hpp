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

#include <iosfwd>
#include <string>
#include <vector>

#include "qcx/algos.hpp"
#include "qcx/simulator.hpp"

namespace qcx::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kRuntime = 3,
};

/// Runs the command line `args` (without the program name). Payload goes to
/// `out`, diagnostics to `err`; "-" as an input path reads `in`.
int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

/// "bitstring count" per line, keys ascending.
[[nodiscard]] std::string format_counts(const Counts &counts);

/// {"counts":{...},"seed":S,"shots":N}
[[nodiscard]] std::string format_json(const Counts &counts,
                                      std::uint64_t seed);

/// One row per key, bars scaled so the largest count spans 50 columns.
[[nodiscard]] std::string format_histogram(const Counts &counts);

[[nodiscard]] std::string format_factor_report(const FactorReport &report);

inline constexpr std::size_t kHistogramWidth = 50;

} // namespace qcx::cli
