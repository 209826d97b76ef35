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
#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "qcx/dsl.hpp"
#include "qcx/emit.hpp"
#include "qcx/errors.hpp"

namespace qcx::cli {

namespace {

/// Thrown for bad arguments detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path, std::istream &in) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(file),
            std::istreambuf_iterator<char>()};
}

std::string python_dict(const Counts &counts) {
    std::vector<std::string> items;
    for (const auto &[key, n] : counts.entries) {
        items.push_back(fmt::format("'{}': {}", key, n));
    }
    return fmt::format("{{{}}}", fmt::join(items, ", "));
}

std::string brace_set(const std::set<std::uint64_t> &values) {
    if (values.empty()) {
        return "{}";
    }
    return fmt::format("{{{}}}", fmt::join(values, ", "));
}

std::uint64_t resolve_seed(std::uint64_t seed, bool random, std::ostream &err) {
    if (!random) {
        return seed;
    }
    std::random_device rd;
    const std::uint64_t drawn =
        (static_cast<std::uint64_t>(rd()) << 32) | rd();
    err << "seed: " << drawn << "\n";
    return drawn;
}

} // namespace

std::string format_counts(const Counts &counts) {
    std::string out;
    for (const auto &[key, n] : counts.entries) {
        out += fmt::format("{} {}\n", key, n);
    }
    return out;
}

std::string format_json(const Counts &counts, std::uint64_t seed) {
    nlohmann::json doc;
    doc["shots"] = counts.shots;
    doc["seed"] = seed;
    doc["counts"] = nlohmann::json::object();
    for (const auto &[key, n] : counts.entries) {
        doc["counts"][key] = n;
    }
    return doc.dump() + "\n";
}

std::string format_histogram(const Counts &counts) {
    std::uint64_t peak = 0;
    for (const auto &[key, n] : counts.entries) {
        peak = std::max(peak, n);
    }
    std::string out;
    for (const auto &[key, n] : counts.entries) {
        const auto len = peak == 0
                             ? std::size_t{0}
                             : static_cast<std::size_t>(std::llround(
                                   static_cast<double>(n) * kHistogramWidth /
                                   static_cast<double>(peak)));
        out += fmt::format("{} | {} {}\n", key, std::string(len, '#'), n);
    }
    return out;
}

std::string format_factor_report(const FactorReport &report) {
    std::string out;
    out += "counts: " + python_dict(report.counts) + "\n";
    out += "measured values: " + brace_set(report.measured_values) + "\n";
    for (const auto &t : report.periods_tried) {
        out += fmt::format("a={} m={} r={} {}\n", t.base, t.measured, t.period,
                           t.accepted ? "accepted" : "rejected");
    }
    for (const auto &b : report.bases) {
        if (b.found_period) {
            out += fmt::format("a={}: found a period.\n", b.base);
        } else {
            out += fmt::format("a={}: Did not find a period.\n", b.base);
        }
    }
    out += "factors: " + brace_set(report.factors) + "\n";
    const auto primes = report.prime_factors();
    if (!primes.empty()) {
        out += "prime factors: " + brace_set(primes) + "\n";
    }
    return out;
}

int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum circuit translator and simulator", "qcx"};
    app.require_subcommand(1);

    std::string input;
    std::string dialect_arg;
    std::size_t shots = kDefaultShots;
    std::uint64_t seed = 0;
    bool random_seed = false;
    std::string format = "counts";
    std::string demo_name;

    auto *translate_cmd =
        app.add_subcommand("translate", "Emit framework source for a circuit");
    translate_cmd->add_option("file", input, "Circuit file or - for stdin")
        ->required();
    translate_cmd
        ->add_option("--to", dialect_arg,
                     "qiskit, cirq, pennylane, pyquil or braket")
        ->required();

    auto *print_cmd = app.add_subcommand("print", "Draw a circuit as ASCII");
    print_cmd->add_option("file", input, "Circuit file or - for stdin")
        ->required();

    auto *simulate_cmd =
        app.add_subcommand("simulate", "Sample measurement outcomes");
    simulate_cmd->add_option("file", input, "Circuit file or - for stdin")
        ->required();
    simulate_cmd->add_option("--shots", shots, "Number of shots")
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--seed", seed, "Random seed");
    simulate_cmd->add_flag("--random", random_seed,
                           "Draw the seed from system entropy");
    simulate_cmd->add_option("--format", format, "counts, json or hist")
        ->check(CLI::IsMember({"counts", "json", "hist"}));

    auto *demo_cmd =
        app.add_subcommand("demo", "Print a built-in circuit document");
    demo_cmd->add_option("name", demo_name, "bell or shor15")->required();

    auto *factor_cmd =
        app.add_subcommand("factor15", "Factor 15 with the compiled circuit");
    factor_cmd->add_option("--shots", shots, "Number of shots")
        ->check(CLI::PositiveNumber);
    factor_cmd->add_option("--seed", seed, "Random seed");
    factor_cmd->add_flag("--random", random_seed,
                         "Draw the seed from system entropy");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (translate_cmd->parsed()) {
            const auto dialect = parse_dialect(dialect_arg);
            if (!dialect) {
                throw UsageError("unknown dialect '" + dialect_arg + "'");
            }
            const Circuit circuit = parse_circuit(read_input(input, in));
            out << translate(circuit, *dialect).source;
        } else if (print_cmd->parsed()) {
            out << print_circuit(parse_circuit(read_input(input, in)));
        } else if (simulate_cmd->parsed()) {
            const Circuit circuit = parse_circuit(read_input(input, in));
            seed = resolve_seed(seed, random_seed, err);
            const Counts counts =
                run_shots(circuit, shots, seed, ShotOptions{0});
            if (format == "json") {
                out << format_json(counts, seed);
            } else if (format == "hist") {
                out << format_histogram(counts);
            } else {
                out << format_counts(counts);
            }
        } else if (demo_cmd->parsed()) {
            if (demo_name == "bell") {
                out << serialize_circuit(build_bell());
            } else if (demo_name == "shor15") {
                out << serialize_circuit(build_shor15());
            } else {
                throw UsageError("unknown demo '" + demo_name +
                                 "' (expected bell or shor15)");
            }
        } else if (factor_cmd->parsed()) {
            seed = resolve_seed(seed, random_seed, err);
            out << format_factor_report(
                run_shor15_pipeline(shots, seed, ShotOptions{0}));
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kRuntime;
    }
    return kOk;
}

} // namespace qcx::cli
