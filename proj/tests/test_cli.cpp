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
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "qcx/dsl.hpp"
#include "cli.hpp"

using namespace qcx;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string &stdin_text = {}) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kBell = serialize_circuit(build_bell());

std::size_t line_count(const std::string &s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("exit codes", "[cli]") {
    struct Row {
        std::vector<std::string> args;
        std::string input;
        int code;
    };
    const std::vector<Row> rows = {
        {{"demo", "bell"}, "", cli::kOk},
        {{"demo", "shor15"}, "", cli::kOk},
        {{"demo", "grover"}, "", cli::kUsage},
        {{}, "", cli::kUsage},
        {{"frobnicate"}, "", cli::kUsage},
        {{"translate", "-"}, kBell, cli::kUsage},
        {{"translate", "-", "--to", "nosuch"}, kBell, cli::kUsage},
        {{"translate", "/nonexistent/x.qc", "--to", "qiskit"}, "", cli::kUsage},
        {{"translate", "-", "--to", "qiskit"}, kBell, cli::kOk},
        {{"translate", "-", "--to", "cirq"}, "qubits 2\nh 0\n", cli::kParse},
        {{"print", "-"}, "qubits 2\nclbits 0\nh 5\n", cli::kParse},
        {{"simulate", "-"}, "qubits 1\nclbits 0\nh 0\n", cli::kRuntime},
        {{"simulate", "-", "--shots", "0"}, kBell, cli::kUsage},
        {{"simulate", "-", "--format", "xml"}, kBell, cli::kUsage},
        {{"simulate", "-", "--format", "hist"}, kBell, cli::kOk},
        {{"factor15", "--shots", "50"}, "", cli::kOk},
        {{"--help"}, "", cli::kOk},
    };
    for (const auto &row : rows) {
        std::string joined;
        for (const auto &a : row.args) {
            joined += a + " ";
        }
        CAPTURE(joined);
        const auto r = invoke(row.args, row.input);
        CHECK(r.code == row.code);
        if (row.code >= cli::kParse) {
            CHECK_FALSE(r.err.empty());
            CHECK(r.out.empty());
        }
    }
}

TEST_CASE("demo documents re-parse to the builders", "[cli]") {
    const auto bell = invoke({"demo", "bell"});
    CHECK(line_count(bell.out) == 6);
    CHECK(parse_circuit(bell.out) == build_bell());
    const auto shor = invoke({"demo", "shor15"});
    CHECK(line_count(shor.out) == 35);
    CHECK(parse_circuit(shor.out) == build_shor15());
}

TEST_CASE("translate from stdin", "[cli]") {
    const auto r = invoke({"translate", "-", "--to", "pyquil"}, kBell);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "DECLARE ro BIT[2]\nH 0\nCNOT 0 1\nMEASURE 0 ro[0]\nMEASURE 1 ro[1]\n");
    CHECK(r.err.empty());
}

TEST_CASE("print from stdin", "[cli]") {
    const auto r = invoke({"print", "-"}, kBell);
    CHECK(r.out == "q0: -H-*-M0-\nq1: ---+-M1-\n");
}

TEST_CASE("simulate output formats", "[cli]") {
    const auto counts = invoke({"simulate", "-", "--seed", "3"}, kBell);
    REQUIRE(counts.code == 0);
    CHECK(counts.out.rfind("00 ", 0) == 0);
    CHECK(line_count(counts.out) == 2);

    const auto json = invoke(
        {"simulate", "-", "--seed", "3", "--format", "json"}, kBell);
    REQUIRE(json.code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["shots"] == 1000);
    CHECK(doc["seed"] == 3);
    CHECK(doc["counts"]["00"].get<int>() + doc["counts"]["11"].get<int>() ==
          1000);
    // Keys appear sorted.
    CHECK(json.out.find("\"counts\"") < json.out.find("\"seed\""));
    CHECK(json.out.find("\"seed\"") < json.out.find("\"shots\""));

    const auto one = invoke({"simulate", "-", "--shots", "1"}, kBell);
    CHECK(line_count(one.out) == 1);
    CHECK(one.out.substr(one.out.size() - 3) == " 1\n");

    const auto hist = invoke({"simulate", "-", "--format", "hist"}, kBell);
    CHECK(line_count(hist.out) == 2);
    CHECK(hist.out.find(std::string(cli::kHistogramWidth, '#')) !=
          std::string::npos);
}

TEST_CASE("seeded runs repeat, random seeds are reported", "[cli]") {
    const auto a = invoke({"simulate", "-", "--seed", "11"}, kBell);
    const auto b = invoke({"simulate", "-", "--seed", "11"}, kBell);
    CHECK(a.out == b.out);

    const auto r = invoke({"simulate", "-", "--random"}, kBell);
    CHECK(r.code == 0);
    CHECK(r.err.rfind("seed: ", 0) == 0);
}

TEST_CASE("factor15 report", "[cli]") {
    const auto a = invoke({"factor15", "--seed", "1"});
    REQUIRE(a.code == 0);
    CHECK(a.out == invoke({"factor15", "--seed", "1"}).out);
    CHECK(a.out.find("measured values: {4, 8, 12}\n") != std::string::npos);
    CHECK(a.out.find("factors: {3, 5, 15}\n") != std::string::npos);
    CHECK(a.out.find("prime factors: {3, 5}\n") != std::string::npos);
    CHECK(a.out.find("a=7: found a period.\n") != std::string::npos);
    CHECK(a.out.rfind("counts: {'00000000': ", 0) == 0);
}

TEST_CASE("factor report without periods", "[cli]") {
    const FactorReport report = extract_factors({});
    const std::string text = cli::format_factor_report(report);
    CHECK(text.find("a=2: Did not find a period.\n") != std::string::npos);
    CHECK(text.find("factors: {}\n") != std::string::npos);
    CHECK(text.find("prime factors") == std::string::npos);
}

TEST_CASE("formatters", "[cli]") {
    Counts c;
    c.entries = {{"00", 3}, {"11", 6}};
    c.shots = 9;
    CHECK(cli::format_counts(c) == "00 3\n11 6\n");
    CHECK(cli::format_json(c, 4) ==
          "{\"counts\":{\"00\":3,\"11\":6},\"seed\":4,\"shots\":9}\n");
    CHECK(cli::format_histogram(c) == "00 | " + std::string(25, '#') +
                                          " 3\n11 | " + std::string(50, '#') +
                                          " 6\n");
}
