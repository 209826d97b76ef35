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

#include <numbers>
#include <random>
#include <sstream>

#include "qcx/algos.hpp"
#include "qcx/dsl.hpp"
#include "qcx/errors.hpp"
#include "support/dense_oracle.hpp"

using namespace qcx;

namespace {

constexpr const char *kBellText =
    "qubits 2\nclbits 2\nh 0\ncnot 0 1\nmeasure 0 -> 0\nmeasure 1 -> 1\n";

std::size_t error_line(std::string_view text) {
    try {
        (void)parse_circuit(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    FAIL("expected a ParseError for:\n" << text);
    return 0;
}

} // namespace

TEST_CASE("parse examples", "[dsl]") {
    CHECK(parse_circuit(kBellText) == build_bell());

    const Circuit empty = parse_circuit("qubits 1\nclbits 0\n");
    CHECK(empty == Circuit(1, 0));

    const Circuit cp = parse_circuit("qubits 2\nclbits 2\ncphase(pi/2) 0 1\n");
    REQUIRE(cp.size() == 1);
    CHECK(cp.ops()[0].kind == GateKind::CPhase);
    CHECK(cp.ops()[0].qubits == std::vector<std::size_t>{0, 1});
    CHECK(cp.ops()[0].params[0] == 1.5707963267948966);
}

TEST_CASE("parse accepts comments, case, CRLF and loose spacing", "[dsl]") {
    const Circuit c = parse_circuit(
        "# header comment\r\n"
        "\r\n"
        "QUBITS 2   # two\r\n"
        "clbits 2\r\n"
        "  H 0\r\n"
        "CX 0 1\r\n"
        "rz (  -pi/4 ) 1\r\n"
        "ry(1e-3) 0\r\n"
        "measure 0->0\r\n"
        "Measure   1 ->   1");
    Circuit expected(2, 2);
    expected.h(0).cnot(0, 1).rz(-std::numbers::pi / 4, 1).ry(1e-3, 0);
    expected.measure(0, 0).measure(1, 1);
    CHECK(c == expected);
}

TEST_CASE("pi tokens", "[dsl]") {
    const double pi = std::numbers::pi;
    CHECK(parse_angle("pi") == pi);
    CHECK(parse_angle("-pi") == -pi);
    CHECK(parse_angle("pi/2") == pi / 2);
    CHECK(parse_angle("pi/4") == pi / 4);
    CHECK(parse_angle("pi/8") == pi / 8);
    CHECK(parse_angle("pi/16") == pi / 16);
    CHECK(parse_angle("-pi/2") == -pi / 2);
    CHECK(parse_angle("-pi/4") == -pi / 4);
    CHECK(parse_angle("0.25") == 0.25);
    CHECK(parse_angle("+2") == 2.0);
    CHECK_FALSE(parse_angle("pi/3").has_value());
    CHECK_FALSE(parse_angle("2*pi").has_value());
    CHECK_FALSE(parse_angle("inf").has_value());
    CHECK_FALSE(parse_angle("nan").has_value());
    CHECK_FALSE(parse_angle("1.0x").has_value());
    CHECK_FALSE(parse_angle("").has_value());
}

TEST_CASE("parse errors carry the offending line", "[dsl][errors]") {
    CHECK(error_line("") == 1);
    CHECK(error_line("clbits 2\nqubits 2\n") == 1);
    CHECK(error_line("qubits 2\n") == 1);
    CHECK(error_line("qubits 2\n# c\nh 0\n") == 3);
    CHECK(error_line("qubits two\nclbits 1\n") == 1);
    CHECK(error_line("qubits 0\nclbits 1\n") == 1);
    CHECK(error_line("qubits 99\nclbits 1\n") == 1);
    CHECK(error_line("qubits 2\nclbits 1\nfoo 0\n") == 3);
    CHECK(error_line("qubits 2\nclbits 1\nh 0\nrx(pi/3) 0\n") == 4);
    CHECK(error_line("qubits 2\nclbits 1\nrx 0\n") == 3);
    CHECK(error_line("qubits 2\nclbits 1\nh(0.5) 0\n") == 3);
    CHECK(error_line("qubits 2\nclbits 1\ncnot 0\n") == 3);
    CHECK(error_line("qubits 2\nclbits 1\ncnot 0 0\n") == 3);
    CHECK(error_line("qubits 2\nclbits 1\nh 2\n") == 3);
    CHECK(error_line("qubits 2\nclbits 1\nh -1\n") == 3);
    CHECK(error_line("qubits 2\nclbits 1\nmeasure 0 0\n") == 3);
    CHECK(error_line("qubits 2\nclbits 1\nmeasure 0 -> 1\n") == 3);
    CHECK(error_line("qubits 2\nclbits 1\nrx(0.5 0\n") == 3);
}

TEST_CASE("serialize examples", "[dsl]") {
    CHECK(serialize_circuit(build_bell()) == kBellText);
    Circuit rx(1, 0);
    rx.rx(std::numbers::pi, 0);
    CHECK(serialize_circuit(rx) == "qubits 1\nclbits 0\nrx(3.141592653589793) 0\n");
    CHECK(serialize_circuit(Circuit(3, 1)) == "qubits 3\nclbits 1\n");
}

TEST_CASE("round trip and canonical form", "[dsl][property]") {
    std::mt19937_64 rng(1000);
    for (int trial = 0; trial < 1000; ++trial) {
        const Circuit c = testing::random_circuit(rng, 6, 30, true);
        const std::string text = serialize_circuit(c);
        const Circuit back = parse_circuit(text);
        REQUIRE(back == c);
        CHECK(serialize_circuit(back) == text);
    }
}

TEST_CASE("mutated documents fail with an in-range line number",
          "[dsl][errors][property]") {
    std::mt19937_64 rng(55);
    const std::string junk = "()->#x9 -.";
    int failures = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const Circuit c = testing::random_circuit(rng, 4, 10, true);
        std::string text = serialize_circuit(c);
        const std::size_t edits = 1 + rng() % 3;
        for (std::size_t e = 0; e < edits && !text.empty(); ++e) {
            const std::size_t pos = rng() % text.size();
            switch (rng() % 3) {
            case 0:
                text.erase(pos, 1);
                break;
            case 1:
                text.insert(pos, 1, junk[rng() % junk.size()]);
                break;
            default:
                text[pos] = junk[rng() % junk.size()];
                break;
            }
        }
        const auto line_count =
            static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
        try {
            (void)parse_circuit(text);
        } catch (const ParseError &e) {
            ++failures;
            CHECK(e.line() >= 1);
            CHECK(e.line() <= line_count);
        }
    }
    CHECK(failures > 0);
}
