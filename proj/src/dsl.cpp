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
#include "qcx/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "qcx/errors.hpp"
#include "qcx/format.hpp"

namespace qcx {

namespace {

constexpr double kPi = std::numbers::pi;

struct PiToken {
    std::string_view text;
    double value;
};

constexpr std::array<PiToken, 8> kPiTokens{{
    {"pi", kPi},
    {"-pi", -kPi},
    {"pi/2", kPi / 2},
    {"pi/4", kPi / 4},
    {"pi/8", kPi / 8},
    {"pi/16", kPi / 16},
    {"-pi/2", -kPi / 2},
    {"-pi/4", -kPi / 4},
}};

bool is_space(char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && !is_space(s[i])) {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> parse_index(std::string_view token) {
    if (token.empty() ||
        !std::isdigit(static_cast<unsigned char>(token.front()))) {
        return std::nullopt;
    }
    std::size_t value = 0;
    const auto res =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

std::size_t parse_header(std::size_t line_no, std::string_view line,
                         std::string_view keyword) {
    const auto tokens = split_ws(line);
    if (tokens.size() != 2 || !iequals(tokens[0], keyword)) {
        throw ParseError(line_no, "expected header '" + std::string(keyword) +
                                      " <count>'");
    }
    const auto value = parse_index(tokens[1]);
    if (!value) {
        throw ParseError(line_no, "malformed " + std::string(keyword) +
                                      " count '" + std::string(tokens[1]) +
                                      "'");
    }
    return *value;
}

GateOp parse_instruction(std::size_t line_no, std::string_view line) {
    std::size_t pos = 0;
    while (pos < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[pos])) ||
            line[pos] == '_')) {
        ++pos;
    }
    const std::string_view name = line.substr(0, pos);
    if (name.empty()) {
        throw ParseError(line_no, "expected a gate name");
    }

    GateOp op;
    try {
        op.kind = resolve_gate_name(name);
    } catch (const UnknownGateError &) {
        throw ParseError(line_no, "unknown gate '" + std::string(name) + "'");
    }
    const GateInfo &info = gate_info(op.kind);

    std::string_view rest = trim(line.substr(pos));
    if (!rest.empty() && rest.front() == '(') {
        const std::size_t close = rest.find(')');
        if (close == std::string_view::npos) {
            throw ParseError(line_no, "missing ')' after angle");
        }
        const std::string_view token = trim(rest.substr(1, close - 1));
        const auto value = parse_angle(token);
        if (!value) {
            throw ParseError(line_no,
                             "malformed angle '" + std::string(token) + "'");
        }
        op.params.push_back(*value);
        rest = rest.substr(close + 1);
    }
    if (op.params.size() != info.param_count) {
        throw ParseError(line_no,
                         std::string(info.name) +
                             (info.param_count ? " requires an angle"
                                               : " takes no angle"));
    }

    // Tolerate "0->0" as well as "0 -> 0".
    std::string operands(rest);
    for (std::size_t at = operands.find("->"); at != std::string::npos;
         at = operands.find("->", at + 4)) {
        operands.replace(at, 2, " -> ");
    }
    auto tokens = split_ws(operands);

    if (op.kind == GateKind::Measure) {
        if (tokens.size() != 3 || tokens[1] != "->") {
            throw ParseError(line_no, "expected 'measure <qubit> -> <clbit>'");
        }
        tokens.erase(tokens.begin() + 1);
    } else if (tokens.size() != info.qubit_arity) {
        throw ParseError(line_no, std::string(info.name) + " takes " +
                                      std::to_string(info.qubit_arity) +
                                      " qubit operand(s), got " +
                                      std::to_string(tokens.size()));
    }

    std::vector<std::size_t> indices;
    for (auto token : tokens) {
        const auto value = parse_index(token);
        if (!value) {
            throw ParseError(line_no,
                             "malformed index '" + std::string(token) + "'");
        }
        indices.push_back(*value);
    }
    if (op.kind == GateKind::Measure) {
        op.qubits = {indices[0]};
        op.clbit = indices[1];
    } else {
        op.qubits = std::move(indices);
    }
    return op;
}

} // namespace

std::optional<double> parse_angle(std::string_view token) {
    for (const auto &pt : kPiTokens) {
        if (token == pt.text) {
            return pt.value;
        }
    }
    if (token.empty()) {
        return std::nullopt;
    }
    // from_chars rejects a leading '+', accept it explicitly.
    if (token.front() == '+') {
        token.remove_prefix(1);
    }
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(),
                                     value, std::chars_format::general);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size() ||
        !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

Circuit parse_circuit(std::string_view text) {
    std::optional<std::size_t> num_qubits;
    std::size_t qubits_line = 0;
    std::optional<Circuit> circuit;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }

        if (!num_qubits) {
            num_qubits = parse_header(line_no, line, "qubits");
            qubits_line = line_no;
            if (*num_qubits < 1 || *num_qubits > kMaxQubits) {
                throw ParseError(line_no,
                                 "qubit count must be in [1, " +
                                     std::to_string(kMaxQubits) + "]");
            }
        } else if (!circuit) {
            const std::size_t nc = parse_header(line_no, line, "clbits");
            try {
                circuit.emplace(*num_qubits, nc);
            } catch (const ValidationError &e) {
                throw ParseError(qubits_line, e.what());
            }
        } else {
            GateOp op = parse_instruction(line_no, line);
            try {
                circuit->append(std::move(op));
            } catch (const ValidationError &e) {
                throw ParseError(line_no, e.what());
            }
        }
        if (end == text.size()) {
            break;
        }
    }

    // Missing headers are reported at the last line of the document; the
    // empty tail after a final newline is not a line.
    std::size_t last_line = static_cast<std::size_t>(
        std::count(text.begin(), text.end(), '\n'));
    if (!text.empty() && text.back() != '\n') {
        ++last_line;
    }
    last_line = std::max<std::size_t>(last_line, 1);
    if (!num_qubits) {
        throw ParseError(last_line, "missing 'qubits' header");
    }
    if (!circuit) {
        throw ParseError(last_line, "missing 'clbits' header");
    }
    return std::move(*circuit);
}

std::string serialize_circuit(const Circuit &circuit) {
    std::string out = "qubits " + std::to_string(circuit.num_qubits()) +
                      "\nclbits " + std::to_string(circuit.num_clbits()) +
                      "\n";
    for (const auto &op : circuit.ops()) {
        out += gate_name(op.kind);
        if (!op.params.empty()) {
            out += "(" + format_angle(op.params[0]) + ")";
        }
        for (std::size_t q : op.qubits) {
            out += " " + std::to_string(q);
        }
        if (op.clbit) {
            out += " -> " + std::to_string(*op.clbit);
        }
        out += "\n";
    }
    return out;
}

} // namespace qcx
