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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "qcx/algos.hpp"
#include "qcx/circuit.hpp"
#include "qcx/dsl.hpp"
#include "qcx/emit.hpp"
#include "qcx/errors.hpp"
#include "qcx/simulator.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

qcx::Dialect dialect_from(const std::string &name) {
    const auto d = qcx::parse_dialect(name);
    if (!d) {
        throw py::value_error("unknown dialect '" + name + "'");
    }
    return *d;
}

py::dict op_to_dict(const qcx::GateOp &op) {
    py::dict d;
    d["name"] = std::string(qcx::gate_name(op.kind));
    d["qubits"] = op.qubits;
    d["clbit"] = op.clbit;
    d["params"] = op.params;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum circuit IR, multi-framework emitter and statevector "
              "simulator";

    auto base = py::register_exception<qcx::Error>(m, "QcxError");
    auto validation =
        py::register_exception<qcx::ValidationError>(m, "ValidationError",
                                                     base.ptr());
    py::register_exception<qcx::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<qcx::SimError>(m, "SimError", base.ptr());
    // Specific IR errors surface as ValidationError.
    (void)validation;

    py::class_<qcx::Circuit>(m, "Circuit")
        .def(py::init<std::size_t, std::size_t>(), "num_qubits"_a,
             "num_clbits"_a)
        .def_property_readonly("num_qubits", &qcx::Circuit::num_qubits)
        .def_property_readonly("num_clbits", &qcx::Circuit::num_clbits)
        .def(
            "add_gate",
            [](qcx::Circuit &c, const std::string &name,
               const std::vector<std::size_t> &operands,
               const std::vector<double> &params) -> qcx::Circuit & {
                return c.add_gate(name, operands, params);
            },
            "name"_a, "operands"_a, "params"_a = std::vector<double>{},
            py::return_value_policy::reference_internal)
        .def("has_measurement", &qcx::Circuit::has_measurement)
        .def_property_readonly("ops",
                               [](const qcx::Circuit &c) {
                                   py::list ops;
                                   for (const auto &op : c.ops()) {
                                       ops.append(op_to_dict(op));
                                   }
                                   return ops;
                               })
        .def("__len__", &qcx::Circuit::size)
        .def("__eq__", [](const qcx::Circuit &a, const qcx::Circuit &b) {
            return a == b;
        })
        .def("__repr__", [](const qcx::Circuit &c) {
            return "<Circuit qubits=" + std::to_string(c.num_qubits()) +
                   " clbits=" + std::to_string(c.num_clbits()) +
                   " ops=" + std::to_string(c.size()) + ">";
        });

    m.def("parse", &qcx::parse_circuit, "text"_a);
    m.def("serialize", &qcx::serialize_circuit, "circuit"_a);
    m.def(
        "translate",
        [](const qcx::Circuit &c, const std::string &dialect) {
            return qcx::translate(c, dialect_from(dialect)).source;
        },
        "circuit"_a, "dialect"_a);
    m.def("print_circuit", &qcx::print_circuit, "circuit"_a);

    m.def(
        "run_shots",
        [](const qcx::Circuit &c, std::size_t shots, std::uint64_t seed,
           std::size_t threads) {
            qcx::Counts counts;
            {
                py::gil_scoped_release release;
                counts = qcx::run_shots(c, shots, seed,
                                        qcx::ShotOptions{threads});
            }
            return counts.entries;
        },
        "circuit"_a, "shots"_a = qcx::kDefaultShots, "seed"_a = 0,
        "threads"_a = 1);
    m.def(
        "exact_distribution",
        [](const qcx::Circuit &c) { return qcx::exact_distribution(c).entries; },
        "circuit"_a);

    m.def("build_bell", &qcx::build_bell);
    m.def("build_shor15", &qcx::build_shor15);
    m.def("estimate_period", &qcx::estimate_period, "m"_a, "n_count"_a = 4);
    m.def(
        "extract_factors",
        [](const std::set<std::uint64_t> &measured) {
            return qcx::extract_factors(measured).factors;
        },
        "measured_values"_a);
    m.def(
        "run_shor15_pipeline",
        [](std::size_t shots, std::uint64_t seed) {
            const auto report = qcx::run_shor15_pipeline(shots, seed);
            py::dict d;
            d["counts"] = report.counts.entries;
            d["measured_values"] = report.measured_values;
            d["factors"] = report.factors;
            d["prime_factors"] = report.prime_factors();
            return d;
        },
        "shots"_a = qcx::kDefaultShots, "seed"_a = 0);
}
