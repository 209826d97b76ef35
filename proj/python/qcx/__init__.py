"""Quantum circuit IR, multi-framework source emitter and statevector simulator."""

from ._core import (
    Circuit,
    ParseError,
    QcxError,
    SimError,
    ValidationError,
    build_bell,
    build_shor15,
    estimate_period,
    exact_distribution,
    extract_factors,
    parse,
    print_circuit,
    run_shor15_pipeline,
    run_shots,
    serialize,
    translate,
)

__all__ = [
    "Circuit",
    "ParseError",
    "QcxError",
    "SimError",
    "ValidationError",
    "build_bell",
    "build_shor15",
    "estimate_period",
    "exact_distribution",
    "extract_factors",
    "parse",
    "print_circuit",
    "run_shor15_pipeline",
    "run_shots",
    "serialize",
    "translate",
]
