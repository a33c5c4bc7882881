"""Verification suites with deterministic, machine-readable reports.

Each suite walks a parameter grid in sorted order, draws its random inputs
from per-cell seeded generators, and records one residual per case.  A report
passes iff every case residual is at or below its tolerance.  Reports carry
no timestamps, so identical arguments produce identical content.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .closed_forms import (
    fidelity,
    scaling_residual,
    scaling_residual_bloch,
    shrink,
)
from .cloner import ancilla_dim, clone_amplitudes, clone_channel, concatenate, isometry_gram
from .oracle import (
    covariance_check,
    ginibre_sym_operator,
    hermitian_sym_operator,
    oracle_clone,
    random_unitary,
)
from .symspace import InvalidParameterError, SymOperator, enumerate_basis, reduce_one

SUITES = ("scaling", "isometry", "concat", "oracle", "covariance")

TOLERANCES = {
    "scaling": 1e-10,
    "oracle": 1e-10,
    "covariance": 1e-10,
    "isometry": 1e-12,
    "concat": 1e-12,
}

# (d, m, l) cells where the full tensor-product construction stays small
ORACLE_GRID = tuple((2, m, l) for m in (1, 2, 3) for l in range(m, 5)) + tuple(
    (3, m, l) for m in (1, 2) for l in range(m, 4)
)

_KIND_CODES = {"ginibre": 0, "hermitian": 1}


@dataclass(frozen=True)
class CaseResult:
    params: dict
    residual: float
    tol: float
    passed: bool
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class RunReport:
    suite: str
    seed: int
    grid: dict
    cases: tuple[CaseResult, ...]

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def overall(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        cases = []
        for c in self.cases:
            entry = {
                "params": c.params,
                "residual": c.residual,
                "tol": c.tol,
                "passed": c.passed,
            }
            if c.extra:
                entry["extra"] = c.extra
            cases.append(entry)
        return {
            "suite": self.suite,
            "seed": self.seed,
            "grid": self.grid,
            "overall": self.overall,
            "cases": cases,
        }


def _random_input(kind: str, d: int, m: int, rng: np.random.Generator) -> SymOperator:
    if kind == "ginibre":
        return ginibre_sym_operator(d, m, rng)
    return hermitian_sym_operator(d, m, rng)


def _cell_rng(seed: int, *coords: int) -> np.random.Generator:
    return np.random.default_rng([seed, *coords])


def scaling_suite(
    seed: int = 0,
    tol: float | None = None,
    eta_factor: float = 1.0,
    dims: tuple[int, ...] = (2, 3, 4),
    max_m: int = 4,
    max_l: int = 6,
    inputs_per_kind: int = 10,
) -> RunReport:
    """Reduced outputs must contract by the closed-form factor, for PSD and
    non-PSD trace-1 Hermitian inputs alike."""
    tol = TOLERANCES["scaling"] if tol is None else tol
    cases = []
    for d in dims:
        for m in range(1, max_m + 1):
            for l in range(m, max_l + 1):
                for kind, code in _KIND_CODES.items():
                    rng = _cell_rng(seed, d, m, l, code)
                    worst = 0.0
                    worst_bloch = 0.0
                    for _ in range(inputs_per_kind):
                        x = _random_input(kind, d, m, rng)
                        rin = reduce_one(x)
                        rout = reduce_one(clone_channel(x, l))
                        worst = max(
                            worst, scaling_residual(rin, rout, d, m, l, eta_factor)
                        )
                        worst_bloch = max(
                            worst_bloch,
                            scaling_residual_bloch(rin, rout, d, m, l, eta_factor),
                        )
                    cases.append(
                        CaseResult(
                            params={"d": d, "m": m, "l": l, "kind": kind},
                            residual=worst,
                            tol=tol,
                            passed=worst <= tol,
                            extra={"bloch_residual": worst_bloch},
                        )
                    )
    grid = {
        "dims": list(dims),
        "max_m": max_m,
        "max_l": max_l,
        "inputs_per_kind": inputs_per_kind,
        "eta_factor": eta_factor,
    }
    return RunReport("scaling", seed, grid, tuple(cases))


def isometry_suite(
    seed: int = 0,
    tol: float | None = None,
    max_d: int = 4,
    max_m: int = 4,
    max_l: int = 8,
) -> RunReport:
    """Exact algebraic identities: amplitude normalization, isometry Gram,
    ancilla count, and fidelity-shrink consistency."""
    tol = TOLERANCES["isometry"] if tol is None else tol
    cases = []
    for d in range(2, max_d + 1):
        for m in range(1, max_m + 1):
            for l in range(m, max_l + 1):
                amps = clone_amplitudes(d, m, l)
                basis_in = enumerate_basis(d, m)
                added = enumerate_basis(d, l - m)
                norm_dev = 0.0
                for j in basis_in.order:
                    total = sum(
                        (amps.alpha_sq(j, k) for k in added.order), Fraction(0)
                    )
                    norm_dev = max(norm_dev, abs(float(total - 1)))
                cases.append(
                    CaseResult(
                        params={"check": "normalization", "d": d, "m": m, "l": l},
                        residual=norm_dev,
                        tol=tol,
                        passed=norm_dev <= tol,
                    )
                )
                gram_dev = float(
                    np.max(np.abs(isometry_gram(d, m, l) - np.eye(basis_in.size)))
                )
                cases.append(
                    CaseResult(
                        params={"check": "gram", "d": d, "m": m, "l": l},
                        residual=gram_dev,
                        tol=tol,
                        passed=gram_dev <= tol,
                    )
                )
                count_dev = float(abs(ancilla_dim(d, m, l) - added.size))
                cases.append(
                    CaseResult(
                        params={"check": "ancilla_count", "d": d, "m": m, "l": l},
                        residual=count_dev,
                        tol=tol,
                        passed=count_dev <= tol,
                    )
                )
    for d in range(2, 7):
        dev = 0.0
        for n in range(1, 11):
            for m in range(n, 11):
                exact = fidelity(d, n, m) - (1 + (d - 1) * shrink(d, n, m)) / d
                dev = max(dev, abs(float(exact)))
        cases.append(
            CaseResult(
                params={"check": "fidelity_shrink", "d": d},
                residual=dev,
                tol=tol,
                passed=dev <= tol,
            )
        )
    grid = {"max_d": max_d, "max_m": max_m, "max_l": max_l}
    return RunReport("isometry", seed, grid, tuple(cases))


def concat_suite(
    seed: int = 0,
    tol: float | None = None,
    dims: tuple[int, ...] = (2, 3),
    max_l: int = 6,
) -> RunReport:
    """Two-stage n -> m -> l cloning must equal direct n -> l cloning."""
    tol = TOLERANCES["concat"] if tol is None else tol
    cases = []
    for d in dims:
        for n in range(1, max_l + 1):
            for m in range(n, max_l + 1):
                for l in range(m, max_l + 1):
                    via, direct = concatenate(d, n, m, l)
                    dev = float(np.max(np.abs(via.entries - direct.entries)))
                    cases.append(
                        CaseResult(
                            params={"d": d, "n": n, "m": m, "l": l},
                            residual=dev,
                            tol=tol,
                            passed=dev <= tol,
                        )
                    )
    grid = {"dims": list(dims), "max_l": max_l}
    return RunReport("concat", seed, grid, tuple(cases))


def oracle_suite(
    seed: int = 0,
    tol: float | None = None,
    inputs_per_kind: int = 10,
) -> RunReport:
    """Symmetric-basis fast path against the full tensor-product construction."""
    tol = TOLERANCES["oracle"] if tol is None else tol
    cases = []
    for d, m, l in ORACLE_GRID:
        for kind, code in _KIND_CODES.items():
            rng = _cell_rng(seed, d, m, l, code)
            worst = 0.0
            for _ in range(inputs_per_kind):
                x = _random_input(kind, d, m, rng)
                fast = reduce_one(clone_channel(x, l))
                _, slow = oracle_clone(x, l)
                worst = max(
                    worst, float(np.max(np.abs(fast.entries - slow.entries)))
                )
            cases.append(
                CaseResult(
                    params={"d": d, "m": m, "l": l, "kind": kind},
                    residual=worst,
                    tol=tol,
                    passed=worst <= tol,
                )
            )
    grid = {"cells": [list(c) for c in ORACLE_GRID], "inputs_per_kind": inputs_per_kind}
    return RunReport("oracle", seed, grid, tuple(cases))


def covariance_suite(
    seed: int = 0,
    tol: float | None = None,
    unitaries_per_cell: int = 5,
) -> RunReport:
    """Single-site covariance under random local unitaries, full space both sides."""
    tol = TOLERANCES["covariance"] if tol is None else tol
    cases = []
    for d, m, l in ORACLE_GRID:
        rng = _cell_rng(seed, d, m, l, 7)
        worst = 0.0
        for i in range(unitaries_per_cell):
            kind = "ginibre" if i % 2 == 0 else "hermitian"
            x = _random_input(kind, d, m, rng)
            u = random_unitary(d, rng)
            worst = max(worst, covariance_check(u, x, l))
        cases.append(
            CaseResult(
                params={"d": d, "m": m, "l": l},
                residual=worst,
                tol=tol,
                passed=worst <= tol,
            )
        )
    grid = {
        "cells": [list(c) for c in ORACLE_GRID],
        "unitaries_per_cell": unitaries_per_cell,
    }
    return RunReport("covariance", seed, grid, tuple(cases))


def run_suite(
    name: str,
    seed: int = 0,
    tol: float | None = None,
    eta_factor: float = 1.0,
    quick: bool = False,
) -> RunReport:
    """Dispatch a named suite; "all" concatenates every suite's cases.

    quick shrinks the grids for smoke runs; the defaults are the full
    verification grids.
    """
    if name == "all":
        merged = []
        for sub in SUITES:
            report = run_suite(sub, seed=seed, tol=tol, eta_factor=eta_factor, quick=quick)
            for c in report.cases:
                merged.append(
                    CaseResult(
                        params={"suite": sub, **c.params},
                        residual=c.residual,
                        tol=c.tol,
                        passed=c.passed,
                        extra=c.extra,
                    )
                )
        return RunReport("all", seed, {"suites": list(SUITES)}, tuple(merged))
    if name == "scaling":
        if quick:
            return scaling_suite(
                seed=seed, tol=tol, eta_factor=eta_factor,
                dims=(2,), max_m=2, max_l=3, inputs_per_kind=3,
            )
        return scaling_suite(seed=seed, tol=tol, eta_factor=eta_factor)
    if name == "isometry":
        if quick:
            return isometry_suite(seed=seed, tol=tol, max_d=3, max_m=3, max_l=5)
        return isometry_suite(seed=seed, tol=tol)
    if name == "concat":
        if quick:
            return concat_suite(seed=seed, tol=tol, max_l=4)
        return concat_suite(seed=seed, tol=tol)
    if name == "oracle":
        if quick:
            return oracle_suite(seed=seed, tol=tol, inputs_per_kind=3)
        return oracle_suite(seed=seed, tol=tol)
    if name == "covariance":
        if quick:
            return covariance_suite(seed=seed, tol=tol, unitaries_per_cell=2)
        return covariance_suite(seed=seed, tol=tol)
    raise InvalidParameterError(f"unknown suite {name!r}")
