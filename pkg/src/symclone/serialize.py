"""File formats shared by the CLI and the verification suites.

Symmetric operators travel as JSON documents:

    { "d": int, "m": int, "basis": "lex_decreasing",
      "entries": [[re, im], ...] }          # row-major dense, dim^2 pairs

Readers reject documents whose basis tag or entry count disagree with (d, m);
unknown keys are ignored, which lets writers attach extras such as a reduced
operator.  CSV floats carry 17 significant digits, rationals print as "p/q".
"""

from __future__ import annotations

import csv
import json
import math
from fractions import Fraction

import numpy as np

from .closed_forms import fidelity, shrink
from .cloner import CloneAmplitudes
from .symspace import Composition, QuditOperator, SymOperator, enumerate_basis

BASIS_TAG = "lex_decreasing"


class FormatError(ValueError):
    """A document does not match the expected schema."""


def fmt_float(x) -> str:
    return format(float(x), ".17g")


def fmt_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def fmt_composition(c: Composition) -> str:
    return " ".join(str(n) for n in c.counts)


def _entry_pairs(matrix: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in matrix.reshape(-1)]


def sym_operator_to_dict(op: SymOperator) -> dict:
    return {
        "d": op.d,
        "m": op.m,
        "basis": BASIS_TAG,
        "entries": _entry_pairs(op.entries),
    }


def qudit_operator_to_pairs(op: QuditOperator) -> list[list[float]]:
    return _entry_pairs(op.entries)


def sym_operator_from_dict(doc) -> SymOperator:
    if not isinstance(doc, dict):
        raise FormatError("operator document must be a JSON object")
    for key in ("d", "m", "basis", "entries"):
        if key not in doc:
            raise FormatError(f"missing key {key!r}")
    d, m = doc["d"], doc["m"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise FormatError(f"d must be an integer >= 2, got {d!r}")
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise FormatError(f"m must be an integer >= 0, got {m!r}")
    if doc["basis"] != BASIS_TAG:
        raise FormatError(
            f"unsupported basis tag {doc['basis']!r}; expected {BASIS_TAG!r}"
        )
    basis = enumerate_basis(d, m)
    n = basis.size
    entries = doc["entries"]
    if not isinstance(entries, list) or len(entries) != n * n:
        raise FormatError(
            f"expected {n * n} entry pairs for (d={d}, m={m}), "
            f"got {len(entries) if isinstance(entries, list) else type(entries).__name__}"
        )
    flat = np.empty(n * n, dtype=np.complex128)
    for i, pair in enumerate(entries):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
        ):
            raise FormatError(f"entry {i} is not a [re, im] number pair")
        flat[i] = complex(pair[0], pair[1])
    return SymOperator(basis, flat.reshape(n, n))


def read_sym_operator(path) -> SymOperator:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise FormatError(f"invalid JSON in {path}: {e}") from e
    return sym_operator_from_dict(doc)


def write_sym_operator(path, op: SymOperator, extra: dict | None = None) -> None:
    doc = sym_operator_to_dict(op)
    if extra:
        doc.update(extra)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_amplitudes_csv(path, amps: CloneAmplitudes) -> None:
    """One row per (input, added) composition pair, in canonical order."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "j_composition",
                "k_composition",
                "alpha_squared_numerator",
                "alpha_squared_denominator",
                "alpha_float",
            ]
        )
        for j, k, sq in amps.rows:
            writer.writerow(
                [
                    fmt_composition(j),
                    fmt_composition(k),
                    sq.numerator,
                    sq.denominator,
                    fmt_float(math.sqrt(sq)),
                ]
            )


def write_tables_csv(path, triples) -> None:
    """Fidelity and shrinking-factor table over (d, n, m) triples."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["d", "n", "m", "fidelity", "fidelity_float", "shrink", "shrink_float"]
        )
        for d, n, m in triples:
            f = fidelity(d, n, m)
            eta = shrink(d, n, m)
            writer.writerow(
                [d, n, m, fmt_fraction(f), fmt_float(f), fmt_fraction(eta), fmt_float(eta)]
            )
