"""Symmetric-subspace combinatorics for collections of d-level systems.

The permutation-invariant subspace of M qudits is spanned by occupation-number
states: each basis vector is labelled by a composition, a length-d vector of
nonnegative counts summing to M.  Everything downstream (cloning channels,
closed forms, the brute-force oracle, file formats) works in this basis.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class InvalidParameterError(ValueError):
    """Arguments violate a documented precondition."""


@dataclass(frozen=True)
class Composition:
    """Occupation numbers of d levels; the weight is the total particle count."""

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) < 2:
            raise InvalidParameterError(f"need at least 2 levels, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise InvalidParameterError(f"negative occupation in {counts}")

    @property
    def d(self) -> int:
        return len(self.counts)

    @property
    def weight(self) -> int:
        return sum(self.counts)

    def add(self, other: Composition) -> Composition:
        if other.d != self.d:
            raise InvalidParameterError(
                f"level-count mismatch: {self.d} vs {other.d}"
            )
        return Composition(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __iter__(self):
        return iter(self.counts)


def _compositions(weight: int, parts: int):
    # lexicographically decreasing: first coordinate runs from weight down to 0
    if parts == 1:
        yield (weight,)
        return
    for first in range(weight, -1, -1):
        for rest in _compositions(weight - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class SymBasis:
    """Canonical ordering of all compositions of weight m into d parts.

    The order is lexicographically decreasing, so for d = 2 the basis index
    equals the number of particles in level 1.
    """

    d: int
    m: int
    order: tuple[Composition, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {c.counts: i for i, c in enumerate(self.order)}
        )

    @property
    def size(self) -> int:
        return len(self.order)

    def index_of(self, c: Composition) -> int:
        try:
            return self._index[c.counts]
        except KeyError:
            raise InvalidParameterError(
                f"{c.counts} is not a composition of {self.m} into {self.d} parts"
            ) from None


@lru_cache(maxsize=None)
def enumerate_basis(d: int, m: int) -> SymBasis:
    """All compositions of m into d parts, in canonical (lex-decreasing) order."""
    if d < 2:
        raise InvalidParameterError(f"d must be >= 2, got {d}")
    if m < 0:
        raise InvalidParameterError(f"particle number must be >= 0, got {m}")
    order = tuple(Composition(c) for c in _compositions(m, d))
    return SymBasis(d=d, m=m, order=order)


def dim(d: int, m: int) -> int:
    """Dimension of the symmetric subspace of m qudits: C(m+d-1, d-1), exact."""
    if d < 2:
        raise InvalidParameterError(f"d must be >= 2, got {d}")
    if m < 0:
        raise InvalidParameterError(f"particle number must be >= 0, got {m}")
    return math.comb(m + d - 1, d - 1)


def multinomial(c: Composition) -> int:
    """Number of distinct site orderings of the letter multiset c, exact."""
    return math.factorial(c.weight) // math.prod(
        math.factorial(n) for n in c.counts
    )


@dataclass(frozen=True, eq=False)
class SymOperator:
    """Complex square matrix over the symmetric basis of (d, m)."""

    basis: SymBasis
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.complex128)
        n = self.basis.size
        if entries.shape != (n, n):
            raise InvalidParameterError(
                f"expected a {n}x{n} matrix over the basis of "
                f"(d={self.basis.d}, m={self.basis.m}), got shape {entries.shape}"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def d(self) -> int:
        return self.basis.d

    @property
    def m(self) -> int:
        return self.basis.m

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def dagger(self) -> SymOperator:
        return SymOperator(self.basis, self.entries.conj().T)

    def validate_density(
        self,
        tol: float = 1e-9,
        check_psd: bool = False,
        psd_tol: float = 1e-9,
        strict_psd: bool = False,
    ) -> None:
        """Check Hermiticity and unit trace (max entry deviation <= tol).

        Positivity is advisory: only the trace condition is required of
        inputs, so a negative eigenvalue below -psd_tol warns rather than
        rejects unless strict_psd is set.
        """
        dev = float(np.max(np.abs(self.entries - self.entries.conj().T)))
        if dev > tol:
            raise InvalidParameterError(
                f"not Hermitian within {tol:g} (max deviation {dev:.3e})"
            )
        tr = self.trace()
        if abs(tr - 1.0) > tol:
            raise InvalidParameterError(
                f"trace must be 1 within {tol:g}, got {tr:.12g}"
            )
        if check_psd:
            lowest = float(np.linalg.eigvalsh(self.entries).min())
            if lowest < -psd_tol:
                msg = f"operator has negative eigenvalue {lowest:.3e}"
                if strict_psd:
                    raise InvalidParameterError(msg)
                warnings.warn(msg)


def sym_operator(d: int, m: int, entries) -> SymOperator:
    """Wrap a dense matrix as an operator over the canonical basis of (d, m)."""
    return SymOperator(enumerate_basis(d, m), entries)


def basis_dyad(a: Composition, b: Composition) -> SymOperator:
    """|a><b| over the canonical basis; a and b must share d and weight."""
    if a.d != b.d or a.weight != b.weight:
        raise InvalidParameterError("dyad endpoints must live in the same basis")
    basis = enumerate_basis(a.d, a.weight)
    entries = np.zeros((basis.size, basis.size), dtype=np.complex128)
    entries[basis.index_of(a), basis.index_of(b)] = 1.0
    return SymOperator(basis, entries)


def basis_projector(c: Composition) -> SymOperator:
    """|c><c| over the canonical basis."""
    return basis_dyad(c, c)


@dataclass(frozen=True, eq=False)
class QuditOperator:
    """Dense operator on a single d-level system."""

    d: int
    entries: np.ndarray

    def __post_init__(self):
        if self.d < 2:
            raise InvalidParameterError(f"d must be >= 2, got {self.d}")
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.shape != (self.d, self.d):
            raise InvalidParameterError(
                f"expected a {self.d}x{self.d} matrix, got shape {entries.shape}"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def dagger(self) -> QuditOperator:
        return QuditOperator(self.d, self.entries.conj().T)

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))


@lru_cache(maxsize=None)
def _reduction_plan(d: int, m: int):
    """Sparse action of the single-site reduction on basis dyads.

    A diagonal dyad |a><a| lands on sum_i (a_i/m) |i><i|.  A one-hop dyad
    |a><b| with b = a - e_p + e_q (one particle moved from level p to level q)
    lands on sqrt(a_p (a_q + 1))/m |p><q|.  Dyads further than one hop apart
    vanish, so only the neighbours of each a need enumerating.
    """
    basis = enumerate_basis(d, m)
    diag = np.array([[c[i] / m for c in basis.order] for i in range(d)])
    rows, cols, level_p, level_q, coeffs = [], [], [], [], []
    for ia, a in enumerate(basis.order):
        for p in range(d):
            if a[p] == 0:
                continue
            for q in range(d):
                if q == p:
                    continue
                shifted = list(a.counts)
                shifted[p] -= 1
                shifted[q] += 1
                ib = basis.index_of(Composition(tuple(shifted)))
                rows.append(ia)
                cols.append(ib)
                level_p.append(p)
                level_q.append(q)
                coeffs.append(math.sqrt(a[p] * (a[q] + 1)) / m)
    hops = (
        np.array(rows, dtype=np.intp),
        np.array(cols, dtype=np.intp),
        np.array(level_p, dtype=np.intp),
        np.array(level_q, dtype=np.intp),
        np.array(coeffs),
    )
    return diag, hops


def reduce_one(op: SymOperator) -> QuditOperator:
    """Single-site reduced operator of a symmetric-subspace operator.

    Linear and trace-preserving for arbitrary (not necessarily Hermitian or
    positive) inputs.  For permutation-invariant operators every site gives
    the same reduction, which is what this computes.
    """
    if op.m < 1:
        raise InvalidParameterError("single-site reduction needs at least one particle")
    d = op.d
    diag, (rows, cols, level_p, level_q, coeffs) = _reduction_plan(d, op.m)
    x = op.entries
    out = np.zeros((d, d), dtype=np.complex128)
    xdiag = np.diagonal(x)
    for i in range(d):
        out[i, i] = diag[i] @ xdiag
    if rows.size:
        np.add.at(out, (level_p, level_q), coeffs * x[rows, cols])
    return QuditOperator(d, out)
