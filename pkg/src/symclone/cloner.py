"""Cloning amplitudes and the symmetric-subspace cloning channel.

The channel takes an arbitrary operator over the weight-m symmetric basis to
one over the weight-l basis (l >= m) by distributing l - m additional
particles across the d levels with exactly computable amplitudes, the
internal (ancilla) degrees of freedom already traced out.  Squared amplitudes
are exact rationals; conversion to floating point happens once, at the final
amplitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .symspace import (
    Composition,
    InvalidParameterError,
    SymOperator,
    basis_projector,
    dim,
    enumerate_basis,
)


def alpha_qubit_sq(j: int, k: int, m: int, l: int) -> Fraction:
    """Exact squared amplitude for two-level systems.

    alpha^2 = (l-m)! (m+1)! (l-j-k)! (j+k)! / [(l+1)! (l-m-k)! (m-j)! j! k!]
    where j counts input particles in level 1 and k counts added ones.
    """
    if l < m:
        raise InvalidParameterError(f"need l >= m, got l={l}, m={m}")
    if not 0 <= j <= m:
        raise InvalidParameterError(f"j must be in [0, {m}], got {j}")
    if not 0 <= k <= l - m:
        raise InvalidParameterError(f"k must be in [0, {l - m}], got {k}")
    f = math.factorial
    return Fraction(
        f(l - m) * f(m + 1) * f(l - j - k) * f(j + k),
        f(l + 1) * f(l - m - k) * f(m - j) * f(j) * f(k),
    )


def alpha_qubit(j: int, k: int, m: int, l: int) -> float:
    """Cloning amplitude for two-level systems (nonnegative real)."""
    return math.sqrt(alpha_qubit_sq(j, k, m, l))


def alpha_d_sq(j: Composition, k: Composition, m: int, l: int) -> Fraction:
    """Exact squared amplitude for d-level systems.

    alpha^2 = (l-m)! (m+d-1)! / (l+d-1)!  *  prod_i C(j_i + k_i, k_i)
    with j the input occupation (weight m) and k the added occupation
    (weight l - m).  Reduces to alpha_qubit_sq at d = 2.
    """
    if l < m:
        raise InvalidParameterError(f"need l >= m, got l={l}, m={m}")
    if j.d != k.d:
        raise InvalidParameterError(f"level-count mismatch: {j.d} vs {k.d}")
    if j.weight != m:
        raise InvalidParameterError(f"input composition has weight {j.weight}, expected {m}")
    if k.weight != l - m:
        raise InvalidParameterError(f"added composition has weight {k.weight}, expected {l - m}")
    d = j.d
    f = math.factorial
    prefactor = Fraction(f(l - m) * f(m + d - 1), f(l + d - 1))
    occupancy = math.prod(math.comb(a + b, b) for a, b in zip(j.counts, k.counts))
    return prefactor * occupancy


def alpha_d(j: Composition, k: Composition, m: int, l: int) -> float:
    """Cloning amplitude for d-level systems (nonnegative real)."""
    return math.sqrt(alpha_d_sq(j, k, m, l))


def ancilla_dim(d: int, m: int, l: int) -> int:
    """Number of orthonormal internal cloner states: C(l-m+d-1, d-1), exact."""
    if l < m:
        raise InvalidParameterError(f"need l >= m, got l={l}, m={m}")
    return dim(d, l - m)


@dataclass(frozen=True, eq=False)
class CloneAmplitudes:
    """Exact squared amplitudes for every (input, added) composition pair.

    Rows are in canonical order: input compositions outer, added inner, both
    lexicographically decreasing.
    """

    d: int
    m: int
    l: int
    rows: tuple[tuple[Composition, Composition, Fraction], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_table", {(j.counts, k.counts): sq for j, k, sq in self.rows}
        )

    def alpha_sq(self, j: Composition, k: Composition) -> Fraction:
        try:
            return self._table[(j.counts, k.counts)]
        except KeyError:
            raise InvalidParameterError(
                f"no amplitude for input {j.counts} with added {k.counts} "
                f"in (d={self.d}, m={self.m}, l={self.l})"
            ) from None

    def alpha(self, j: Composition, k: Composition) -> float:
        return math.sqrt(self.alpha_sq(j, k))


@lru_cache(maxsize=None)
def clone_amplitudes(d: int, m: int, l: int) -> CloneAmplitudes:
    """Amplitude table for fixed (d, m, l)."""
    if l < m:
        raise InvalidParameterError(f"need l >= m, got l={l}, m={m}")
    inputs = enumerate_basis(d, m).order
    added = enumerate_basis(d, l - m).order
    rows = tuple((j, k, alpha_d_sq(j, k, m, l)) for j in inputs for k in added)
    return CloneAmplitudes(d=d, m=m, l=l, rows=rows)


@lru_cache(maxsize=None)
def _channel_plan(d: int, m: int, l: int):
    # per added composition k: amplitudes over the input basis and the
    # indices of a+k in the output basis
    basis_in = enumerate_basis(d, m)
    basis_out = enumerate_basis(d, l)
    amps = clone_amplitudes(d, m, l)
    plan = []
    for k in enumerate_basis(d, l - m).order:
        v = np.array([amps.alpha(a, k) for a in basis_in.order])
        idx = np.array([basis_out.index_of(a.add(k)) for a in basis_in.order], dtype=np.intp)
        v.setflags(write=False)
        idx.setflags(write=False)
        plan.append((idx, v))
    return tuple(plan)


def clone_channel(op: SymOperator, l: int) -> SymOperator:
    """Extend a weight-m symmetric operator to weight l, ancilla traced out.

    Y[a+k, b+k] += X[a, b] alpha(a, k) alpha(b, k), summed over all added
    compositions k in canonical order.  Linear in X, trace-preserving, and
    the identity channel at l = m.
    """
    d, m = op.d, op.m
    if l < m:
        raise InvalidParameterError(f"need l >= m, got l={l}, m={m}")
    basis_out = enumerate_basis(d, l)
    x = op.entries
    y = np.zeros((basis_out.size, basis_out.size), dtype=np.complex128)
    for idx, v in _channel_plan(d, m, l):
        y[np.ix_(idx, idx)] += (v[:, None] * v[None, :]) * x
    return SymOperator(basis_out, y)


def uqcm_pure_output(d: int, n: int, m: int) -> SymOperator:
    """Output of cloning n identical level-0 particles into m copies.

    Diagonal over the weight-m basis, with weight alpha(seed, k)^2 on each
    reachable output composition.
    """
    if n < 1:
        raise InvalidParameterError(f"need at least one input copy, got {n}")
    if m < n:
        raise InvalidParameterError(f"need m >= n, got m={m}, n={n}")
    seed = Composition((n,) + (0,) * (d - 1))
    return clone_channel(basis_projector(seed), m)


def isometry_gram(d: int, m: int, l: int) -> np.ndarray:
    """Gram matrix of the cloning isometry columns over the input basis.

    Entry (a, b) is sum_k alpha(a, k) alpha(b, k) [a+k == b+k]; the
    transformation is an isometry iff this is the identity.
    """
    if l < m:
        raise InvalidParameterError(f"need l >= m, got l={l}, m={m}")
    basis_in = enumerate_basis(d, m)
    amps = clone_amplitudes(d, m, l)
    n = basis_in.size
    gram = np.zeros((n, n), dtype=np.complex128)
    for k in enumerate_basis(d, l - m).order:
        alphas = [amps.alpha(a, k) for a in basis_in.order]
        targets = [a.add(k).counts for a in basis_in.order]
        for ia in range(n):
            for ib in range(n):
                if targets[ia] == targets[ib]:
                    gram[ia, ib] += alphas[ia] * alphas[ib]
    return gram


def concatenate(d: int, n: int, m: int, l: int) -> tuple[SymOperator, SymOperator]:
    """Two-stage n -> m -> l cloning next to direct n -> l cloning.

    Returns (two-stage output, direct output); the two are equal.
    """
    if not 1 <= n <= m <= l:
        raise InvalidParameterError(f"need 1 <= n <= m <= l, got n={n}, m={m}, l={l}")
    via = clone_channel(uqcm_pure_output(d, n, m), l)
    direct = uqcm_pure_output(d, n, l)
    return via, direct
