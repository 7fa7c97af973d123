"""Incidence columns as projective points, and linear forms evaluated on them.

A codeword of the incidence code is the evaluation of a linear form h on the
columns, so its weight is m minus the number of columns where h vanishes.
Minimum distance and frustration index are both read off zero counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from .errors import ArgumentError, DomainError, ResourceError
from .exact_algebra import is_prime
from .incidence import incidence_columns
from .signed_graph import SignedGraph

MAX_FORMS = 10 ** 7
MAX_SIGN_VERTICES = 24
_CHUNK = 1 << 16


@dataclass(frozen=True)
class ProjectivePointSet:
    """The m incidence columns of a graph without positive loops."""

    s: int
    points: tuple[tuple[int, ...], ...]

    @classmethod
    def from_graph(cls, g: SignedGraph) -> ProjectivePointSet:
        if g.has_positive_loops:
            raise DomainError("a positive loop gives the zero column")
        return cls(g.s, tuple(tuple(c) for c in incidence_columns(g)))

    def __len__(self):
        return len(self.points)

    def as_array(self) -> np.ndarray:
        """Points as the columns of an s x m integer array."""
        return np.array(self.points, dtype=np.int64).reshape(len(self.points), self.s).T


def _integral_form(h: Sequence) -> list[int]:
    den = lcm(*(Fraction(a).denominator for a in h)) if h else 1
    return [int(Fraction(a) * den) for a in h]


def zero_count(x: ProjectivePointSet, h: Sequence, p: int = 0) -> int:
    """|V_X(h)|: points where sum a_i * point_i vanishes, over Q or GF(p)."""
    if len(h) != x.s:
        raise ArgumentError(f"form has {len(h)} coefficients, expected {x.s}")
    a = _integral_form(h)
    if (p and all(v % p == 0 for v in a)) or not any(a):
        raise ArgumentError("the zero form has no zero set")
    count = 0
    for pt in x.points:
        v = sum(ai * xi for ai, xi in zip(a, pt))
        if (v % p if p else v) == 0:
            count += 1
    return count


def _require_simple_connected(g: SignedGraph):
    if not g.is_simple:
        raise DomainError("the graph must be simple")
    if not g.is_connected:
        raise DomainError("the graph must be connected")


def _zero_counts(forms: np.ndarray, pts: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Per form: number of zeros, and whether the form vanishes on every point."""
    vals = forms @ pts
    if p:
        vals %= p
    zeros = (vals == 0).sum(axis=1)
    return zeros, zeros == pts.shape[1]


def frustration_index_points(g: SignedGraph) -> int:
    """min over h = sum a_i t_i with a_i = +-1 of |X| - |V_X(h)|, over Q.

    h and -h have the same zeros, so a_1 = 1 is fixed.
    """
    _require_simple_connected(g)
    if g.s > MAX_SIGN_VERTICES:
        raise ResourceError(f"2^{g.s - 1} sign vectors exceed the guard")
    pts = ProjectivePointSet.from_graph(g).as_array()
    n = 1 << (g.s - 1)
    best = 0
    for lo in range(0, n, _CHUNK):
        idx = np.arange(lo, min(n, lo + _CHUNK), dtype=np.int64)
        bits = (idx[:, None] >> np.arange(g.s - 1)) & 1
        forms = np.hstack([np.ones((len(idx), 1), dtype=np.int64), 1 - 2 * bits])
        zeros, _ = _zero_counts(forms, pts, 0)
        best = max(best, int(zeros.max()))
    return g.m - best


def _normalised_forms(alphabet: Sequence[int], s: int, lo: int, hi: int,
                      p: int) -> np.ndarray:
    """Forms numbered lo..hi-1 in base len(alphabet), kept when the first
    nonzero coefficient is 1 (one representative per projective class)."""
    q = len(alphabet)
    idx = np.arange(lo, hi, dtype=np.int64)
    digits = (idx[:, None] // (q ** np.arange(s - 1, -1, -1, dtype=np.int64))) % q
    forms = np.asarray(alphabet, dtype=np.int64)[digits]
    nz = forms != 0
    has = nz.any(axis=1)
    first = forms[np.arange(len(forms)), nz.argmax(axis=1)]
    lead = first % p if p else first
    return forms[has & (lead == 1)]


def min_distance_points(g: SignedGraph, p: int) -> int:
    """delta(C) = |X| - max |V_X(h)| over forms h not vanishing on all of X.

    p = 0 restricts coefficients to {0, 1, -1} and evaluates over Q, which
    gives the minimum distance for every characteristic other than 2.  For a
    prime p every form of GF(p)^s is tried up to scalars.  Parallel edges and
    negative loops are fine; positive loops give no projective point.
    """
    if not g.is_connected:
        raise DomainError("the graph must be connected")
    if p != 0 and not is_prime(p):
        raise ArgumentError(f"{p} is neither 0 nor a prime")
    alphabet = [0, 1, -1] if p == 0 else list(range(p))
    total = len(alphabet) ** g.s
    if total > MAX_FORMS:
        raise ResourceError(f"{len(alphabet)}^{g.s} forms exceed the guard {MAX_FORMS}")
    pts = ProjectivePointSet.from_graph(g).as_array()
    best = None
    for lo in range(0, total, _CHUNK):
        forms = _normalised_forms(alphabet, g.s, lo, min(total, lo + _CHUNK), p)
        if not len(forms):
            continue
        zeros, vanish = _zero_counts(forms, pts, p)
        zeros = zeros[~vanish]
        if len(zeros):
            top = int(zeros.max())
            best = top if best is None else max(best, top)
    if best is None:
        raise DomainError("every form vanishes on X")
    return g.m - best
