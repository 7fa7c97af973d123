"""Stanley-Reisner ideals of matroid independence complexes.

Graded Betti numbers of R/I_Delta come from Hochster's formula

    beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(Delta|_W).

Two routes are available.  ``method="homology"`` ranks boundary matrices of
every induced subcomplex exactly, over Q or GF(2).  ``method="euler"`` uses
the fact that a matroid complex is shellable: the homology of Delta|_W sits in
degree rho(W) - 1 alone, so its dimension is |reduced Euler characteristic|,
and W contributes only to row i = nullity(W).  The Euler route needs one
zeta transform over the rank table and therefore scales to the same ground
sets as the rank table itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, DomainError, ResourceError
from . import exact_algebra as ea
from .exact_algebra import ScalarDomain
from .matroid import Matroid, mask_to_set, popcounts, signed_graphic_matroid
from .signed_graph import SignedGraph, is_balanced

HOMOLOGY_MAX_GROUND = 16


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices 1..n given by its facets (bitmasks)."""

    vertex_count: int
    facets: tuple[int, ...]

    @classmethod
    def independence_complex(cls, m: Matroid) -> SimplicialComplex:
        table = m.rank_table()
        pc = popcounts(m.ground_size)
        bases = np.nonzero((table == m.full_rank) & (pc == m.full_rank))[0]
        return cls(m.ground_size, tuple(int(b) for b in bases))

    @property
    def dimension(self) -> int:
        return max((bin(f).count("1") for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({bin(f).count("1") for f in self.facets}) <= 1

    def facet_sets(self) -> list[frozenset]:
        return [mask_to_set(f) for f in self.facets]

    def faces(self, within: int | None = None) -> list[int]:
        """All faces (the empty face included) lying inside ``within``."""
        out = set()
        for f in self.facets:
            f = f if within is None else f & within
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return sorted(out)

    def reduced_homology(self, within: int | None = None,
                         field: int = 0) -> dict[int, int]:
        """Nonzero reduced Betti numbers of the induced subcomplex."""
        return reduced_homology(self.faces(within), field)


def reduced_homology(faces: list[int], field: int = 0) -> dict[int, int]:
    """dim H~_k over Q (field=0) or GF(p) for a complex listed face by face.

    ``faces`` must be closed under subsets and contain 0 (the empty face);
    the complex {empty face} then has H~_{-1} of dimension 1.
    """
    if not faces:
        return {}
    ScalarDomain.of_characteristic(field)  # validates the field
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    top = max(by_size)
    index = {k: {f: i for i, f in enumerate(sorted(v))} for k, v in by_size.items()}

    def boundary_rank(k: int) -> int:
        # map from faces with k elements to faces with k - 1
        if k == 0 or k not in by_size:
            return 0
        rows = index[k - 1]
        columns = []
        for f in by_size[k]:
            col = {}
            sign = 1
            for b in range(f.bit_length()):
                if f >> b & 1:
                    col[rows[f ^ (1 << b)]] = sign
                    sign = -sign
            columns.append(col)
        return ea.sparse_rank(columns, field)

    ranks = {k: boundary_rank(k) for k in range(top + 2)}
    out = {}
    for k in range(top + 1):
        h = len(by_size.get(k, ())) - ranks[k] - ranks[k + 1]
        if h:
            out[k - 1] = h
    return out


@dataclass
class BettiTable:
    """Graded Betti numbers beta_{i,j} of R/I for i >= 1."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    method: str = "euler"

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def row(self, i: int) -> dict[int, int]:
        return {j: v for (a, j), v in sorted(self.entries.items()) if a == i}

    def as_sorted(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]

    def __str__(self):
        if not self.entries:
            return "(no syzygies: R/I = R)"
        return "  ".join(f"b{i},{j}={v}" for i, j, v in self.as_sorted())


def circuit_ideal_generators(m: Matroid) -> list[frozenset]:
    """Supports of the squarefree monomials generating I_Delta."""
    return list(m.circuits())


def cocircuit_ideal_generators(m: Matroid) -> list[frozenset]:
    """Generators of the Stanley-Reisner ideal of the dual matroid."""
    return list(m.cocircuits())


def _euler_table(m: Matroid) -> BettiTable:
    n = m.ground_size
    table = m.rank_table()
    pc = popcounts(n)
    indep = (table == pc)
    chi = np.where(indep, np.where(pc % 2 == 0, 1, -1), 0).astype(np.int64)
    idx = np.arange(1 << n, dtype=np.int64)
    for j in range(n):
        has = (idx >> j) & 1 == 1
        chi[has] += chi[idx[has] ^ (1 << j)]
    null = pc.astype(np.int64) - table
    entries: dict[tuple[int, int], int] = {}
    live = np.nonzero((null >= 1) & (chi != 0))[0]
    rows = null[live]
    cols = pc[live].astype(np.int64)
    vals = np.abs(chi[live])
    key = rows * (n + 1) + cols
    sums = np.zeros(int(key.max()) + 1 if key.size else 0, dtype=np.int64)
    np.add.at(sums, key, vals)
    for k in np.nonzero(sums)[0].tolist():
        entries[divmod(k, n + 1)] = int(sums[k])
    return BettiTable(entries, "euler")


def _homology_table(m: Matroid, field: int) -> BettiTable:
    n = m.ground_size
    table = m.rank_table()
    pc = popcounts(n)
    idx = np.arange(1 << n, dtype=np.int64)
    # a coloop of M|W makes Delta|_W a cone, hence acyclic
    cone = np.zeros(1 << n, dtype=bool)
    for j in range(n):
        has = (idx >> j) & 1 == 1
        cone[has] |= table[idx[has] ^ (1 << j)] < table[has]
    complex_ = SimplicialComplex.independence_complex(m)
    entries: dict[tuple[int, int], int] = {}
    for w in np.nonzero(~cone & (idx != 0))[0].tolist():
        j = int(pc[w])
        for k, dim in complex_.reduced_homology(w, field).items():
            i = j - k - 1
            if i >= 1:
                entries[(i, j)] = entries.get((i, j), 0) + dim
    return BettiTable(entries, "homology")


def betti_table(m: Matroid, method: str = "euler", field: int = 0,
                max_ground: int | None = None) -> BettiTable:
    """Graded Betti table of R/I_Delta for the independence complex of ``m``.

    ``field`` only matters for ``method="homology"`` (0 for Q or a prime).
    The homology route is guarded by ``max_ground`` (default 16 elements).
    """
    if method == "euler":
        limit = m.max_ground if max_ground is None else max_ground
        if m.ground_size > limit:
            raise ResourceError(f"{m.ground_size} elements exceed the guard {limit}")
        return _euler_table(m)
    if method == "homology":
        limit = HOMOLOGY_MAX_GROUND if max_ground is None else max_ground
        if m.ground_size > limit:
            raise ResourceError(f"{m.ground_size} elements exceed the guard {limit}")
        return _homology_table(m, field)
    raise ArgumentError(f"unknown method {method!r}")


def lowest_shifts(t: BettiTable) -> dict[int, int]:
    """Row by row, the smallest j with beta_{i,j} != 0."""
    out: dict[int, int] = {}
    for (i, j) in t.entries:
        if i not in out or j < out[i]:
            out[i] = j
    return dict(sorted(out.items()))


def is_level(t: BettiTable) -> bool:
    """True iff the last nonzero row of the resolution has a single shift.

    The trivial table (R/I = R) counts as level.
    """
    if not t.entries:
        return True
    return len(t.row(t.projective_dimension)) == 1


def regularity_closed_form(g: SignedGraph, characteristic: int, which: str) -> int:
    """reg(R/I) from component counts, for loop-free signed graphs.

    ``which`` is "circuits" (I_Delta) or "cocircuits" (I_Delta*).  The
    circuit case needs every edge to lie in some circuit (odd characteristic,
    unbalanced graph) or no bridges (characteristic 2 or balanced graph).
    """
    if g.has_loops:
        raise DomainError("hypothesis failed: the graph has loops")
    c, c0 = g._base_counts
    graphic = characteristic == 2 or is_balanced(g)
    if which == "cocircuits":
        return g.m - g.s + (c if graphic else c0)
    if which != "circuits":
        raise ArgumentError(f"which must be 'circuits' or 'cocircuits', not {which!r}")
    if graphic:
        if g.bridges():
            raise DomainError("hypothesis failed: the graph has bridges")
        return g.s - c
    if signed_graphic_matroid(g).coloops():
        raise DomainError("hypothesis failed: some edge lies in no circuit")
    return g.s - c0
