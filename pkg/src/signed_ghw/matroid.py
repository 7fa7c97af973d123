"""Matroids given by a rank oracle: vector, signed-graphic and dual.

Elements are ``1..m``.  Every matroid can materialise its full rank table
(one entry per subset bitmask); circuits, cocircuits and generalized Hamming
weights are read off that table with numpy.  The table is built by walking
the lattice of flats, so the expensive rank computations happen once per
(flat, new element) pair rather than once per subset.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import ArgumentError, ResourceError
from .exact_algebra import Echelon, ExactMatrix, ScalarDomain
from .incidence import build_incidence
from .signed_graph import DEFAULT_MAX_GROUND, SignedGraph

_POPCOUNT: dict[int, np.ndarray] = {}


def popcounts(m: int) -> np.ndarray:
    """``popcounts(m)[x]`` is the number of set bits of ``x < 2**m``."""
    if m not in _POPCOUNT:
        pc = np.zeros(1 << m, dtype=np.int8)
        for j in range(m):
            pc[1 << j:2 << j] = pc[:1 << j] + 1
        _POPCOUNT[m] = pc
    return _POPCOUNT[m]


def mask_to_set(mask: int) -> frozenset:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return frozenset(out)


def _sort_key(es):
    return (len(es), tuple(sorted(es)))


class Matroid:
    """Base class; subclasses implement :meth:`_rank_mask`."""

    def __init__(self, ground_size: int, max_ground: int = DEFAULT_MAX_GROUND):
        self.ground_size = ground_size
        self.max_ground = max_ground
        self._rank_memo: dict[int, int] = {}
        self._table: np.ndarray | None = None
        self._circuits: list[frozenset] | None = None

    @property
    def m(self) -> int:
        return self.ground_size

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    def mask(self, subset: Iterable[int] | None) -> int:
        if subset is None:
            return self.full_mask
        bits = 0
        for j in subset:
            if not 1 <= j <= self.ground_size:
                raise ArgumentError(f"element {j} outside 1..{self.ground_size}")
            bits |= 1 << (j - 1)
        return bits

    # -- rank oracle ------------------------------------------------------

    def _rank_mask(self, mask: int) -> int:
        raise NotImplementedError

    def rank_of_mask(self, mask: int) -> int:
        if self._table is not None:
            return int(self._table[mask])
        r = self._rank_memo.get(mask)
        if r is None:
            r = self._rank_mask(mask)
            self._rank_memo[mask] = r
        return r

    def rank(self, subset: Iterable[int] | None = None) -> int:
        """rho(X); the whole ground set when ``subset`` is None."""
        return self.rank_of_mask(self.mask(subset))

    @property
    def full_rank(self) -> int:
        return self.rank_of_mask(self.full_mask)

    def nullity(self, subset: Iterable[int] | None = None) -> int:
        mask = self.mask(subset)
        return mask.bit_count() - self.rank_of_mask(mask)

    def dual_rank(self, subset: Iterable[int] | None = None) -> int:
        mask = self.mask(subset)
        return (mask.bit_count() - self.full_rank
                + self.rank_of_mask(self.full_mask ^ mask))

    def dual(self) -> DualMatroid:
        return DualMatroid(self)

    def is_independent(self, subset: Iterable[int]) -> bool:
        return self.nullity(subset) == 0

    # -- flats and the rank table ----------------------------------------

    def _flat_start(self):
        """(mask, rank, payload) of the closure of the empty set."""
        return self._closure(0, 0, None)

    def _closure(self, mask: int, r: int, payload):
        out = mask
        for j in range(self.ground_size):
            bit = 1 << j
            if not out & bit and self._rank_mask(mask | bit) == r:
                out |= bit
        return out, r, payload

    def _extend_flat(self, flat, j: int):
        mask, r, payload = flat
        return self._closure(mask | (1 << j), r + 1, payload)

    def rank_table(self) -> np.ndarray:
        """int8 array with ``table[x] = rho(x)`` for every bitmask ``x``."""
        if self._table is None:
            self._table = self._build_table()
        return self._table

    def _build_table(self) -> np.ndarray:
        m = self.ground_size
        if m > self.max_ground:
            raise ResourceError(
                f"ground set of size {m} exceeds the exhaustive guard {self.max_ground}")
        start = self._flat_start()
        flats = [start]
        index = {start[0]: 0}
        succ: list[dict[int, int]] = [{}]
        ids = np.zeros(1 << m, dtype=np.int32)
        for j in range(m):
            bit = 1 << j
            lo = 1 << j
            block = ids[:lo]
            uniq = np.unique(block)
            lookup = np.zeros(len(flats), dtype=np.int32)
            for fid in uniq.tolist():
                flat = flats[fid]
                if flat[0] & bit:
                    lookup[fid] = fid
                    continue
                known = succ[fid]
                nid = known.get(j)
                if nid is None:
                    new = self._extend_flat(flat, j)
                    nid = index.get(new[0])
                    if nid is None:
                        nid = len(flats)
                        index[new[0]] = nid
                        flats.append(new)
                        succ.append({})
                    # every element of the new flat yields the same cover
                    added = new[0] & ~flat[0]
                    k = 0
                    while added:
                        if added & 1:
                            known[k] = nid
                        added >>= 1
                        k += 1
                lookup[fid] = nid
            ids[lo:2 * lo] = lookup[block]
        ranks = np.array([f[1] for f in flats], dtype=np.int8)
        self.flat_count = len(flats)
        return ranks[ids]

    def nullity_table(self) -> np.ndarray:
        return popcounts(self.ground_size) - self.rank_table()

    # -- circuits ------------------------------------------------------------

    def circuit_masks(self) -> list[int]:
        """Minimal dependent sets as bitmasks, sorted by (size, indices)."""
        return [self.mask(c) for c in self.circuits()]

    def circuits(self) -> list[frozenset]:
        if self._circuits is None:
            table = self.rank_table()
            pc = popcounts(self.ground_size)
            indep = table == pc
            idx = np.arange(1 << self.ground_size, dtype=np.int64)
            minimal = ~indep
            for j in range(self.ground_size):
                bit = 1 << j
                has = (idx & bit) != 0
                minimal &= ~has | indep[idx ^ bit]
            found = [mask_to_set(x) for x in np.nonzero(minimal)[0].tolist()]
            self._circuits = sorted(found, key=_sort_key)
        return self._circuits

    def cocircuits(self) -> list[frozenset]:
        return self.dual().circuits()

    def coloops(self) -> list[int]:
        full = self.full_mask
        return [j + 1 for j in range(self.ground_size)
                if self.rank_of_mask(full ^ (1 << j)) < self.full_rank]

    def loops(self) -> list[int]:
        return [j + 1 for j in range(self.ground_size)
                if self.rank_of_mask(1 << j) == 0]


class VectorMatroid(Matroid):
    """Column matroid M[A] of an exact matrix."""

    def __init__(self, matrix: ExactMatrix, max_ground: int = DEFAULT_MAX_GROUND):
        super().__init__(matrix.cols, max_ground)
        self.matrix = matrix
        columns = [matrix.column(j) for j in range(matrix.cols)]
        if matrix.domain.is_rational:
            # a column's span is unchanged by clearing its denominators
            columns = [Echelon._integral(c) for c in columns]
        self._columns = columns

    @property
    def domain(self) -> ScalarDomain:
        return self.matrix.domain

    def _rank_mask(self, mask: int) -> int:
        ech = Echelon(self.domain, self.matrix.rows)
        j = 0
        while mask:
            if mask & 1:
                ech.insert(self._columns[j])
            mask >>= 1
            j += 1
        return ech.rank

    def _closure_of(self, ech: Echelon, seed: int) -> int:
        out = seed
        for j, col in enumerate(self._columns):
            if not out >> j & 1 and ech.contains(col):
                out |= 1 << j
        return out

    def _flat_start(self):
        ech = Echelon(self.domain, self.matrix.rows)
        return self._closure_of(ech, 0), 0, ech

    def _extend_flat(self, flat, j: int):
        mask, r, ech = flat
        ech = ech.copy()
        ech.insert(self._columns[j])
        return self._closure_of(ech, mask | (1 << j)), r + 1, ech

    def with_column_scaled(self, j: int, factor) -> VectorMatroid:
        """M[A] after scaling the 1-based column ``j`` by a nonzero factor."""
        return VectorMatroid(self.matrix.with_column_scaled(j - 1, factor),
                             self.max_ground)


class SignedGraphicMatroid(Matroid):
    """M(G_sigma) with rank rho(X) = |V| - c_0(X)."""

    def __init__(self, graph: SignedGraph, max_ground: int = DEFAULT_MAX_GROUND):
        super().__init__(graph.m, max_ground)
        self.graph = graph

    def _rank_mask(self, mask: int) -> int:
        return self.graph.s - self.graph._component_counts(mask)[1]

    def _build_table(self) -> np.ndarray:
        _, c0 = self.graph.subset_tables(self.max_ground)
        return (self.graph.s - c0).astype(np.int8)


class DualMatroid(Matroid):
    """M* with rho*(X) = |X| - rho(E) + rho(E - X)."""

    def __init__(self, primal: Matroid):
        super().__init__(primal.ground_size, primal.max_ground)
        self.primal = primal

    def _rank_mask(self, mask: int) -> int:
        p = self.primal
        return (mask.bit_count() - p.full_rank
                + p.rank_of_mask(p.full_mask ^ mask))

    def _build_table(self) -> np.ndarray:
        p = self.primal
        table = p.rank_table()
        m = self.ground_size
        idx = np.arange(1 << m, dtype=np.int64)
        return (popcounts(m) - p.full_rank + table[p.full_mask ^ idx]).astype(np.int8)

    def dual(self) -> Matroid:
        return self.primal


def signed_graphic_matroid(g: SignedGraph, max_ground: int = DEFAULT_MAX_GROUND
                           ) -> SignedGraphicMatroid:
    return SignedGraphicMatroid(g, max_ground)


def incidence_matroid(g: SignedGraph, characteristic: int = 0,
                      max_ground: int = DEFAULT_MAX_GROUND) -> VectorMatroid:
    """M[A] for the incidence matrix over Q (0) or GF(characteristic)."""
    domain = ScalarDomain.of_characteristic(characteristic)
    return VectorMatroid(build_incidence(g, domain).matrix, max_ground)


# -- non-redundant circuit families ------------------------------------------

def _bits(x: int) -> int:
    return x.bit_count()


def max_nonredundant(circuits: Sequence[int], within: int) -> int:
    """Largest non-redundant family among ``circuits`` contained in ``within``.

    A family is non-redundant when each member owns an element that no other
    member contains.  Depth-first search with the bound that every new member
    must bring at least one element not yet covered.
    """
    pool = [c for c in circuits if c & ~within == 0]
    best = 0

    def dfs(start, union, privates):
        nonlocal best
        k = len(privates)
        if k > best:
            best = k
        if k + _bits(within & ~union) <= best:
            return
        for i in range(start, len(pool)):
            c = pool[i]
            fresh = c & ~union
            if not fresh:
                continue
            new_priv = [p & ~c for p in privates]
            if not all(new_priv):
                continue
            new_priv.append(fresh)
            dfs(i + 1, union | c, new_priv)

    dfs(0, 0, [])
    return best


def nonredundancy_degree(m: Matroid, subset: Iterable[int] | None = None) -> int:
    """deg(X): most non-redundant circuits inside X (brute force)."""
    return max_nonredundant(m.circuit_masks(), m.mask(subset))


def min_nonredundant_union(circuits: Sequence[int], r: int,
                           node_limit: int | None = None,
                           lower_bound: int = 0) -> int | None:
    """Smallest |C_1 u ... u C_r| over non-redundant families of size r.

    Returns None if no such family exists.  Branch and bound: the union only
    grows and each further member adds at least one element.  ``node_limit``
    caps the number of candidate members examined.  The search
    stops as soon as it meets ``lower_bound``, which must be a valid bound
    supplied by the caller.
    """
    pool = sorted(circuits, key=lambda c: (c.bit_count(), c))
    best = None
    nodes = 0

    class _Done(Exception):
        pass

    def dfs(start, union, privates):
        nonlocal best, nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise ResourceError("non-redundant union search exceeded its node limit")
        k = len(privates)
        size = union.bit_count()
        if k == r:
            if best is None or size < best:
                best = size
                if best <= lower_bound:
                    raise _Done
            return
        if best is not None and size + (r - k) >= best:
            return
        nodes += len(pool) - start
        for i in range(start, len(pool)):
            c = pool[i]
            fresh = c & ~union
            if not fresh:
                continue
            if best is not None and size + fresh.bit_count() + (r - k - 1) >= best:
                continue
            new_priv = [p & ~c for p in privates]
            if not all(new_priv):
                continue
            new_priv.append(fresh)
            dfs(i + 1, union | c, new_priv)

    try:
        dfs(0, 0, [])
    except _Done:
        pass
    return best


def min_nonredundant_unions(circuits: Sequence[int], r_max: int,
                            node_limit: int | None = None) -> list[int]:
    """The values for r = 1, 2, ... up to ``r_max``.

    Dropping a member of a non-redundant family leaves a non-redundant family
    whose union is strictly smaller (the dropped member had a private
    element), so each value is at least the previous one plus one.  The list
    stops early if a search exceeds ``node_limit`` or no family exists.
    """
    out: list[int] = []
    for r in range(1, r_max + 1):
        try:
            v = min_nonredundant_union(circuits, r, node_limit,
                                       lower_bound=out[-1] + 1 if out else 0)
        except ResourceError:
            break
        if v is None:
            break
        out.append(v)
    return out
