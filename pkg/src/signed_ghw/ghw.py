"""Generalized Hamming weights of matroids and incidence-matrix codes.

Several independent routes are offered so they can be checked against each
other: minimum nullity sets, unions of non-redundant circuits, rank drops of
complements, graph cuts, and (for tests) enumeration of actual subcodes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import exact_algebra as ea
from .errors import ArgumentError, DisagreementError, DomainError, ResourceError
from .exact_algebra import ScalarDomain
from .incidence import build_incidence
from .matroid import (Matroid, VectorMatroid, incidence_matroid,
                      min_nonredundant_union, popcounts)
from .signed_graph import (DEFAULT_MAX_GROUND, SignedGraph, cogirth_r, cycles,
                           edge_connectivity_r, graph_circuits, graph_cocircuits,
                           is_balanced)

KINDS = ("code", "dual_code", "matroid", "dual_matroid")
METHODS = ("nullity_def", "circuit_union", "rank_drop", "graph_formula",
           "betti_shift", "wei_dual", "subspace_enum")
WHICH = ("C", "C_dual")


@dataclass
class GhwTable:
    """``weights[r]`` for r = 1..k, plus where the numbers came from."""

    kind: str
    method: str
    weights: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ArgumentError(f"unknown table kind {self.kind!r}")
        if self.method not in METHODS:
            raise ArgumentError(f"unknown method {self.method!r}")

    def as_list(self) -> list[int]:
        return [self.weights[r] for r in sorted(self.weights)]

    def is_strictly_increasing(self) -> bool:
        w = self.as_list()
        return all(a < b for a, b in zip(w, w[1:]))

    def __len__(self):
        return len(self.weights)


def _which(which: str) -> str:
    if which in ("C", "code"):
        return "C"
    if which in ("C_dual", "dual", "Cdual", "C_perp"):
        return "C_dual"
    raise ArgumentError(f"which must be 'C' or 'C_dual', not {which!r}")


# -- matroid level -----------------------------------------------------------

def _check_r(r: int, top: int, what: str):
    if not 1 <= r <= top:
        raise DomainError(f"r={r} outside 1..{top} for {what}")


def ghw_matroid(m: Matroid, r: int) -> int:
    """d_r(M) = min |X| with nullity(X) = r.

    The ">= r" variant is computed alongside; the two must agree.
    """
    nt = m.nullity_table()
    _check_r(r, int(nt[-1]), "the nullity of M")
    pc = popcounts(m.ground_size)
    exact = int(pc[nt == r].min())
    at_least = int(pc[nt >= r].min())
    if exact != at_least:
        raise DisagreementError(
            f"d_{r}: nullity = r gives {exact}, nullity >= r gives {at_least}")
    return exact


def ghw_matroid_table(m: Matroid, kind: str = "matroid") -> GhwTable:
    nt = m.nullity_table()
    pc = popcounts(m.ground_size)
    top = int(nt[-1])
    weights = {r: int(pc[nt >= r].min()) for r in range(1, top + 1)}
    return GhwTable(kind, "nullity_def", weights)


def ghw_matroid_via_circuits(m: Matroid, r: int,
                             node_limit: int | None = None) -> int:
    """Smallest union of r non-redundant circuits."""
    _check_r(r, m.nullity(), "the nullity of M")
    best = min_nonredundant_union(m.circuit_masks(), r, node_limit)
    if best is None:
        raise DomainError(f"no {r} non-redundant circuits exist")
    return best


def ghw_dual_matroid_via_rank(m: Matroid, r: int) -> int:
    """d_r(M*) = min |X| with rho(E - X) = rho(E) - r, using M's ranks only."""
    _check_r(r, m.full_rank, "the rank of M")
    table = m.rank_table()
    full = m.full_mask
    idx = np.arange(1 << m.ground_size, dtype=np.int64)
    hit = table[full ^ idx] == m.full_rank - r
    return int(popcounts(m.ground_size)[hit].min())


# -- codes -------------------------------------------------------------------

def code_matroid(g: SignedGraph, characteristic: int,
                 max_ground: int = DEFAULT_MAX_GROUND) -> VectorMatroid:
    """M[A]; odd characteristics are handled over Q."""
    if characteristic < 0:
        raise ArgumentError("characteristic must be 0 or a prime")
    if characteristic not in (0, 2):
        ScalarDomain.prime_field(characteristic)  # validates primality
    return _cached_matroid(g, 2 if characteristic == 2 else 0, max_ground)


@lru_cache(maxsize=8)
def _cached_matroid(g: SignedGraph, characteristic: int, max_ground: int) -> VectorMatroid:
    # graphs are immutable, so repeated queries can share one rank table
    return incidence_matroid(g, characteristic, max_ground)


def code_dimension(g: SignedGraph, characteristic: int, which: str = "C") -> int:
    k = code_matroid(g, characteristic).full_rank
    return k if _which(which) == "C" else g.m - k


def code_ghw(g: SignedGraph, characteristic: int, which: str, r: int,
             max_ground: int = DEFAULT_MAX_GROUND) -> int:
    """delta_r of the incidence-matrix code (or its dual) through M[A]."""
    m = code_matroid(g, characteristic, max_ground)
    if _which(which) == "C":
        _check_r(r, m.full_rank, "dim C")
        return ghw_matroid(m.dual(), r)
    _check_r(r, g.m - m.full_rank, "dim C_dual")
    return ghw_matroid(m, r)


def code_ghw_table(g: SignedGraph, characteristic: int, which: str,
                   max_ground: int = DEFAULT_MAX_GROUND) -> GhwTable:
    m = code_matroid(g, characteristic, max_ground)
    if _which(which) == "C":
        t = ghw_matroid_table(m.dual())
        t.kind = "code"
    else:
        t = ghw_matroid_table(m)
        t.kind = "dual_code"
    return t


def _graphic_branch(g: SignedGraph, characteristic: int) -> bool:
    return characteristic == 2 or is_balanced(g)


def code_ghw_graph_formula(g: SignedGraph, characteristic: int, which: str, r: int,
                           form: str = "cut", node_limit: int | None = None,
                           max_ground: int = DEFAULT_MAX_GROUND) -> int:
    """delta_r from graph invariants alone.

    For C: the r-th cogirth (odd characteristic, unbalanced) or the r-th edge
    connectivity, or with ``form="cocircuits"`` the smallest union of r
    non-redundant cocircuits.  For the dual code: the smallest union of r
    non-redundant cycles (graphic case) or balanced cycles and bowties.
    """
    if not g.is_connected:
        raise DomainError("graph formulas need a connected graph")
    graphic = _graphic_branch(g, characteristic)
    k = g.s - 1 if graphic else g.s
    if _which(which) == "C":
        _check_r(r, k, "dim C")
        if form == "cut":
            if graphic:
                return edge_connectivity_r(g, r, max_ground)
            return cogirth_r(g, r, max_ground)
        if form != "cocircuits":
            raise ArgumentError(f"unknown form {form!r}")
        family = graph_cocircuits(g, graphic=graphic, max_ground=max_ground)
    else:
        _check_r(r, g.m - k, "dim C_dual")
        if graphic:
            family = [c.edges for c in cycles(g)]
        else:
            family = graph_circuits(g)
    masks = [g.mask(x) for x in family]
    best = min_nonredundant_union(masks, r, node_limit)
    if best is None:
        raise DomainError(f"no {r} non-redundant members exist")
    return best


def code_ghw_graph_table(g: SignedGraph, characteristic: int, which: str,
                         form: str = "cut", node_limit: int | None = None,
                         max_ground: int = DEFAULT_MAX_GROUND) -> GhwTable:
    graphic = _graphic_branch(g, characteristic)
    k = g.s - 1 if graphic else g.s
    top = k if _which(which) == "C" else g.m - k
    kind = "code" if _which(which) == "C" else "dual_code"
    weights = {r: code_ghw_graph_formula(g, characteristic, which, r, form,
                                         node_limit, max_ground)
               for r in range(1, top + 1)}
    return GhwTable(kind, "graph_formula", weights)


# -- Wei duality ---------------------------------------------------------------

def _complete(t: GhwTable | dict | Sequence[int]) -> list[int]:
    """Weights for r = 1..k; a plain sequence is read as exactly that."""
    if isinstance(t, GhwTable):
        weights = t.weights
    elif isinstance(t, dict):
        weights = t
    else:
        weights = dict(enumerate(t, start=1))
    keys = sorted(weights)
    if keys != list(range(1, len(keys) + 1)):
        raise ArgumentError("weight table is not complete (r must run over 1..k)")
    return [weights[r] for r in keys]


def wei_dual_weights(dual_weights, m: int) -> list[int]:
    """The hierarchy of C recovered from that of C_dual."""
    dual = _complete(dual_weights)
    holes = {m + 1 - d for d in dual}
    return [x for x in range(1, m + 1) if x not in holes]


def wei_duality_check(weights_c, weights_cdual, m: int) -> bool:
    """{delta_r(C)} = {1..m} minus {m + 1 - delta_r(C_dual)}."""
    c = _complete(weights_c)
    d = _complete(weights_cdual)
    if len(c) + len(d) != m:
        raise ArgumentError(
            f"tables of sizes {len(c)} and {len(d)} cannot cover length {m}")
    return set(c) == set(wei_dual_weights(weights_cdual, m))


# -- subcode enumeration (test oracle) -------------------------------------------

MAX_CODEWORDS = 10 ** 6


def _code_basis(g: SignedGraph, p: int, which: str) -> list[list[int]]:
    a = build_incidence(g, ScalarDomain.prime_field(p)).matrix
    if _which(which) == "C":
        return ea.row_space_basis(a)
    return ea.kernel_basis(a)


def _support_masks(vectors: np.ndarray) -> np.ndarray:
    weights = (1 << np.arange(vectors.shape[1], dtype=np.int64))
    return ((vectors != 0).astype(np.int64) * weights).sum(axis=1)


def code_ghw_bruteforce_oracle(g: SignedGraph, p: int, which: str, r: int) -> int:
    """delta_r by enumerating r-dimensional subcodes over GF(p).

    Every subcode is visited once through its reduced row-echelon coefficient
    matrix w.r.t. a basis of the code.  Rows are added one at a time and only
    the union of supports so far is remembered, which is all the remaining
    rows can interact with.  Candidate sizes are tried in increasing order.
    """
    basis = _code_basis(g, p, which)
    k = len(basis)
    _check_r(r, k, f"a code of dimension {k}")
    if p ** k > MAX_CODEWORDS:
        raise ResourceError(f"{p}^{k} codewords exceeds the guard {MAX_CODEWORDS}")
    b = np.array(basis, dtype=np.int64).reshape(k, g.m)
    pc = popcounts(g.m) if g.m <= 24 else None

    def weight(x: np.ndarray) -> np.ndarray:
        if pc is not None:
            return pc[x]
        return np.array([bin(int(v)).count("1") for v in x])

    def row_supports(pivot: int, pivots: tuple) -> np.ndarray:
        free = [c for c in range(pivot + 1, k) if c not in pivots]
        combos = np.array(list(itertools.product(range(p), repeat=len(free))),
                          dtype=np.int64).reshape(p ** len(free), len(free))
        coeff = np.zeros((len(combos), k), dtype=np.int64)
        coeff[:, pivot] = 1
        if free:
            coeff[:, free] = combos
        return np.unique(_support_masks(coeff @ b % p))

    patterns = {piv: [row_supports(c, piv) for c in piv]
                for piv in itertools.combinations(range(k), r)}
    for t in range(r, g.m + 1):
        for rows in patterns.values():
            partial = np.zeros(1, dtype=np.int64)
            for sup in rows:
                sup = sup[weight(sup) <= t]
                partial = np.unique((partial[:, None] | sup[None, :]).ravel())
                partial = partial[weight(partial) <= t]
                if partial.size == 0:
                    break
            if partial.size:
                return t
    raise DomainError("no subcode found")  # unreachable for r <= k


def code_ghw_subcode_count(g: SignedGraph, p: int, which: str) -> list[int]:
    """Whole hierarchy from codeword counts: min |S| with dim C(S) >= r.

    C(S) is the subcode of words supported inside S; it has p^dim words.
    """
    basis = _code_basis(g, p, which)
    k = len(basis)
    if p ** k > MAX_CODEWORDS:
        raise ResourceError(f"{p}^{k} codewords exceeds the guard {MAX_CODEWORDS}")
    if g.m > DEFAULT_MAX_GROUND:
        raise ResourceError("support table too large")
    if k == 0:
        return []
    b = np.array(basis, dtype=np.int64).reshape(k, g.m)
    coeff = np.array(list(itertools.product(range(p), repeat=k)),
                     dtype=np.int64).reshape(p ** k, k)
    sup = _support_masks(coeff @ b % p)
    count = np.bincount(sup, minlength=1 << g.m).astype(np.int64)
    idx = np.arange(1 << g.m, dtype=np.int64)
    for j in range(g.m):
        has = (idx >> j) & 1 == 1
        count[has] += count[idx[has] ^ (1 << j)]
    pc = popcounts(g.m)
    return [int(pc[count >= p ** r].min()) for r in range(1, k + 1)]
