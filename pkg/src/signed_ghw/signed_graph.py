"""Signed multigraphs and their purely combinatorial invariants.

Vertices are ``1..s`` and edges are addressed by their 1-based position in
the edge list; an edge subset is any iterable of such positions.  Internally
subsets are bitmasks with bit ``j-1`` standing for edge ``j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .errors import ArgumentError, DomainError, ResourceError

#: Largest edge count for which full ``2**m`` subset tables are built.
DEFAULT_MAX_GROUND = 22


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    sign: int  # +1 or -1

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def __str__(self):
        return f"{self.u} {self.v} {'+' if self.sign > 0 else '-'}"


def _sign(token) -> int:
    if token in (1, "+", "+1"):
        return 1
    if token in (-1, "-", "-1", "−"):
        return -1
    raise ArgumentError(f"bad sign {token!r}")


@dataclass(frozen=True)
class SignedGraph:
    """A signed multigraph; loops and parallel edges are allowed.

    The edge order is part of the value: it fixes edge indices and the column
    order of the incidence matrix.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ArgumentError("negative vertex count")
        fixed = []
        for e in self.edges:
            if not isinstance(e, Edge):
                u, v, sg = e
                e = Edge(int(u), int(v), _sign(sg))
            for x in (e.u, e.v):
                if not 1 <= x <= self.vertex_count:
                    raise ArgumentError(
                        f"vertex {x} out of range 1..{self.vertex_count}")
            fixed.append(e)
        object.__setattr__(self, "edges", tuple(fixed))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable) -> SignedGraph:
        return cls(vertex_count, tuple(edges))

    # -- basic shape -------------------------------------------------------

    @property
    def s(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def with_all_signs(self, sign) -> SignedGraph:
        """G_+ or G_- on the same underlying multigraph."""
        sg = _sign(sign)
        return SignedGraph(self.s, tuple(Edge(e.u, e.v, sg) for e in self.edges))

    def negative(self) -> SignedGraph:
        return self.with_all_signs(-1)

    def positive(self) -> SignedGraph:
        return self.with_all_signs(1)

    def switched(self, vertices: Iterable[int]) -> SignedGraph:
        """Flip the sign of every link with exactly one end in ``vertices``."""
        vs = set(vertices)
        out = []
        for e in self.edges:
            flip = (e.u in vs) != (e.v in vs)
            out.append(Edge(e.u, e.v, -e.sign if flip else e.sign))
        return SignedGraph(self.s, tuple(out))

    def edge_subgraph(self, keep: Iterable[int]) -> SignedGraph:
        """Same vertex set, only the listed edges (renumbered in order)."""
        idx = sorted(set(keep))
        return SignedGraph(self.s, tuple(self.edges[j - 1] for j in idx))

    @property
    def has_loops(self) -> bool:
        return any(e.is_loop for e in self.edges)

    @property
    def has_positive_loops(self) -> bool:
        return any(e.is_loop and e.sign > 0 for e in self.edges)

    @property
    def is_simple(self) -> bool:
        seen = set()
        for e in self.edges:
            if e.is_loop:
                return False
            key = (min(e.u, e.v), max(e.u, e.v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def mask(self, subset: Iterable[int] | None) -> int:
        """Bitmask of an edge subset given by 1-based indices."""
        if subset is None:
            return 0
        bits = 0
        for j in subset:
            if not 1 <= j <= self.m:
                raise ArgumentError(f"edge index {j} out of range 1..{self.m}")
            bits |= 1 << (j - 1)
        return bits

    # -- component structure ------------------------------------------------

    def _component_counts(self, present: int) -> tuple[int, int]:
        """(components, balanced components) of the spanning subgraph."""
        parent = list(range(self.s + 1))
        parity = [0] * (self.s + 1)  # parity relative to parent
        bad = [False] * (self.s + 1)

        def find(x):
            p = 0
            while parent[x] != x:
                p ^= parity[x]
                x = parent[x]
            return x, p

        for j, e in enumerate(self.edges):
            if not present >> j & 1:
                continue
            w = 0 if e.sign > 0 else 1
            ru, pu = find(e.u)
            rv, pv = find(e.v)
            if ru == rv:
                if pu ^ pv != w:
                    bad[ru] = True
            else:
                parent[rv] = ru
                parity[rv] = pu ^ pv ^ w
                bad[ru] = bad[ru] or bad[rv]
        roots = [x for x in range(1, self.s + 1) if parent[x] == x]
        return len(roots), sum(1 for r in roots if not bad[r])

    @cached_property
    def _base_counts(self) -> tuple[int, int]:
        return self._component_counts(self.full_mask)

    @property
    def is_connected(self) -> bool:
        return self._base_counts[0] == 1

    def bridges(self) -> list[int]:
        """Edges whose deletion increases the number of components."""
        c = self._base_counts[0]
        full = self.full_mask
        return [j + 1 for j in range(self.m)
                if self._component_counts(full ^ (1 << j))[0] > c]

    def subset_tables(self, max_ground: int = DEFAULT_MAX_GROUND):
        """Component counts for every spanning subgraph, indexed by edge mask.

        Returns ``(c, c0)`` as int8 arrays of length ``2**m``.  Built by a
        memoised transition system over union-find states, so each distinct
        partition state is processed once per edge.
        """
        key = ("tables",)
        cache = self.__dict__.setdefault("_cache", {})
        if key in cache:
            return cache[key]
        if self.m > max_ground:
            raise ResourceError(
                f"{self.m} edges exceeds the exhaustive-search guard {max_ground}")
        cache[key] = _sweep_components(self)
        return cache[key]


# -- the component automaton -----------------------------------------------

def _canonical_state(roots, parity, bad):
    """Component labels are smallest members; unbalanced parts lose parity."""
    return tuple(roots), tuple(0 if bad[roots[i]] else parity[i]
                               for i in range(len(roots))), tuple(bad)


def _add_edge(state, e: Edge):
    roots, parity, bad = state
    roots, parity, bad = list(roots), list(parity), list(bad)
    u, v = e.u - 1, e.v - 1
    w = 0 if e.sign > 0 else 1
    ru, rv = roots[u], roots[v]
    if ru == rv:
        if parity[u] ^ parity[v] != w:
            bad[ru] = True
    else:
        keep, gone = min(ru, rv), max(ru, rv)
        # relabel the component of `gone`; roots keep parity 0
        flip = parity[u] ^ parity[v] ^ w
        for i in range(len(roots)):
            if roots[i] == gone:
                roots[i] = keep
                parity[i] ^= flip
        bad[keep] = bad[keep] or bad[gone]
        bad[gone] = False
    return _canonical_state(roots, parity, bad)


def _sweep_components(g: SignedGraph):
    s, m = g.s, g.m
    start = _canonical_state(list(range(s)), [0] * s, [False] * s)
    states = [start]
    index = {start: 0}

    def counts(state):
        roots, _, bad = state
        rs = set(roots)
        return len(rs), sum(1 for r in rs if not bad[r])

    ids = np.zeros(1 << m, dtype=np.int32)
    for j, e in enumerate(g.edges):
        lo = 1 << j
        block = ids[:lo]
        uniq = np.unique(block)
        lookup = np.zeros(len(states), dtype=np.int32)
        for sid in uniq.tolist():
            nxt = _add_edge(states[sid], e)
            nid = index.get(nxt)
            if nid is None:
                nid = len(states)
                index[nxt] = nid
                states.append(nxt)
            lookup[sid] = nid
        ids[lo:2 * lo] = lookup[block]
    cc = np.array([counts(st) for st in states], dtype=np.int8)
    return cc[ids, 0], cc[ids, 1]


# -- component counts and balance ---------------------------------------------

def connected_components(g: SignedGraph, removed: Iterable[int] = ()) -> int:
    """Components of (V, E minus removed); isolated vertices count."""
    return g._component_counts(g.full_mask ^ g.mask(removed))[0]


def balanced_component_count(g: SignedGraph, removed: Iterable[int] = ()) -> int:
    """c_0 of the spanning subgraph with edge set E minus ``removed``."""
    return g._component_counts(g.full_mask ^ g.mask(removed))[1]


def is_balanced(g: SignedGraph) -> bool:
    c, c0 = g._base_counts
    return c == c0


class Cycle(NamedTuple):
    edges: frozenset
    vertices: frozenset
    balanced: bool


def _adjacency(g: SignedGraph):
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, g.s + 1)}
    for j, e in enumerate(g.edges, start=1):
        if not e.is_loop:
            adj[e.u].append((e.v, j))
            adj[e.v].append((e.u, j))
    return adj


def _sign_of(g: SignedGraph, edges) -> int:
    sg = 1
    for j in edges:
        sg *= g.edges[j - 1].sign
    return sg


def _sort_key(es):
    return (len(es), tuple(sorted(es)))


def cycles(g: SignedGraph) -> list[Cycle]:
    """All cycles (edge sets of simple closed paths), loops included.

    Each cycle is rooted at its smallest vertex and walked through larger
    vertices only; both orientations collapse under set deduplication.
    """
    cache = g.__dict__.setdefault("_cache", {})
    if "cycles" in cache:
        return cache["cycles"]
    found: dict[frozenset, frozenset] = {}
    for j, e in enumerate(g.edges, start=1):
        if e.is_loop:
            found[frozenset([j])] = frozenset([e.u])
    adj = _adjacency(g)
    for start in range(1, g.s + 1):
        path_edges: list[int] = []
        on_path = {start}

        def dfs(v):
            for w, j in adj[v]:
                if j in path_edges:
                    continue
                if w == start:
                    if path_edges:
                        es = frozenset(path_edges + [j])
                        if es not in found:
                            found[es] = frozenset(on_path)
                    continue
                if w < start or w in on_path:
                    continue
                on_path.add(w)
                path_edges.append(j)
                dfs(w)
                path_edges.pop()
                on_path.discard(w)

        dfs(start)
    out = [Cycle(es, vs, _sign_of(g, es) > 0) for es, vs in found.items()]
    out.sort(key=lambda c: _sort_key(c.edges))
    cache["cycles"] = out
    return out


def _paths_between(g: SignedGraph, adj, a_side: frozenset, b_side: frozenset):
    """Edge sets of simple paths from A to B touching A and B only at ends."""
    blocked = a_side | b_side
    for a in sorted(a_side):
        path: list[int] = []
        seen = {a}

        def dfs(v):
            for w, j in adj[v]:
                if w in b_side:
                    yield frozenset(path + [j])
                    continue
                if w in blocked or w in seen:
                    continue
                seen.add(w)
                path.append(j)
                yield from dfs(w)
                path.pop()
                seen.discard(w)

        yield from dfs(a)


def bowties(g: SignedGraph) -> list[frozenset]:
    """Two unbalanced cycles sharing one vertex, or disjoint ones plus a path."""
    cache = g.__dict__.setdefault("_cache", {})
    if "bowties" in cache:
        return cache["bowties"]
    bad = [c for c in cycles(g) if not c.balanced]
    adj = _adjacency(g)
    found = set()
    for c1, c2 in itertools.combinations(bad, 2):
        common = c1.vertices & c2.vertices
        if len(common) == 1:
            found.add(c1.edges | c2.edges)
        elif not common:
            for p in _paths_between(g, adj, c1.vertices, c2.vertices):
                found.add(c1.edges | c2.edges | p)
    out = sorted(found, key=_sort_key)
    cache["bowties"] = out
    return out


def graph_circuits(g: SignedGraph) -> list[frozenset]:
    """Balanced cycles together with bowties, sorted by (size, indices)."""
    sets = {c.edges for c in cycles(g) if c.balanced} | set(bowties(g))
    return sorted(sets, key=_sort_key)


def graph_cocircuits(g: SignedGraph, graphic: bool | None = None,
                     max_ground: int = DEFAULT_MAX_GROUND) -> list[frozenset]:
    """Minimal cutsets.

    A cutset raises the balanced-component count when ``g`` is unbalanced and
    the component count when it is balanced; ``graphic=True`` forces the
    component count (cocycles of the underlying graph).
    """
    c, c0 = g.subset_tables(max_ground)
    full = g.full_mask
    if graphic is None:
        graphic = is_balanced(g)
    table = c if graphic else c0
    base = int(table[full])
    removed = np.arange(1 << g.m, dtype=np.int64)
    cut = table[full ^ removed] > base
    minimal = cut.copy()
    for j in range(g.m):
        bit = 1 << j
        has = (removed & bit) != 0
        sub_cut = np.zeros_like(cut)
        sub_cut[has] = cut[removed[has] ^ bit]
        minimal &= ~(has & sub_cut)
    masks = np.nonzero(minimal)[0].tolist()
    out = [frozenset(j + 1 for j in range(g.m) if x >> j & 1) for x in masks]
    return sorted(out, key=_sort_key)


def _popcount(arr: np.ndarray) -> np.ndarray:
    a = arr.astype(np.int64)
    count = np.zeros_like(a)
    while a.any():
        count += a & 1
        a >>= 1
    return count


def _min_removal(g: SignedGraph, table: np.ndarray, target: int) -> int | None:
    full = g.full_mask
    hit = np.nonzero(table == target)[0]
    if hit.size == 0:
        return None
    return int(_popcount(full ^ hit).min())


def cogirth_r(g: SignedGraph, r: int,
              max_ground: int = DEFAULT_MAX_GROUND) -> int:
    """Fewest edge deletions leaving exactly ``r`` balanced components."""
    if not g.is_connected or is_balanced(g):
        raise DomainError("the r-th cogirth needs a connected unbalanced graph")
    if not 1 <= r <= g.s:
        raise DomainError(f"r={r} outside 1..{g.s}")
    _, c0 = g.subset_tables(max_ground)
    best = _min_removal(g, c0, r)
    if best is None:
        raise DomainError(f"no edge set leaves exactly {r} balanced components")
    return best


def edge_connectivity_r(g: SignedGraph, r: int,
                        max_ground: int = DEFAULT_MAX_GROUND) -> int:
    """Fewest edge deletions leaving ``r + 1`` connected components."""
    if not g.is_connected:
        raise DomainError("the r-th edge connectivity needs a connected graph")
    if not 1 <= r <= g.s - 1:
        raise DomainError(f"r={r} outside 1..{g.s - 1}")
    c, _ = g.subset_tables(max_ground)
    best = _min_removal(g, c, r + 1)
    if best is None:
        raise DomainError(f"no edge set leaves {r + 1} components")
    return best


MAX_SWITCHING_VERTICES = 24


def frustration_index_switching(g: SignedGraph) -> int:
    """Negative loops plus the fewest frustrated links over all switchings.

    Vertex 1 is pinned to +1 since a global flip changes nothing.
    """
    neg_loops = sum(1 for e in g.edges if e.is_loop and e.sign < 0)
    links = [e for e in g.edges if not e.is_loop]
    if not links:
        return neg_loops
    if g.s > MAX_SWITCHING_VERTICES:
        raise ResourceError(f"2^{g.s - 1} switchings exceeds the guard")
    n = max(g.s - 1, 0)
    codes = np.arange(1 << n, dtype=np.int64)
    # spin[v] = +1/-1 for every assignment; vertex 1 fixed at +1
    spins = np.ones((1 << n, g.s + 1), dtype=np.int8)
    for v in range(2, g.s + 1):
        spins[:, v] = 1 - 2 * ((codes >> (v - 2)) & 1)
    frustrated = np.zeros(1 << n, dtype=np.int64)
    for e in links:
        frustrated += (e.sign * spins[:, e.u] * spins[:, e.v]) < 0
    return neg_loops + int(frustrated.min())
