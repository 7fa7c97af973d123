"""Independent brute-force oracles and graph generators for the test suite.

Nothing here imports the elimination, matroid or search code of the package;
the oracles recompute everything from definitions on small inputs.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from signed_ghw.cli import fixture_text, parse_graph
from signed_ghw.signed_graph import SignedGraph

ACCEPTANCE_LINES: list[str] = []
# criterion key ("1", "7a", ...) -> (description, passed)
ACCEPTANCE_RESULTS: dict[str, tuple[str, bool]] = {}

EX1_PAIRS = [(1, 2), (1, 3), (3, 2), (3, 4), (4, 5), (5, 6), (6, 3), (5, 7),
              (7, 8), (8, 9), (9, 7), (7, 10), (10, 11), (11, 7)]
TRIANGLE_PAIRS = [(1, 2), (1, 2), (2, 3), (2, 3), (1, 3), (1, 3)]


def fixture(name: str) -> SignedGraph:
    return parse_graph(fixture_text(name))


def all_fixtures() -> dict[str, SignedGraph]:
    return {f"ex{i}": fixture(f"ex{i}") for i in range(1, 7)}


def sets(*words: str) -> set[frozenset]:
    """'1234' -> {1,2,3,4}; labels above 9 are not needed by callers."""
    return {frozenset(int(ch) for ch in w) for w in words}


def random_signed_graph(rng: random.Random, max_s: int = 7, max_m: int = 12,
                        loops: bool = True) -> SignedGraph:
    s = rng.randint(1, max_s)
    m = rng.randint(0, max_m)
    edges = []
    for _ in range(m):
        u = rng.randint(1, s)
        if loops and rng.random() < 0.1:
            v = u
        else:
            if s == 1:
                v = u
            else:
                v = rng.choice([x for x in range(1, s + 1) if x != u])
        edges.append((u, v, rng.choice("+-")))
    return SignedGraph.from_edges(s, edges)


def random_graphs(n: int = 200, seed: int = 20240917, **kw) -> list[SignedGraph]:
    rng = random.Random(seed)
    return [random_signed_graph(rng, **kw) for _ in range(n)]


def random_simple_connected(rng: random.Random, s: int, extra: int) -> SignedGraph:
    """Random spanning tree plus up to ``extra`` further simple edges."""
    order = list(range(1, s + 1))
    rng.shuffle(order)
    pairs = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, s)}
    others = [p for p in itertools.combinations(range(1, s + 1), 2) if p not in pairs]
    rng.shuffle(others)
    pairs |= set(others[:extra])
    return SignedGraph.from_edges(s, [(u, v, rng.choice("+-")) for u, v in sorted(pairs)])


# -- linear algebra from scratch ---------------------------------------------

def columns_of(g: SignedGraph) -> list[list[int]]:
    """Incidence columns written out again from the definition."""
    cols = []
    for e in g.edges:
        c = [0] * g.s
        if e.u == e.v:
            c[e.u - 1] = 0 if e.sign > 0 else 2
        else:
            a, b = sorted((e.u, e.v))
            c[a - 1] += 1
            c[b - 1] += -1 if e.sign > 0 else 1
        cols.append(c)
    return cols


def brute_rank(vectors, p: int = 0) -> int:
    """Plain Gauss-Jordan over Fraction (p=0) or integers mod p."""
    rows = [[Fraction(x) if p == 0 else x % p for x in v] for v in vectors]
    rank = 0
    n = len(rows[0]) if rows else 0
    for c in range(n):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c] if p == 0 else pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv if p == 0 else x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b if p == 0 else (a - f * b) % p
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def subset_rank(g: SignedGraph, subset, p: int = 0) -> int:
    cols = columns_of(g)
    vecs = [cols[j - 1] for j in subset]
    return brute_rank(vecs, p) if vecs else 0


def brute_circuits(g: SignedGraph, p: int = 0) -> set[frozenset]:
    """Minimal dependent column sets, straight from ranks."""
    found: set[frozenset] = set()
    for k in range(1, g.m + 1):
        for sub in itertools.combinations(range(1, g.m + 1), k):
            fs = frozenset(sub)
            if any(c <= fs for c in found):
                continue
            if subset_rank(g, sub, p) < k:
                found.add(fs)
    return found


def brute_ghw(g: SignedGraph, p: int, which: str) -> list[int]:
    """delta_r via all subsets: nullity for C_dual, dual nullity for C."""
    E = range(1, g.m + 1)
    full = subset_rank(g, E, p)
    best: dict[int, int] = {}
    for k in range(g.m + 1):
        for sub in itertools.combinations(E, k):
            if which == "C_dual":
                val = k - subset_rank(g, sub, p)
            else:
                rest = [j for j in E if j not in sub]
                val = full - subset_rank(g, rest, p)  # dual nullity
            for r in range(1, val + 1):
                best.setdefault(r, k)
    return [best[r] for r in sorted(best)]


# -- graph theory from scratch -------------------------------------------------

def components(g: SignedGraph, keep) -> list[tuple[set, bool]]:
    """(vertex set, balanced?) per component of the spanning subgraph."""
    adj = {v: [] for v in range(1, g.s + 1)}
    for j in keep:
        e = g.edges[j - 1]
        adj[e.u].append((e.v, e.sign))
        if e.u != e.v:
            adj[e.v].append((e.u, e.sign))
    seen: dict[int, int] = {}
    out = []
    for root in range(1, g.s + 1):
        if root in seen:
            continue
        seen[root] = 1
        stack, comp, ok = [root], {root}, True
        while stack:
            x = stack.pop()
            for y, sg in adj[x]:
                want = seen[x] * sg
                if y not in seen:
                    seen[y] = want
                    comp.add(y)
                    stack.append(y)
                elif seen[y] != want:
                    ok = False
        out.append((comp, ok))
    return out


def brute_balanced(g: SignedGraph) -> bool:
    return all(ok for _, ok in components(g, range(1, g.m + 1)))


def brute_frustration(g: SignedGraph) -> int:
    E = list(range(1, g.m + 1))
    for k in range(g.m + 1):
        for drop in itertools.combinations(E, k):
            keep = [j for j in E if j not in drop]
            if all(ok for _, ok in components(g, keep)):
                return k
    raise AssertionError("unreachable")


def brute_cycles(g: SignedGraph) -> set[frozenset]:
    """Connected edge sets in which every vertex has degree 2 (loops count 2)."""
    out = set()
    for k in range(1, g.m + 1):
        for sub in itertools.combinations(range(1, g.m + 1), k):
            deg: dict[int, int] = {}
            for j in sub:
                e = g.edges[j - 1]
                deg[e.u] = deg.get(e.u, 0) + 1
                deg[e.v] = deg.get(e.v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            touched = [c for c, _ in components(g, sub) if c & set(deg)]
            if len(touched) == 1:
                out.add(frozenset(sub))
    return out


def brute_cut_counts(g: SignedGraph, removed) -> tuple[int, int]:
    keep = [j for j in range(1, g.m + 1) if j not in set(removed)]
    comps = components(g, keep)
    return len(comps), sum(ok for _, ok in comps)


def brute_min_removal(g: SignedGraph, target, index: int) -> int | None:
    """Fewest removed edges making count[index] == target."""
    for k in range(g.m + 1):
        for sub in itertools.combinations(range(1, g.m + 1), k):
            if brute_cut_counts(g, sub)[index] == target:
                return k
    return None


# -- homology from scratch -----------------------------------------------------

def brute_betti(independent: set[frozenset], n: int, p: int = 2) -> dict:
    """Hochster's formula with dense boundary ranks, for tiny ground sets."""
    table: dict[tuple[int, int], int] = {}
    for j in range(1, n + 1):
        for W in itertools.combinations(range(1, n + 1), j):
            Wf = frozenset(W)
            faces = [f for f in independent if f <= Wf]
            by_dim: dict[int, list] = {}
            for f in faces:
                by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
            ranks = {}
            for d in by_dim:
                if d - 1 not in by_dim:
                    ranks[d] = 0
                    continue
                idx = {f: i for i, f in enumerate(by_dim[d - 1])}
                mat = []
                for f in by_dim[d]:
                    col = [0] * len(idx)
                    for t in range(len(f)):
                        col[idx[f[:t] + f[t + 1:]]] = (-1) ** t
                    mat.append(col)
                ranks[d] = brute_rank(mat, p)
            for d, fs in by_dim.items():
                h = len(fs) - ranks.get(d, 0) - ranks.get(d + 1, 0)
                i = j - d - 1
                if h and i >= 1:
                    table[(i, j)] = table.get((i, j), 0) + h
    return table


def brute_independent_sets(g: SignedGraph, p: int = 0) -> set[frozenset]:
    out = set()
    for k in range(g.m + 1):
        for sub in itertools.combinations(range(1, g.m + 1), k):
            if subset_rank(g, sub, p) == k:
                out.add(frozenset(sub))
    return out
