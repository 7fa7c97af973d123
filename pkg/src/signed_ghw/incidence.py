"""Incidence matrices of signed graphs."""

from __future__ import annotations

from dataclasses import dataclass

from . import exact_algebra as ea
from .exact_algebra import ExactMatrix, ScalarDomain
from .signed_graph import SignedGraph, is_balanced


@dataclass(frozen=True)
class IncidenceMatrix:
    graph: SignedGraph
    domain: ScalarDomain
    matrix: ExactMatrix

    def column(self, edge: int) -> list:
        """Column of the 1-based ``edge``."""
        return self.matrix.column(edge - 1)


def incidence_columns(g: SignedGraph) -> list[list[int]]:
    """Integer columns, before reduction into a field.

    Positive link {t_i, t_j} with i < j gives e_i - e_j, a negative link
    e_i + e_j, a positive loop 0 and a negative loop 2 e_i.
    """
    cols = []
    for e in g.edges:
        col = [0] * g.s
        if e.is_loop:
            if e.sign < 0:
                col[e.u - 1] = 2
        else:
            i, j = sorted((e.u, e.v))
            col[i - 1] = 1
            col[j - 1] = -1 if e.sign > 0 else 1
        cols.append(col)
    return cols


def build_incidence(g: SignedGraph, domain: ScalarDomain | None = None) -> IncidenceMatrix:
    domain = domain or ScalarDomain.rationals()
    mat = ExactMatrix.from_columns(incidence_columns(g), domain, g.s)
    return IncidenceMatrix(g, domain, mat)


def predicted_rank(g: SignedGraph, characteristic: int) -> int:
    """s - c_0 away from characteristic 2, s - c in characteristic 2."""
    c, c0 = g._base_counts
    if characteristic == 2 or is_balanced(g):
        return g.s - c
    return g.s - c0


def rank_formula_check(g: SignedGraph, domain: ScalarDomain) -> tuple[int, int]:
    """(rank by elimination, rank from component counts)."""
    computed = ea.rank(build_incidence(g, domain).matrix)
    return computed, predicted_rank(g, domain.characteristic())
