"""Exact Gaussian elimination over the rationals on sparse rows."""

from __future__ import annotations

from typing import Sequence

from .core import QQ


class RankDeficient(ValueError):
    """The rows handed to the eliminator were linearly dependent."""


def _axpy(target: dict, factor, source: dict) -> None:
    # target -= factor * source, dropping zeros
    for c, v in source.items():
        nv = target.get(c, 0) - factor * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


def sparse_rref(rows: Sequence[dict], ncols: int | None = None,
                allow_dependent: bool = False) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form with leftmost pivots.

    ``rows`` are ``{column: value}`` dicts.  Returns the nonzero reduced rows
    sorted by pivot column, each with pivot entry ``1`` and zeros in every
    other pivot column, together with the pivot columns.
    """
    pivots: dict[int, dict] = {}
    for r in rows:
        r = {c: QQ(v) for c, v in r.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                inv = 1 / r[c]
                if inv != 1:
                    r = {k: v * inv for k, v in r.items()}
                pivots[c] = r
                break
            _axpy(r, r[c], p)
        else:
            if not allow_dependent:
                raise RankDeficient("input rows are linearly dependent")
    order = sorted(pivots)
    for c in reversed(order):
        row = pivots[c]
        hits = sorted(k for k in row if k != c and k in pivots)
        for k in hits:
            f = row.get(k)
            if f:
                _axpy(row, f, pivots[k])
    return [pivots[c] for c in order], order


def gauss_eliminate(matrix: Sequence[Sequence], allow_dependent: bool = False) -> list[list]:
    """Dense convenience wrapper: RREF of a list-of-lists matrix.

    Zero rows produced by dependent input are dropped only when
    ``allow_dependent`` is set; otherwise dependence raises
    :class:`RankDeficient`.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    sparse = [{j: QQ(v) for j, v in enumerate(row) if v} for row in matrix]
    reduced, _ = sparse_rref(sparse, ncols, allow_dependent)
    return [[r.get(j, QQ(0)) for j in range(ncols)] for r in reduced]


def row_space_equal(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """Whether two matrices have the same row space (compared via canonical RREF)."""
    ra = gauss_eliminate(a, allow_dependent=True)
    rb = gauss_eliminate(b, allow_dependent=True)
    return ra == rb
