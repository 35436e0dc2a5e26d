"""Conversion of standard bases of zero-dimensional ideals between local orderings.

The ideal ``I`` contains a monomial ideal ``Z`` with finite complement ``M``.
Modulo ``Z`` the ideal is spanned by one multiple ``x^u g`` of a basis element
per lead monomial in ``M``; Gaussian elimination of these rows with columns
sorted by the target ordering yields the target lead monomials as pivots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Polynomial, divides, monomials_of_degree
from .engine import (BasisCandidate, BudgetExceeded, LeadMonomialSet, _Context, _Elem,
                     _reduce, monomial_staircase)
from .linalg import sparse_rref
from .orderings import OrderingError, classify, require_certified


@dataclass
class StaircaseDecomposition:
    z_gen: list  # minimal generators of Z
    outside: list  # M = monomials outside Z, sorted decreasingly by the source ordering
    standard: list  # N: members of M outside L(I)
    lead: list  # H: members of M inside L(I)
    corner: tuple | None  # smallest monomial outside L(I)


@dataclass
class ConversionResult:
    basis: BasisCandidate
    staircase: list  # monomials outside the target lead-monomial set
    decomposition: StaircaseDecomposition


def _require_local(o, role: str):
    c = require_certified(o)
    if not c.is_local:
        raise OrderingError(f"the {role} ordering must be local")


def source_staircase(G: BasisCandidate, max_degree: int = 200) -> list[tuple]:
    """Monomials outside ``L(G)`` for a standard basis of a zero-dimensional ideal."""
    o = G.ordering
    n = o.nvars
    if o.is_semigroup:
        stair = monomial_staircase(G.lead_monomials(), n)
        if stair is None:
            raise ValueError("ideal is not zero-dimensional")
        return stair
    # Without a monomial lead ideal: scan degrees until every monomial of one
    # degree has normal form zero, which puts that power of (x) inside I.
    L = LeadMonomialSet(G)
    ctx = _Context(o)
    elems = [_Elem(p, o) for p in G.polys]
    out = []
    for d in range(max_degree + 1):
        all_zero = True
        for m in monomials_of_degree(n, d):
            if m not in L:
                out.append(m)
                all_zero = False
            elif all_zero and _reduce(Polynomial.monomial(m), elems, ctx):
                all_zero = False
        if all_zero:
            return out
    raise BudgetExceeded("no power of the maximal ideal found inside the ideal")


def _outside_region(o, corner: tuple) -> list[tuple]:
    """Monomials ``>= corner``; for a normal local ordering a degree without
    any such monomial ends the search."""
    n = o.nvars
    ck = o.key(corner)
    out = []
    d = 0
    while True:
        level = [m for m in monomials_of_degree(n, d) if o.key(m) >= ck]
        if not level:
            return out
        out.extend(level)
        d += 1


def minimal_generators_of_complement(outside: Sequence[tuple], n: int) -> list[tuple]:
    """Minimal generators of the monomial ideal whose complement is ``outside``."""
    inside = set(outside)
    if not inside:
        return [(0,) * n]
    gens = set()
    for m in inside:
        for i in range(n):
            a = tuple(e + (1 if j == i else 0) for j, e in enumerate(m))
            if a in inside:
                continue
            if all(tuple(e - (1 if j == k else 0) for j, e in enumerate(a)) in inside
                   for k in range(n) if a[k]):
                gens.add(a)
    return sorted(gens)


def decompose(G: BasisCandidate) -> StaircaseDecomposition:
    o = G.ordering
    _require_local(o, "source")
    n = o.nvars
    stair = source_staircase(G)
    if not stair:
        return StaircaseDecomposition([(0,) * n], [], [], [], None)
    corner = min(stair, key=o.key)
    outside = o.sorted_desc(_outside_region(o, corner))
    standard_set = set(stair)
    z_gen = minimal_generators_of_complement(outside, n)
    return StaircaseDecomposition(
        z_gen, outside, [m for m in outside if m in standard_set],
        [m for m in outside if m not in standard_set], corner)


def compute_zgen(G: BasisCandidate) -> list[tuple]:
    """Generators of a monomial ideal inside the ideal containing a power of (x).

    Everything strictly below the highest corner lies in the ideal, and that
    set is a monomial ideal for a normal local ordering.
    """
    return decompose(G).z_gen


def _witness_rows(G: BasisCandidate, dec: StaircaseDecomposition) -> list[tuple]:
    """For each lead monomial in ``M``, one multiple ``x^u g`` with that lead."""
    o = G.ordering
    inside = set(dec.outside)
    rows = []
    if o.is_semigroup:
        leads = G.lead_monomials()
        for m in dec.lead:
            for g, lm in zip(G.polys, leads):
                if divides(lm, m):
                    u = tuple(a - b for a, b in zip(m, lm))
                    break
            else:
                raise ValueError(f"no basis element leads {m}")
            rows.append((m, g, u))
    else:
        L = LeadMonomialSet(G)
        for m in dec.lead:
            w = L.witness(m)
            if w is None:
                raise ValueError(f"no basis element leads {m}")
            rows.append((m, w[0], w[1]))
    out = []
    for m, g, u in rows:
        terms = {}
        for k, v in g.terms.items():
            mk = tuple(a + b for a, b in zip(k, u))
            if mk in inside:
                terms[mk] = v
        c = terms[m]
        out.append((m, {k: v / c for k, v in terms.items()}))
    return out


def standard_basis_change(G: BasisCandidate, target) -> ConversionResult:
    """Standard basis of the same zero-dimensional ideal for another local ordering."""
    _require_local(G.ordering, "source")
    _require_local(target, "target")
    dec = decompose(G)
    n = target.nvars
    if not dec.outside:
        return ConversionResult(BasisCandidate([Polynomial.constant(n, 1)], target), [], dec)
    columns = target.sorted_desc(dec.outside)
    index = {m: j for j, m in enumerate(columns)}
    rows = [{index[k]: v for k, v in terms.items()} for _, terms in _witness_rows(G, dec)]
    reduced, pivots = sparse_rref(rows, len(columns))
    polys = [Polynomial._raw(n, {columns[j]: v for j, v in r.items()}) for r in reduced]
    pivot_set = set(pivots)
    staircase = [columns[j] for j in range(len(columns)) if j not in pivot_set]
    polys += [Polynomial.monomial(z) for z in dec.z_gen]
    return ConversionResult(BasisCandidate(polys, target), staircase, dec)
