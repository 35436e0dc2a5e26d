"""Newton polyhedra: facets, convenience, nondegeneracy, and the induced ordering."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .cones import _null_vector
from .core import QQ, BudgetExceeded, Polynomial
from .groebner import contains_one
from .orderings import LinearForm, NewtonOrdering, SemigroupOrdering


class PolyhedronError(ValueError):
    pass


@dataclass(frozen=True)
class Facet:
    form: LinearForm  # normalized to take the value 1 on the facet
    face_points: tuple  # support points on the facet, sorted

    def to_json(self) -> dict:
        from .core import render_rational
        return {"form": [render_rational(c) for c in self.form.coefficients],
                "face_points": [list(p) for p in self.face_points]}


@dataclass
class NewtonPolyhedron:
    support: tuple
    compact_facets: list
    supporting_normals: list = field(default_factory=list)  # all facets, as (normal, rhs, points)

    @property
    def nvars(self) -> int:
        return len(self.support[0])


def _supporting_hyperplanes(points: Sequence[tuple], n: int) -> list[tuple]:
    """All facets of ``conv(points) + R^n_{>=0}`` as ``(normal, rhs, on_points)``.

    A facet contains ``n`` affinely independent generators, where the
    generators are support points and the coordinate directions (the latter
    forcing a zero normal entry).
    """
    dirs = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    gens = [("p", p) for p in points] + [("d", d) for d in dirs]
    found = {}
    for subset in combinations(gens, n):
        if not any(kind == "p" for kind, _ in subset):
            continue
        rows = []
        for kind, v in subset:
            # unknowns (a_1..a_n, c): points give a.p - c = 0, directions a.d = 0
            rows.append(list(v) + ([-1] if kind == "p" else [0]))
        null = _null_vector(rows, n + 1)
        if null is None:
            continue
        a, c = null[:n], null[n]
        for sign in (1, -1):
            aa = [sign * x for x in a]
            cc = sign * c
            if any(x < 0 for x in aa):
                continue
            if all(sum(x * y for x, y in zip(aa, q)) >= cc for q in points):
                on = tuple(sorted(q for q in points if sum(x * y for x, y in zip(aa, q)) == cc))
                # normalize: scale so the first nonzero quantity is canonical
                scale = cc if cc != 0 else next(x for x in aa if x)
                key = (tuple(x / scale for x in aa), cc / scale)
                found[key] = on
                break
    return [(k[0], k[1], on) for k, on in found.items()]


def newton_polyhedron(f: Polynomial) -> NewtonPolyhedron:
    if f.is_zero():
        raise PolyhedronError("the zero polynomial has no Newton polyhedron")
    n = f.nvars
    support = tuple(sorted(f.terms))
    hyper = _supporting_hyperplanes(support, n)
    facets = []
    for normal, rhs, on in hyper:
        if rhs > 0 and all(x > 0 for x in normal):
            # already scaled to rhs == 1
            facets.append(Facet(LinearForm(tuple(normal)), on))
    facets.sort(key=lambda F: F.form.coefficients)
    return NewtonPolyhedron(support, facets, hyper)


def is_convenient(P: NewtonPolyhedron) -> bool:
    """The support meets every coordinate axis (away from the origin)."""
    n = P.nvars
    for i in range(n):
        if not any(p[i] > 0 and all(p[j] == 0 for j in range(n) if j != i) for p in P.support):
            return False
    return True


def convenientize(f: Polynomial, mu_bound: int) -> Polynomial:
    """Add ``x_i^(mu_bound+2)`` for every axis the support misses."""
    P = newton_polyhedron(f)
    n = f.nvars
    out = f
    for i in range(n):
        if not any(p[i] > 0 and all(p[j] == 0 for j in range(n) if j != i) for p in P.support):
            e = [0] * n
            e[i] = mu_bound + 2
            out = out + Polynomial.monomial(tuple(e))
    return out


def compact_faces(P: NewtonPolyhedron) -> list[tuple]:
    """Point sets of all faces of the compact facets (facets, edges, ..., vertices)."""
    all_sets = [frozenset(on) for _, _, on in P.supporting_normals]
    faces = set()
    frontier = [frozenset(F.face_points) for F in P.compact_facets]
    while frontier:
        face = frontier.pop()
        if face in faces or not face:
            continue
        faces.add(face)
        for other in all_sets:
            sub = face & other
            if sub and sub != face and sub not in faces:
                frontier.append(sub)
    return sorted((tuple(sorted(s)) for s in faces), key=lambda s: (-len(s), s))


def principal_part(f: Polynomial, face: Sequence[tuple]) -> Polynomial:
    pts = set(face)
    return f.truncate(lambda m: m in pts)


def face_is_nondegenerate(f_face: Polynomial, max_pairs: int | None = None) -> bool:
    """No common zero of the partials of ``f_face`` in the torus."""
    n = f_face.nvars
    if len(f_face) == 1:
        return True
    # extra variable z with x_1 ... x_n z = 1 excludes the coordinate hyperplanes
    lift = lambda p: Polynomial._raw(n + 1, {m + (0,): c for m, c in p.terms.items()})
    gens = [lift(f_face.derivative(i)) for i in range(n)]
    gens = [g for g in gens if g]
    gens.append(Polynomial.monomial((1,) * (n + 1)) - Polynomial.constant(n + 1, 1))
    return contains_one(gens, SemigroupOrdering("dp", n + 1), max_pairs)


def nondegenerate(f: Polynomial, P: NewtonPolyhedron | None = None,
                  max_pairs: int | None = 20000):
    """``True``, ``False``, or ``"indeterminate"`` when a face check runs out of budget."""
    P = P or newton_polyhedron(f)
    verdict = True
    for face in compact_faces(P):
        try:
            if not face_is_nondegenerate(principal_part(f, face), max_pairs):
                return False
        except BudgetExceeded:
            verdict = "indeterminate"
    return verdict


def ordering_from_polyhedron(P: NewtonPolyhedron, tiebreak: SemigroupOrdering | None = None
                             ) -> NewtonOrdering:
    if not P.compact_facets or not is_convenient(P):
        raise PolyhedronError("the Newton polyhedron is not convenient")
    n = P.nvars
    return NewtonOrdering(tuple(F.form for F in P.compact_facets), (1,) * n,
                          tiebreak or SemigroupOrdering("ds", n))
