"""Rational polyhedra in the positive orthant and the monomial cones of a
Newton ordering.

A :class:`Polyhedron` is ``{u in R^n : u >= 0, a . u >= b for (a, b) in rows}``
with integer data.  Because it sits inside the orthant it is pointed, so a
nonempty one always has a vertex.  Its lattice points form a module over the
lattice points of its recession cone, and :meth:`Polyhedron.module_generators`
returns the minimal generators of that module.

Finiteness of the generator search: every lattice point ``p`` can be written
``p = v + sum mu_j r_j`` with ``v`` in the convex hull of the vertices and at
most ``n`` primitive extreme rays ``r_j`` (Caratheodory).  Subtracting
``floor(mu_j) r_j`` leaves a lattice point of the polyhedron whose 1-norm is at
most ``max|v| + (sum of the n largest |r_j|)``, so minimal generators never
exceed that norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import ceil, gcd, lcm
from typing import Callable, Iterable, Sequence

from .core import QQ, monomials_of_degree
from .orderings import LinearForm, NewtonOrdering

Row = tuple  # (coefficients: tuple[int, ...], rhs: int)


def _solve(matrix: list[list], rhs: list):
    """Solve a square system exactly; ``None`` when singular."""
    n = len(matrix)
    a = [[QQ(x) for x in row] + [QQ(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _null_vector(rows: list[list], n: int):
    """A basis vector of the kernel when it is one-dimensional, else ``None``."""
    a = [[QQ(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        return None
    fc = free[0]
    v = [QQ(0)] * n
    v[fc] = QQ(1)
    for i, pc in enumerate(pivots):
        v[pc] = -a[i][fc]
    return v


def primitive(v: Sequence) -> tuple:
    """Scale a rational vector to the primitive integer vector on its ray."""
    den = lcm(*(QQ(x).denominator for x in v))
    ints = [int(QQ(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def lattice_points_by_norm(n: int, bound: int) -> Iterable[tuple]:
    for d in range(bound + 1):
        yield from monomials_of_degree(n, d)


@dataclass(frozen=True)
class Polyhedron:
    nvars: int
    rows: tuple  # tuple of Row

    @staticmethod
    def make(nvars: int, rows: Iterable[Row]) -> "Polyhedron":
        clean = []
        for coeffs, rhs in rows:
            coeffs = tuple(int(c) for c in coeffs)
            rhs = int(rhs)
            g = 0
            for c in coeffs:
                g = gcd(g, c)
            if g == 0:
                if rhs > 0:
                    # 0 >= positive: infeasible, keep as a marker row
                    clean.append((coeffs, rhs))
                continue
            # Dividing by the content and rounding the bound up keeps
            # exactly the same lattice points.
            row = (tuple(c // g for c in coeffs), -((-rhs) // g))
            if row not in clean:
                clean.append(row)
        return Polyhedron(nvars, tuple(clean))

    def contains(self, p: Sequence[int]) -> bool:
        if any(x < 0 for x in p):
            return False
        for coeffs, rhs in self.rows:
            if sum(c * x for c, x in zip(coeffs, p)) < rhs:
                return False
        return True

    def _contains_rational(self, p) -> bool:
        if any(x < 0 for x in p):
            return False
        return all(sum(c * x for c, x in zip(coeffs, p)) >= rhs for coeffs, rhs in self.rows)

    @cached_property
    def recession_cone(self) -> "Polyhedron":
        return Polyhedron(self.nvars, tuple((c, 0) for c, _ in self.rows))

    def _all_constraints(self) -> list[Row]:
        n = self.nvars
        units = [(tuple(1 if j == i else 0 for j in range(n)), 0) for i in range(n)]
        return list(self.rows) + units

    @cached_property
    def vertices(self) -> tuple:
        n = self.nvars
        cons = self._all_constraints()
        found = []
        for subset in combinations(cons, n):
            sol = _solve([list(c) for c, _ in subset], [b for _, b in subset])
            if sol is None or not self._contains_rational(sol):
                continue
            sol = tuple(sol)
            if sol not in found:
                found.append(sol)
        return tuple(found)

    def is_empty(self) -> bool:
        return not self.vertices

    @cached_property
    def rays(self) -> tuple:
        """Primitive integer extreme rays of the recession cone."""
        n = self.nvars
        cone = self.recession_cone
        cons = cone._all_constraints()
        found = []
        for subset in combinations(cons, n - 1):
            v = _null_vector([list(c) for c, _ in subset], n)
            if v is None:
                continue
            for sign in (1, -1):
                w = [sign * x for x in v]
                if cone._contains_rational(w):
                    r = primitive(w)
                    if r not in found:
                        found.append(r)
                    break
        return tuple(sorted(found))

    def _ray_bound(self) -> int:
        norms = sorted((sum(r) for r in self.rays), reverse=True)
        return sum(norms[: self.nvars])

    def search_bound(self) -> int:
        """1-norm beyond which no minimal generator can lie."""
        if not self.vertices:
            return -1
        top = max(sum(v) for v in self.vertices)
        return ceil(top) + self._ray_bound()

    def _in_recession_lattice(self, d: Sequence[int]) -> bool:
        return self.recession_cone.contains(d)

    def module_generators(self) -> list[tuple]:
        """Minimal lattice generators over the recession cone's lattice points."""
        bound = self.search_bound()
        gens: list[tuple] = []
        if bound < 0:
            return gens
        for p in lattice_points_by_norm(self.nvars, bound):
            if not self.contains(p):
                continue
            if any(self._in_recession_lattice(tuple(a - b for a, b in zip(p, g)))
                   for g in gens):
                continue
            gens.append(p)
        return gens

    def find_lattice_point(self):
        """Some lattice point of smallest 1-norm, or ``None`` if there is none."""
        bound = self.search_bound()
        if bound < 0:
            return None
        for v in self.vertices:
            if all(x.denominator == 1 for x in v):
                return tuple(int(x) for x in v)
        for p in lattice_points_by_norm(self.nvars, bound):
            if self.contains(p):
                return p
        return None

    def hilbert_basis(self) -> list[tuple]:
        """Minimal semigroup generators of the recession cone's lattice points."""
        cone = self.recession_cone
        bound = self._ray_bound()
        gens: list[tuple] = []
        for p in lattice_points_by_norm(self.nvars, bound):
            if not any(p) or not cone.contains(p):
                continue
            if any(cone.contains(tuple(a - b for a, b in zip(p, g))) for g in gens):
                continue
            gens.append(p)
        return gens


# -- monomial cones of a Newton ordering -------------------------------------

@dataclass(frozen=True)
class MonomialCone:
    """``M(l)`` (``shifted=False``) or ``M_delta(l)`` for a form of ``ordering``."""

    owner_form: LinearForm
    ordering: NewtonOrdering
    shifted: bool = True

    @property
    def index(self) -> int:
        return self.ordering.forms.index(self.owner_form)

    def polyhedron(self) -> Polyhedron:
        o = self.ordering
        i = self.index
        li = o.int_forms[i]
        rows = []
        for j, lj in enumerate(o.int_forms):
            if j == i:
                continue
            coeffs = tuple(a - b for a, b in zip(lj, li))
            rhs = (o.int_shift[i] - o.int_shift[j]) if self.shifted else 0
            rows.append((coeffs, rhs))
        return Polyhedron.make(o.nvars, rows)


def cone_membership(c: MonomialCone, m: Sequence[int]) -> bool:
    o = c.ordering
    m = tuple(m)
    if c.shifted:
        vals = o.form_values(m)
    else:
        vals = tuple(sum(a * e for a, e in zip(cs, m)) for cs in o.int_forms)
    return vals[c.index] == min(vals)


def algebra_generators(c: MonomialCone) -> set[tuple]:
    """Minimal generators of the affine semigroup ``M(l)``."""
    return set(c.polyhedron().hilbert_basis())


def module_generators(c: MonomialCone,
                      restrict_to: Callable[[tuple], bool] | None = None,
                      bound: int | None = None) -> set[tuple]:
    """Generators of ``M_delta(l)`` over ``M(l)``.

    With ``restrict_to`` (a predicate closed under adding ``M(l)`` inside the
    cone, such as lead-monomial-set membership) the generators of the
    restricted submodule are found by enumeration up to ``bound``, which the
    caller must supply since a bare predicate carries no geometry.
    """
    P = c.polyhedron()
    if restrict_to is None:
        return set(P.module_generators())
    if bound is None:
        raise ValueError("a degree bound is required with restrict_to")
    gens: list[tuple] = []
    for p in lattice_points_by_norm(P.nvars, bound):
        if not P.contains(p) or not restrict_to(p):
            continue
        if any(P.recession_cone.contains(tuple(a - b for a, b in zip(p, g))) for g in gens):
            continue
        gens.append(p)
    return set(gens)


def cones_of(o: NewtonOrdering, shifted: bool = True) -> list[MonomialCone]:
    return [MonomialCone(l, o, shifted) for l in o.forms]
