"""Standard bases for Newton orderings.

Polynomials in ``K[t, x]`` that occur here are always homogeneous and free of
``t`` factors after each step, and such a polynomial is the homogenization of
its dehomogenization.  The engine therefore works on ordinary polynomials and
tracks the homogeneous degree as the total degree; the power of ``t`` needed
to line up a reduction is ``max(0, |u| + deg f - deg h)``.

The lead monomial of a multiple ``x^u f`` under a Newton ordering is governed
by one fact used throughout: if ``LM(x^u f) = m`` and the form ``l`` attains
the weight at ``m``, the monomial of ``f`` that produced ``m`` is
``lead_l(f)``, the tie-break-largest among the monomials of ``f`` minimizing
``l``.  Hence the multipliers ``u`` with ``LM(x^u f)`` in the cone of ``l``
form an integer polyhedron whose recession cone is ``M(l)``.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cones import Polyhedron
from .core import (BudgetExceeded, HPolynomial, Polynomial, QQ, dehomogenize, divides, homogenize,
                   mono_gcd, mono_lcm, strip_t_powers)
from .orderings import NewtonOrdering, classify, require_certified


@dataclass
class BasisCandidate:
    polys: list
    ordering: object

    def __post_init__(self):
        self.polys = [p for p in self.polys]
        if any(p.is_zero() for p in self.polys):
            raise ValueError("basis candidates may not contain the zero polynomial")

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def lead_monomials(self) -> list[tuple]:
        return [self.ordering.lead_monomial(p) for p in self.polys]


def lead_for_form(o: NewtonOrdering, f: Polynomial, i: int) -> tuple:
    """Tie-break-largest monomial of ``f`` among those minimizing form ``i``."""
    best = None
    best_val = None
    tb = o.tiebreak
    cs = o.int_forms[i]
    for m in f.terms:
        v = sum(c * e for c, e in zip(cs, m))
        if best is None or v < best_val or (v == best_val and tb.key(m) > tb.key(best)):
            best, best_val = m, v
    return best


def multiplier_polyhedron(o: NewtonOrdering, f: Polynomial, i: int,
                          alpha: tuple | None = None) -> Polyhedron:
    """``{u : LM(x^u f) = u + lead_i(f)`` and it lies in the cone of form ``i``}."""
    if alpha is None:
        alpha = lead_for_form(o, f, i)
    tb = o.tiebreak
    vals = {m: o.form_values(m) for m in f.terms}
    base = vals[alpha][i]
    rows = []
    for j, lj in enumerate(o.int_forms):
        if j == i:
            continue
        rhs = base - vals[alpha][j]
        for m, v in vals.items():
            if m == alpha:
                continue
            bound = base - v[j] + (1 if tb.key(m) > tb.key(alpha) else 0)
            if bound > rhs:
                rhs = bound
        coeffs = tuple(a - b for a, b in zip(lj, o.int_forms[i]))
        rows.append((coeffs, rhs))
    return Polyhedron.make(o.nvars, rows)


class _Elem:
    """A reducer together with cached lead data."""

    __slots__ = ("poly", "lm", "deg", "_lead", "_poly")

    def __init__(self, poly: Polynomial, o):
        self.poly = poly
        self.lm = o.lead_monomial(poly)
        self.deg = poly.degree()
        self._lead = {}
        self._poly = {}

    def lead_for(self, o, i):
        a = self._lead.get(i)
        if a is None:
            a = self._lead[i] = lead_for_form(o, self.poly, i)
        return a

    def polyhedron(self, o, i) -> Polyhedron:
        P = self._poly.get(i)
        if P is None:
            P = self._poly[i] = multiplier_polyhedron(o, self.poly, i, self.lead_for(o, i))
        return P


class Filtration:
    """Integer grading ``m -> min_k (c_k . m + s_k)`` with positive ``c_k``.

    Attached to a local ordering whenever a larger grade always means a
    smaller monomial, so that ``N_D`` (the monomials of grade at least ``D``)
    contains every monomial below any of its members.
    """

    def __init__(self, pieces: Sequence[tuple]):
        self.pieces = [(tuple(c), s) for c, s in pieces]
        # grade(m) - grade(m / x_i) never exceeds the band
        self.band = max(max(c) for c, _ in self.pieces)

    @staticmethod
    def of(o) -> "Filtration | None":
        grading = o.local_grading()
        if grading is not None:
            return Filtration([(grading, 0)])
        if isinstance(o, NewtonOrdering) and all(c > 0 for cs in o.int_forms for c in cs):
            return Filtration(list(zip(o.int_forms, o.int_shift)))
        return None

    def grade(self, m) -> int:
        return min(sum(c * e for c, e in zip(cs, m)) + s for cs, s in self.pieces)

    def below(self, limit: int) -> list[tuple]:
        """All monomials of grade less than ``limit``."""
        n = len(self.pieces[0][0])
        out = []

        def walk(prefix, partial):
            k = len(prefix)
            if k == n:
                out.append(tuple(prefix))
                return
            e, vals = 0, partial
            while min(vals) < limit:
                walk(prefix + [e], vals)
                e += 1
                vals = [v + cs[k] for v, (cs, _) in zip(vals, self.pieces)]

        walk([], [s for _, s in self.pieces])
        return out

    def generators(self, limit: int, below: list | None = None) -> list[tuple]:
        """Minimal monomial generators of ``N_limit``."""
        below = self.below(limit) if below is None else below
        out = set()
        for m in below:
            for i in range(len(m)):
                mm = m[:i] + (m[i] + 1,) + m[i + 1:]
                if mm in out or self.grade(mm) < limit:
                    continue
                if all(self.grade(mm[:k] + (mm[k] - 1,) + mm[k + 1:]) < limit
                       for k in range(len(mm)) if mm[k]):
                    out.add(mm)
        return sorted(out)


class _Context:
    """Per-computation settings shared by the reduction routines.

    With ``filtration``/``limit`` set, every monomial of grade at least
    ``limit`` is treated as zero, i.e. the computation runs in the quotient
    by that monomial ideal.  All polynomials then live in a
    finite-dimensional space and plain lead-term division terminates, so the
    history set of Mora's normal form is not needed.
    """

    def __init__(self, o, filtration: Filtration | None = None, limit=None):
        self.o = o
        self.semigroup = o.is_semigroup
        self.local = classify(o).is_local
        self.truncate_below = None
        self.filtration = filtration
        self.limit = limit

    @property
    def truncating(self) -> bool:
        return self.limit is not None

    def keep(self, m) -> bool:
        if self.limit is not None and self.filtration.grade(m) >= self.limit:
            return False
        if self.truncate_below is not None and self.o.key(m) < self.truncate_below:
            return False
        return True

    def clip(self, f: Polynomial) -> Polynomial:
        if self.limit is None and self.truncate_below is None:
            return f
        return f.truncate(self.keep)


def _find_reducer(m, degh, G, H, ctx):
    o = ctx.o
    best = None
    best_a = None
    li = None if ctx.semigroup else o.minimizers(m)[0]
    for from_h, pool in ((False, G), (True, H)):
        for e in pool:
            if ctx.semigroup:
                gamma = e.lm
                if not divides(gamma, m):
                    continue
                u = tuple(a - b for a, b in zip(m, gamma))
            else:
                gamma = e.lead_for(o, li)
                u = tuple(a - b for a, b in zip(m, gamma))
                if any(x < 0 for x in u) or not e.polyhedron(o, li).contains(u):
                    continue
            if ctx.truncating:
                return (e, u, gamma), 0
            if from_h and not ctx.local and any(u):
                # multipliers applied to earlier intermediate values must be <= 1
                if o.key(u) > o.key((0,) * len(u)):
                    continue
            a = sum(u) + e.deg - degh
            if a < 0:
                a = 0
            if best is None or a < best_a:
                best, best_a = (e, u, gamma), a
                if a == 0:
                    return best, best_a
    return best, best_a


def _reduce(h: Polynomial, G: list, ctx: _Context, budget: list | None = None) -> Polynomial:
    """Lead-reduce ``h`` against ``G`` with Mora's history set; returns the remainder."""
    o = ctx.o
    neg_key = o.neg_key
    n = h.nvars
    terms = dict(ctx.clip(h).terms)
    H: list[_Elem] = []
    heap = [(neg_key(m), m) for m in terms]
    heapq.heapify(heap)
    degree_count: dict = {}
    for m in terms:
        d = sum(m)
        degree_count[d] = degree_count.get(d, 0) + 1
    degh = max(degree_count, default=0)
    keep = ctx.keep if (ctx.limit is not None or ctx.truncate_below is not None) else None
    while heap:
        _, m = heapq.heappop(heap)
        if m not in terms:
            continue
        found, a = _find_reducer(m, degh, G, H, ctx)
        if found is None:
            break
        if budget is not None:
            budget[0] -= 1
            if budget[0] < 0:
                raise BudgetExceeded("normal form reduction budget exhausted")
        e, u, gamma = found
        if a > 0:
            H.append(_Elem(Polynomial._raw(n, dict(terms)), o))
        c = terms[m] / e.poly.terms[gamma]
        for k, v in e.poly.terms.items():
            mk = tuple(x + y for x, y in zip(k, u))
            if keep is not None and not keep(mk):
                continue
            old = terms.get(mk)
            if old is None:
                terms[mk] = -c * v
                heapq.heappush(heap, (neg_key(mk), mk))
                d = sum(mk)
                degree_count[d] = degree_count.get(d, 0) + 1
                continue
            nv = old - c * v
            if nv:
                terms[mk] = nv
            else:
                del terms[mk]
                d = sum(mk)
                degree_count[d] -= 1
        if m in terms:
            del terms[m]
            degree_count[sum(m)] -= 1
        while degh > 0 and not degree_count.get(degh):
            degh -= 1
    return Polynomial._raw(n, terms)


def normal_form(p: HPolynomial, G: Sequence[HPolynomial], o) -> HPolynomial:
    """Homogenized normal form of ``p`` with respect to ``G``.

    ``p`` and the members of ``G`` must be homogeneous in ``K[t, x]``.  A
    nonzero result has a lead monomial (after setting ``t = 1``) outside the
    lead-monomial set of ``G``.
    """
    require_certified(o)
    if p.is_zero():
        return p
    if not p.is_homogeneous() or any(not g.is_homogeneous() for g in G):
        raise ValueError("normal_form expects homogeneous input")
    elems = [_Elem(dehomogenize(g), o) for g in G if not g.is_zero()]
    h = dehomogenize(strip_t_powers(p))
    r = _reduce(h, elems, _Context(o))
    if r == h:
        return p
    return homogenize(r) if r else HPolynomial(p.nvars)


def reduce_polynomial(f: Polynomial, G: Sequence[Polynomial], o) -> Polynomial:
    """Normal form on dehomogenized input: ``NF(f^h, G^h)`` with ``t = 1``."""
    require_certified(o)
    if f.is_zero():
        return f
    return _reduce(f, [_Elem(g, o) for g in G], _Context(o))


# -- lead-monomial sets ------------------------------------------------------

def lm_multiple(o, g: Polynomial, u: tuple) -> tuple:
    """``LM(x^u g)`` computed term by term."""
    return max((tuple(a + b for a, b in zip(k, u)) for k in g.terms), key=o.key)


class LeadMonomialSet:
    """``L(G)``: all lead monomials of monomial multiples of members of ``G``."""

    def __init__(self, G: BasisCandidate | Sequence[Polynomial], o=None):
        if isinstance(G, BasisCandidate):
            o = G.ordering if o is None else o
            G = G.polys
        self.polys = list(G)
        self.ordering = o
        # semigroup orderings: L(G) is the monomial ideal of the lead monomials
        self._leads = [o.lead_monomial(g) for g in self.polys] if o.is_semigroup else None

    def witness(self, m: Sequence[int]):
        """``(g, u)`` with ``LM(x^u g) = m``, or ``None``."""
        m = tuple(m)
        if self._leads is not None:
            for g, lm in zip(self.polys, self._leads):
                if divides(lm, m):
                    return g, tuple(a - b for a, b in zip(m, lm))
            return None
        for g in self.polys:
            for gamma in g.terms:
                if divides(gamma, m):
                    u = tuple(a - b for a, b in zip(m, gamma))
                    if lm_multiple(self.ordering, g, u) == m:
                        return g, u
        return None

    def __contains__(self, m) -> bool:
        return self.witness(m) is not None


def lm_set_member(L: LeadMonomialSet, m: Sequence[int]) -> bool:
    return m in L


# -- s-polynomial sets and reducing sets -----------------------------------

def spoly_at(f: Polynomial, g: Polynomial, alpha: tuple, beta: tuple) -> Polynomial:
    gd = mono_gcd(alpha, beta)
    a = tuple(x - y for x, y in zip(alpha, gd))
    b = tuple(x - y for x, y in zip(beta, gd))
    return f.mul_term(b, g.terms[beta]) - g.mul_term(a, f.terms[alpha])


def _shift_rows(P: Polyhedron, offset: tuple) -> list:
    # rows in u are rewritten for v with u = v + offset
    return [(c, b - sum(x * y for x, y in zip(c, offset))) for c, b in P.rows]


def common_lead_polyhedron(o: NewtonOrdering, f: Polynomial, g: Polynomial, i: int,
                           alpha: tuple, beta: tuple) -> Polyhedron:
    """Offsets ``v`` such that ``m = lcm + v`` is ``LM`` of a multiple of ``f``
    at ``alpha`` and of ``g`` at ``beta``, both inside the cone of form ``i``."""
    l = mono_lcm(alpha, beta)
    Pf = multiplier_polyhedron(o, f, i, alpha)
    Pg = multiplier_polyhedron(o, g, i, beta)
    rows = _shift_rows(Pf, tuple(x - y for x, y in zip(l, alpha)))
    rows += _shift_rows(Pg, tuple(x - y for x, y in zip(l, beta)))
    merged: dict = {}
    for c, b in rows:
        if c not in merged or b > merged[c]:
            merged[c] = b
    return Polyhedron.make(o.nvars, merged.items())


def _spoly_candidates(f: Polynomial, g: Polynomial, o) -> list[tuple]:
    if o.is_semigroup:
        return [(o.lead_monomial(f), o.lead_monomial(g))]
    pairs = []
    for i in range(len(o.forms)):
        alpha = lead_for_form(o, f, i)
        beta = lead_for_form(o, g, i)
        if (alpha, beta) in pairs:
            continue
        if common_lead_polyhedron(o, f, g, i, alpha, beta).find_lattice_point() is not None:
            pairs.append((alpha, beta))
    return pairs


def spoly_set(f: Polynomial, g: Polynomial, o) -> list[Polynomial]:
    """The s-polynomials of ``f`` and ``g`` at term pairs that can lead a common
    multiple; zero and duplicate results are dropped."""
    if f.is_zero() or g.is_zero():
        raise ValueError("spoly_set needs nonzero polynomials")
    out: list[Polynomial] = []
    for alpha, beta in _spoly_candidates(f, g, o):
        s = spoly_at(f, g, alpha, beta)
        if s and s not in out:
            out.append(s)
    return out


def reducing_multipliers(h: Polynomial, o) -> list[tuple]:
    """Monomial multipliers ``u`` such that every ``x^a h`` is ``x^c (x^u h)``
    with ``x^c`` in the cone semigroup that owns ``LM(x^a h)``."""
    n = h.nvars
    if o.is_semigroup:
        return [(0,) * n]
    out: list[tuple] = []
    for i in range(len(o.forms)):
        for u in multiplier_polyhedron(o, h, i).module_generators():
            if u not in out:
                out.append(u)
    return sorted(out, key=lambda u: (sum(u), u))


def reducing_set(f: HPolynomial, G: Sequence[HPolynomial], o) -> set[tuple]:
    """Reducing set for ``(f, G)``; depends only on ``f`` and the ordering."""
    return set(reducing_multipliers(dehomogenize(f), o))


# -- standard bases -----------------------------------------------------------

@dataclass
class EngineStats:
    pairs: int = 0
    spolys: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    skipped_by_criteria: int = 0


@dataclass
class EngineOptions:
    max_pairs: int | None = None
    max_reduction_steps: int | None = None
    criteria: bool = True  # product and chain criteria, semigroup orderings only
    highest_corner: bool = True  # drop tail terms below the current highest corner
    # compute modulo the monomials whose filtration grade is >= truncate_at
    truncate_at: int | None = None
    stats: EngineStats = field(default_factory=EngineStats)


def _monic(p: Polynomial, o) -> Polynomial:
    return p.make_monic(o.lead_monomial(p))


def _h_lead_degree(e: _Elem) -> int:
    # t^(deg - |lm|) x^lm is the homogenized lead
    return e.deg - sum(e.lm)


def standard_basis(G: BasisCandidate, options: EngineOptions | None = None) -> BasisCandidate:
    """Modified Buchberger algorithm with s-polynomial sets and reducing sets."""
    o = G.ordering
    require_certified(o)
    opts = options or EngineOptions()
    stats = opts.stats
    steps = None if opts.max_reduction_steps is None else [opts.max_reduction_steps]
    if opts.truncate_at is not None:
        filtration = Filtration.of(o)
        if filtration is None:
            raise ValueError("truncation needs a local ordering graded by positive weights")
        ctx = _Context(o, filtration, opts.truncate_at)
    else:
        ctx = _Context(o)
    S: list[_Elem] = []
    for p in G.polys:
        p = ctx.clip(p)
        if p:
            S.append(_Elem(_monic(p, o), o))
    queue: list = []
    counter = itertools.count()
    use_criteria = opts.criteria and o.is_semigroup
    done: set = set()

    def pair_degree(i, j):
        a, b = S[i], S[j]
        return max(_h_lead_degree(a), _h_lead_degree(b)) + sum(mono_lcm(a.lm, b.lm))

    def push(i, j):
        if i > j:
            i, j = j, i
        heapq.heappush(queue, (pair_degree(i, j), next(counter), i, j))

    for j in range(len(S)):
        for i in range(j + 1):
            push(i, j)
    use_corner = opts.highest_corner and o.is_semigroup and not ctx.truncating
    if use_corner:
        _refresh_corner(S, ctx, o)

    while queue:
        _, _, i, j = heapq.heappop(queue)
        stats.pairs += 1
        if opts.max_pairs is not None and stats.pairs > opts.max_pairs:
            raise BudgetExceeded(f"pair budget of {opts.max_pairs} exhausted")
        done.add((i, j))
        f, g = S[i], S[j]
        if use_criteria:
            if i == j:
                continue
            l = mono_lcm(f.lm, g.lm)
            if not any(mono_gcd(f.lm, g.lm)):
                stats.skipped_by_criteria += 1
                continue
            if any(k not in (i, j) and divides(S[k].lm, l)
                   and (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done
                   for k in range(len(S))):
                stats.skipped_by_criteria += 1
                continue
        for h in spoly_set(f.poly, g.poly, o):
            stats.spolys += 1
            for u in reducing_multipliers(h, o):
                stats.reductions += 1
                p = _reduce(h.mul_term(u), S, ctx, steps)
                if p.is_zero():
                    stats.zero_reductions += 1
                    continue
                S.append(_Elem(_monic(p, o), o))
                new = len(S) - 1
                for k in range(new + 1):
                    push(k, new)
                if use_corner:
                    _refresh_corner(S, ctx, o)
    return interreduce(BasisCandidate([e.poly for e in S], o))


def monomial_staircase(leads: Sequence[tuple], n: int) -> list[tuple] | None:
    """Monomials outside the monomial ideal generated by ``leads``.

    Returns ``None`` when the complement is infinite.
    """
    caps = [None] * n
    for m in leads:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            caps[i] = m[i] if caps[i] is None else min(caps[i], m[i])
        elif not support:
            return []
    if any(c is None for c in caps):
        return None
    out = []

    def walk(prefix):
        k = len(prefix)
        if k == n:
            out.append(tuple(prefix))
            return
        for e in range(caps[k]):
            cand = prefix + [e]
            # prune only once the full vector is known
            walk(cand)

    walk([])
    return [m for m in out if not any(divides(g, m) for g in leads)]


def _refresh_corner(S: list, ctx: _Context, o) -> None:
    stair = monomial_staircase([e.lm for e in S], o.nvars)
    if not stair:
        return
    corner = min(stair, key=o.key)
    cut = o.key(corner)
    if ctx.truncate_below is not None and cut <= ctx.truncate_below:
        return
    ctx.truncate_below = cut
    key = o.key
    for e in S:
        if any(key(m) < cut for m in e.poly.terms):
            e.poly = e.poly.truncate(lambda m: m == e.lm or key(m) >= cut)
            e.deg = e.poly.degree()
            e._lead.clear()
            e._poly.clear()


def zero_dim_standard_basis(polys: Sequence[Polynomial], o, start: int | None = None,
                            options: EngineOptions | None = None,
                            max_rounds: int = 12) -> BasisCandidate:
    """Standard basis of a zero-dimensional ideal for a filtered local ordering.

    The basis is computed modulo ``N_D``, the monomials of grade at least
    ``D``.  If every monomial with grade in ``[D - band, D)`` lies in the lead
    monomial set of the result, then ``N_(D - band)`` is contained in the ideal
    plus ``m N_(D - band)``, hence in the ideal by Nakayama's lemma, and the
    truncation lost nothing.  Otherwise ``D`` grows and the computation is
    repeated.
    """
    require_certified(o)
    filt = Filtration.of(o)
    if filt is None:
        raise ValueError("zero_dim_standard_basis needs a filtered local ordering")
    grade = filt.grade
    polys = [p for p in polys if p]
    if not polys:
        raise ValueError("the zero ideal is not zero-dimensional")
    D = start if start is not None else max(grade(m) for p in polys for m in p.terms) + 1
    n = o.nvars
    for _ in range(max_rounds):
        opts = EngineOptions() if options is None else EngineOptions(
            max_pairs=options.max_pairs, max_reduction_steps=options.max_reduction_steps,
            criteria=options.criteria, stats=options.stats)
        opts.truncate_at = D
        B = standard_basis(BasisCandidate(polys, o), opts) if any(
            grade(m) < D for p in polys for m in p.terms) else BasisCandidate([], o)
        L = LeadMonomialSet(B.polys, o)
        below = filt.below(D)
        if all(m in L for m in below if grade(m) >= D - filt.band):
            # minimal monomial generators of N_D that the basis does not cover yet
            extra = [m for m in filt.generators(D, below) if m not in L]
            polys_out = list(B.polys) + [Polynomial.monomial(m) for m in extra]
            return interreduce(BasisCandidate(polys_out, o))
        D = D + max(filt.band, D // 2)
    raise BudgetExceeded("no degree bound certified the ideal as zero-dimensional")


def lead_generators(f: Polynomial, o) -> list[tuple]:
    """Finite set of monomials generating ``L({f})`` cone by cone."""
    if o.is_semigroup:
        return [o.lead_monomial(f)]
    out: list[tuple] = []
    for i in range(len(o.forms)):
        alpha = lead_for_form(o, f, i)
        for u in multiplier_polyhedron(o, f, i, alpha).module_generators():
            m = tuple(a + b for a, b in zip(u, alpha))
            if m not in out:
                out.append(m)
    return out


def interreduce(G: BasisCandidate) -> BasisCandidate:
    """Drop members whose lead-monomial set is covered by the others."""
    o = G.ordering
    polys = list(G.polys)
    k = 0
    while k < len(polys):
        f = polys[k]
        rest = polys[:k] + polys[k + 1:]
        if rest:
            if o.is_semigroup:
                lm = o.lead_monomial(f)
                covered = any(divides(o.lead_monomial(g), lm) for g in rest)
            else:
                L = LeadMonomialSet(rest, o)
                covered = all(m in L for m in lead_generators(f, o))
            if covered:
                polys.pop(k)
                continue
        k += 1
    return BasisCandidate(polys, o)


def certified_truncation(G: BasisCandidate, max_grade: int | None = None) -> tuple | None:
    """A filtration level ``D`` with ``N_D`` provably inside the ideal of ``G``.

    Uses only that ``G`` lies in the ideal: once every monomial with grade in
    ``[E - band, E)`` is a lead monomial of a multiple of some member, the
    tails of those multiples have grade at least ``E - band``, so
    ``N_(E - band)`` is contained in the ideal plus ``m N_(E - band)`` and
    Nakayama's lemma applies with ``D = E - band``.  Returns
    ``(filtration, D)``, or ``None`` for orderings without a filtration or
    when no level up to ``max_grade`` (default: eight times the largest lead
    grade plus the band) works.
    """
    o = G.ordering
    filt = Filtration.of(o)
    if filt is None or not G.polys:
        return None
    L = LeadMonomialSet(G.polys, o)
    grade = filt.grade
    if max_grade is None:
        max_grade = 8 * (max(grade(o.lead_monomial(g)) for g in G.polys) + filt.band)
    # the band must reach above the constant, otherwise it can be empty
    E = grade((0,) * o.nvars) + 1
    while E <= max_grade:
        # the first band monomial outside L(G) forces the next level
        missing = [m for m in filt.below(E) if grade(m) >= E - filt.band and m not in L]
        if not missing:
            return filt, E - filt.band
        E = max(grade(m) for m in missing) + filt.band + 1
    return None


def certificate_failures(G: BasisCandidate, extra_multipliers: int = 0,
                         max_degree: int = 4, seed: int = 0) -> list:
    """Check the standard-basis criterion on ``G``.

    Every reducing-set multiple of every s-polynomial-set member must reduce
    to zero; ``extra_multipliers`` random monomial multiples (degree at most
    ``max_degree``) are checked as well.  For zero-dimensional ideals under a
    filtered local ordering the reductions run modulo a monomial ideal that
    :func:`certified_truncation` proves to lie in the ideal; that only shows
    ``G`` plus the generators of the monomial ideal to be a standard basis,
    so each such generator must also reduce to zero against ``G`` alone (for
    semigroup orderings: be divisible by a lead monomial) and is reported as
    ``(-1, -1, generator)`` otherwise.  Returns the offending
    ``(i, j, multiplier)`` triples.
    """
    o = G.ordering
    elems = [_Elem(p, o) for p in G.polys]
    cut = certified_truncation(G)
    ctx = _Context(o) if cut is None else _Context(o, cut[0], cut[1])
    failures = []
    if cut is not None:
        plain = _Context(o)
        for z in cut[0].generators(cut[1]):
            if o.is_semigroup:
                # L(G) is the monomial ideal of the leads
                if not any(divides(e.lm, z) for e in elems):
                    failures.append((-1, -1, z))
                continue
            try:
                if _reduce(Polynomial.monomial(z), elems, plain, [100000]):
                    failures.append((-1, -1, z))
            except BudgetExceeded:
                failures.append((-1, -1, z))
    spolys = []
    for j in range(len(G.polys)):
        for i in range(j + 1):
            for h in spoly_set(G.polys[i], G.polys[j], o):
                spolys.append((i, j, h))
                for u in reducing_multipliers(h, o):
                    if _reduce(h.mul_term(u), elems, ctx):
                        failures.append((i, j, u))
    rng = random.Random(seed)
    n = o.nvars
    for _ in range(extra_multipliers if spolys else 0):
        i, j, h = rng.choice(spolys)
        d = rng.randint(0, max_degree)
        u = [0] * n
        for _ in range(d):
            u[rng.randrange(n)] += 1
        if _reduce(h.mul_term(tuple(u)), elems, ctx):
            failures.append((i, j, tuple(u)))
    return failures
