"""Textbook Buchberger algorithm for global monomial orderings.

Independent of the engine on purpose: it serves as a cross-check for the
engine's semigroup specialization and answers the torus-zero questions of the
nondegeneracy test.
"""

from __future__ import annotations

from typing import Sequence

from .core import BudgetExceeded, Polynomial, divides, mono_lcm
from .orderings import OrderingError, SemigroupOrdering, classify


def _lead(f: Polynomial, o) -> tuple:
    return max(f.terms, key=o.key)


def reduce_full(f: Polynomial, G: Sequence[Polynomial], o, leads=None) -> Polynomial:
    """Complete division remainder of ``f`` by ``G`` (global orderings)."""
    if leads is None:
        leads = [_lead(g, o) for g in G]
    terms = dict(f.terms)
    rem = {}
    key = o.key
    n = f.nvars
    while terms:
        m = max(terms, key=key)
        c = terms[m]
        for g, lm in zip(G, leads):
            if divides(lm, m):
                u = tuple(a - b for a, b in zip(m, lm))
                q = c / g.terms[lm]
                for k, v in g.terms.items():
                    mk = tuple(a + b for a, b in zip(k, u))
                    nv = terms.get(mk, 0) - q * v
                    if nv:
                        terms[mk] = nv
                    else:
                        terms.pop(mk, None)
                break
        else:
            rem[m] = c
            del terms[m]
    return Polynomial._raw(n, rem)


def classical_groebner(G: Sequence[Polynomial], o: SemigroupOrdering,
                       max_pairs: int | None = None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``G``.

    Pairs are processed by increasing total degree of the lcm; Buchberger's
    coprime-leads criterion skips pairs that are known to reduce to zero.
    """
    if not classify(o).is_global:
        raise OrderingError("classical_groebner needs a global ordering")
    basis = [g.make_monic(_lead(g, o)) for g in G if g]
    leads = [_lead(g, o) for g in basis]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    seen = 0
    while pairs:
        pairs.sort(key=lambda p: (sum(mono_lcm(leads[p[0]], leads[p[1]])), p[1], p[0]))
        i, j = pairs.pop(0)
        seen += 1
        if max_pairs is not None and seen > max_pairs:
            raise BudgetExceeded(f"pair budget of {max_pairs} exhausted")
        a, b = leads[i], leads[j]
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        l = mono_lcm(a, b)
        s = (basis[i].mul_term(tuple(x - y for x, y in zip(l, a)))
             - basis[j].mul_term(tuple(x - y for x, y in zip(l, b))))
        r = reduce_full(s, basis, o, leads)
        if r:
            r = r.make_monic(_lead(r, o))
            basis.append(r)
            leads.append(_lead(r, o))
            k = len(basis) - 1
            pairs.extend((t, k) for t in range(k))
    # minimalize, then reduce tails
    keep = []
    for idx, lm in enumerate(leads):
        if any(divides(leads[j], lm) and (leads[j] != lm or j < idx)
               for j in range(len(basis)) if j != idx):
            continue
        keep.append(idx)
    mins = [basis[i] for i in keep]
    out = []
    for k, g in enumerate(mins):
        others = mins[:k] + mins[k + 1:]
        lm = _lead(g, o)
        tail = reduce_full(g - Polynomial.monomial(lm), others, o)
        out.append(tail + Polynomial.monomial(lm))
    return sorted(out, key=lambda g: o.key(_lead(g, o)))


def contains_one(G: Sequence[Polynomial], o: SemigroupOrdering | None = None,
                 max_pairs: int | None = None) -> bool:
    """Whether the ideal generated by ``G`` is the unit ideal."""
    if not G:
        return False
    n = G[0].nvars
    o = o or SemigroupOrdering("dp", n)
    basis = classical_groebner(G, o, max_pairs)
    return any(g.is_constant() for g in basis)
