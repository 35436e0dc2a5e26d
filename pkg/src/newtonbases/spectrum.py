"""Milnor numbers and spectra of nondegenerate isolated hypersurface singularities."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .convert import source_staircase, standard_basis_change
from .core import BudgetExceeded, Polynomial, Rational
from .engine import (BasisCandidate, EngineOptions, Filtration, standard_basis,
                     zero_dim_standard_basis)
from .orderings import NewtonOrdering, SemigroupOrdering, classify
from .polytope import (convenientize, is_convenient, newton_polyhedron, nondegenerate,
                       ordering_from_polyhedron)


class SingularityError(ValueError):
    """The input violates a hypothesis (not isolated, degenerate, ...)."""


@dataclass
class JacobianIdeal:
    partials: list

    def __iter__(self):
        return iter(self.partials)

    def __len__(self):
        return len(self.partials)


@dataclass
class SpectrumResult:
    entries: list  # sorted (value, multiplicity)
    milnor: int
    geometric_genus: int
    ordering_used: NewtonOrdering | None
    nondegenerate: object  # True, False or "indeterminate"
    verified: bool = True  # False when nondegeneracy was assumed, not checked
    convenientized: Polynomial | None = None
    warnings: list = field(default_factory=list)

    def values(self) -> list:
        return [v for v, m in self.entries for _ in range(m)]

    def as_dict(self) -> dict:
        return dict(self.entries)


def jacobian(f: Polynomial) -> JacobianIdeal:
    if f.is_constant():
        raise SingularityError("the Jacobian ideal of a constant is zero")
    return JacobianIdeal([f.derivative(i) for i in range(f.nvars)])


def local_basis(polys: Sequence[Polynomial], o, options: EngineOptions | None = None
                ) -> BasisCandidate:
    """Standard basis of a zero-dimensional ideal, using truncation when possible."""
    polys = [p for p in polys if p]
    if Filtration.of(o) is not None:
        return zero_dim_standard_basis(polys, o, options=options)
    return standard_basis(BasisCandidate(polys, o), options)


def milnor_number(f: Polynomial, o=None, options: EngineOptions | None = None) -> int:
    """``dim K[x]_(x) / J_f``, counted as the staircase under a local ordering."""
    o = o or SemigroupOrdering("ds", f.nvars)
    c = classify(o)
    if not c.is_local or not c.certified:
        raise SingularityError("milnor_number needs a certified local ordering")
    J = [p for p in jacobian(f) if p]
    if not J:
        raise SingularityError("the Jacobian ideal is zero")
    try:
        G = local_basis(J, o, options)
        return len(source_staircase(G))
    except (BudgetExceeded, ValueError) as exc:
        if isinstance(exc, SingularityError):
            raise
        raise SingularityError(f"singularity is not isolated ({exc})") from exc


def staircase_weights(o: NewtonOrdering, staircase: Sequence[tuple]) -> Counter:
    return Counter(o.weight(m) for m in staircase)


def poincare_coefficient(o: NewtonOrdering, L, s) -> int:
    """Number of staircase monomials of Newton weight ``s``.

    ``L`` is either the staircase itself or a standard basis from which it
    is computed.
    """
    stair = source_staircase(L) if isinstance(L, BasisCandidate) else L
    from .core import QQ
    s = QQ(s)
    return sum(1 for m in stair if o.weight(m) == s)


def geometric_genus(S: SpectrumResult) -> int:
    """Multiplicity count of spectral numbers at most 1."""
    return sum(m for v, m in S.entries if v <= 1)


def _prepare(f: Polynomial, assume_nondegenerate: bool, options: EngineOptions | None):
    n = f.nvars
    if f.is_zero() or f.coefficient((0,) * n):
        raise SingularityError("f must vanish at the origin")
    P = newton_polyhedron(f)
    modified = None
    if not is_convenient(P):
        mu = milnor_number(f, SemigroupOrdering("ds", n), options)
        f = convenientize(f, mu)
        modified = f
        P = newton_polyhedron(f)
    if assume_nondegenerate:
        verdict = "assumed"
    else:
        verdict = nondegenerate(f, P)
        if verdict is False:
            raise SingularityError("the principal part of f is degenerate")
        if verdict != True:  # noqa: E712 - "indeterminate" is truthy
            raise SingularityError("nondegeneracy could not be decided within budget")
    return f, P, modified, verdict


def spectrum(f: Polynomial, direct: bool = False, assume_nondegenerate: bool = False,
             options: EngineOptions | None = None) -> SpectrumResult:
    """Spectrum as the Newton weights of the staircase of the Jacobian ideal.

    The default route computes a negative-degree-reverse-lexicographic basis
    and converts it to the Newton ordering of the polyhedron; ``direct`` runs
    the Newton-ordering engine on the Jacobian ideal instead.
    """
    n = f.nvars
    f, P, modified, verdict = _prepare(f, assume_nondegenerate, options)
    o = ordering_from_polyhedron(P)
    J = [p for p in jacobian(f) if p]
    try:
        if direct:
            G = local_basis(J, o, options)
            stair = source_staircase(G)
        else:
            G = local_basis(J, SemigroupOrdering("ds", n), options)
            stair = standard_basis_change(G, o).staircase
    except BudgetExceeded:
        raise
    except ValueError as exc:
        raise SingularityError(f"singularity is not isolated ({exc})") from exc
    counts = staircase_weights(o, stair)
    entries = sorted(counts.items())
    result = SpectrumResult(entries, len(stair), 0, o,
                            True if verdict == "assumed" else verdict,
                            verified=verdict != "assumed", convenientized=modified)
    result.geometric_genus = geometric_genus(result)
    mirror = Counter({n - v: m for v, m in counts.items()})
    if mirror != counts:
        result.warnings.append("spectrum is not symmetric about n/2")
    if any(not (0 < v < n) for v in counts):
        result.warnings.append("spectral numbers outside (0, n)")
    return result
