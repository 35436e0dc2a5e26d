"""Monomial orderings: classical semigroup orderings and Newton orderings.

Every ordering object exposes ``key(m)``; comparing keys with ``<`` compares
monomials, a larger key meaning a larger monomial.  Keys are cached per
ordering instance, so repeated comparisons inside the engine are cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import lcm
from typing import NamedTuple, Sequence

from .core import QQ, Polynomial, Rational, render_rational

GLOBAL_KINDS = ("lex", "dp", "wp")
LOCAL_KINDS = ("ds", "ws")


class OrderingError(ValueError):
    pass


@dataclass(frozen=True)
class LinearForm:
    """A nonzero linear form with rational coefficients."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(QQ(c) for c in self.coefficients)
        if not any(coeffs):
            raise OrderingError("linear form must not be identically zero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def __call__(self, point: Sequence) -> Rational:
        return sum((c * QQ(p) for c, p in zip(self.coefficients, point)), QQ(0))

    def render(self) -> str:
        return "[" + ",".join(render_rational(c) for c in self.coefficients) + "]"


class LeadTerm(NamedTuple):
    monomial: tuple
    coefficient: Rational


class _KeyedOrdering:
    """Shared comparison helpers built on a cached ``_compute_key``."""

    nvars: int

    def _init_cache(self):
        object.__setattr__(self, "_cache", {})
        object.__setattr__(self, "_neg_cache", {})

    def key(self, m: tuple):
        cache = self._cache
        k = cache.get(m)
        if k is None:
            k = self._compute_key(m)
            cache[m] = k
        return k

    def neg_key(self, m: tuple):
        """Componentwise negated key, for min-heaps that pop the largest monomial."""
        cache = self._neg_cache
        k = cache.get(m)
        if k is None:
            k = cache[m] = tuple(-x for x in self.key(m))
        return k

    def local_grading(self):
        """Integer weights ``c`` with ``c . a`` larger meaning smaller monomial first.

        Only defined for local semigroup orderings whose primary comparison is
        by a positive grading (negative degree or weighted degree orderings);
        ``None`` otherwise.
        """
        return None

    def compare(self, a: tuple, b: tuple) -> int:
        """Return -1 if ``a`` is smaller, 1 if larger.  Equal inputs are an error."""
        if a == b:
            raise OrderingError("compare called on identical monomials")
        return -1 if self.key(a) < self.key(b) else 1

    def lead(self, f: Polynomial) -> LeadTerm:
        if f.is_zero():
            raise OrderingError("the zero polynomial has no lead term")
        m = max(f.terms, key=self.key)
        return LeadTerm(m, f.terms[m])

    def lead_monomial(self, f: Polynomial) -> tuple:
        return max(f.terms, key=self.key)

    def sorted_desc(self, monomials) -> list:
        return sorted(monomials, key=self.key, reverse=True)

    def key_h(self, tm: tuple):
        t, m = tm
        return (t + sum(m), self.key(m))

    def compare_h(self, a: tuple, b: tuple) -> int:
        if a == b:
            raise OrderingError("compare_h called on identical t-monomials")
        return -1 if self.key_h(a) < self.key_h(b) else 1

    def is_local(self) -> bool:
        return classify(self).is_local


@dataclass(frozen=True, eq=False)
class SemigroupOrdering(_KeyedOrdering):
    """Orderings compatible with multiplication.

    ``kind`` is one of ``lex``, ``dp`` (degrevlex), ``ds`` (negative
    degrevlex, local), or ``weighted``.  A weighted ordering compares
    ``weights . alpha`` first and breaks ties with ``tiebreak``; negative
    weights give a local ordering.
    """

    kind: str
    nvars: int
    weights: tuple | None = None
    tiebreak: "SemigroupOrdering | None" = None
    _cache: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("lex", "dp", "ds", "weighted"):
            raise OrderingError(f"unknown semigroup ordering kind {self.kind!r}")
        if self.kind == "weighted":
            if self.weights is None or len(self.weights) != self.nvars:
                raise OrderingError("weighted ordering needs one weight per variable")
            object.__setattr__(self, "weights", tuple(QQ(w) for w in self.weights))
            if self.tiebreak is None:
                tb = "ds" if all(w <= 0 for w in self.weights) else "dp"
                object.__setattr__(self, "tiebreak", SemigroupOrdering(tb, self.nvars))
            elif self.tiebreak.nvars != self.nvars:
                raise OrderingError("tie-break ordering has the wrong number of variables")
        self._init_cache()

    is_semigroup = True

    def local_grading(self):
        if self.kind == "ds":
            return (1,) * self.nvars
        if self.kind == "weighted" and all(w < 0 for w in self.weights):
            den = lcm(*(w.denominator for w in self.weights))
            return tuple(int(-w * den) for w in self.weights)
        return None

    def _compute_key(self, m):
        if self.kind == "lex":
            return m
        if self.kind == "dp":
            return (sum(m),) + tuple(-e for e in reversed(m))
        if self.kind == "ds":
            return (-sum(m),) + tuple(-e for e in reversed(m))
        return (sum(w * e for w, e in zip(self.weights, m)),) + self.tiebreak.key(m)

    def __eq__(self, other):
        return (isinstance(other, SemigroupOrdering) and self.kind == other.kind
                and self.nvars == other.nvars and self.weights == other.weights
                and self.tiebreak == other.tiebreak)

    def __hash__(self):
        return hash((self.kind, self.nvars, self.weights, self.tiebreak))

    def render(self) -> str:
        if self.kind != "weighted":
            return self.kind
        w = ",".join(render_rational(x) for x in self.weights)
        return f"weighted({w};tie={self.tiebreak.render()})"

    def __repr__(self):
        return f"SemigroupOrdering({self.render()}, nvars={self.nvars})"


def weighted_local(weights: Sequence, nvars: int | None = None) -> SemigroupOrdering:
    """Local weighted degree ordering for positive ``weights`` (Singular's ``ws``)."""
    n = len(weights) if nvars is None else nvars
    return SemigroupOrdering("weighted", n, tuple(-QQ(w) for w in weights),
                             SemigroupOrdering("ds", n))


def weighted_global(weights: Sequence, nvars: int | None = None) -> SemigroupOrdering:
    n = len(weights) if nvars is None else nvars
    return SemigroupOrdering("weighted", n, tuple(QQ(w) for w in weights),
                             SemigroupOrdering("dp", n))


@dataclass(frozen=True, eq=False)
class NewtonOrdering(_KeyedOrdering):
    """Newton ordering attached to a finite set of linear forms and a shift.

    The weight of ``x^a`` is ``min_l l(a + shift)``; a larger weight means a
    smaller monomial, and equal weights are decided by ``tiebreak``.
    """

    forms: tuple
    shift: tuple
    tiebreak: SemigroupOrdering | None = None
    _cache: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        forms = []
        for l in self.forms:
            l = l if isinstance(l, LinearForm) else LinearForm(tuple(l))
            if l not in forms:
                forms.append(l)
        if not forms:
            raise OrderingError("a Newton ordering needs at least one linear form")
        n = forms[0].nvars
        if any(l.nvars != n for l in forms):
            raise OrderingError("linear forms have inconsistent lengths")
        shift = tuple(QQ(s) for s in self.shift)
        if len(shift) != n:
            raise OrderingError("shift has the wrong length")
        if any(s < 0 for s in shift):
            raise OrderingError("shift must be componentwise nonnegative")
        object.__setattr__(self, "forms", tuple(forms))
        object.__setattr__(self, "shift", shift)
        if self.tiebreak is None:
            nonneg = all(c >= 0 for l in forms for c in l.coefficients)
            object.__setattr__(self, "tiebreak", SemigroupOrdering("ds" if nonneg else "dp", n))
        elif self.tiebreak.nvars != n:
            raise OrderingError("tie-break ordering has the wrong number of variables")
        # Integer scaling: scale * l(a + shift) = int_coeffs . a + int_const.
        scale = reduce(lcm, [c.denominator for l in forms for c in l.coefficients], 1)
        scale = reduce(lcm, [(l(shift) * scale).denominator for l in forms], scale)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "int_forms", tuple(
            tuple(int(c * scale) for c in l.coefficients) for l in forms))
        object.__setattr__(self, "int_shift", tuple(int(l(shift) * scale) for l in forms))
        self._init_cache()

    @property
    def nvars(self) -> int:
        return len(self.shift)

    @property
    def is_semigroup(self) -> bool:
        # a single form shifts every weight by the same constant
        return len(self.forms) == 1

    def local_grading(self):
        if self.is_semigroup and all(c > 0 for c in self.int_forms[0]):
            return self.int_forms[0]
        return None

    def form_values(self, m: tuple) -> tuple:
        """Scaled values ``scale * l(m + shift)`` for every form, as ints."""
        return tuple(sum(c * e for c, e in zip(cs, m)) + k
                     for cs, k in zip(self.int_forms, self.int_shift))

    def scaled_weight(self, m: tuple) -> int:
        return -self.key(m)[0]

    def weight(self, m: tuple) -> Rational:
        return QQ(self.scaled_weight(tuple(m)), self.scale)

    def minimizers(self, m: tuple) -> list[int]:
        """Indices of the forms attaining the weight at ``m``."""
        vals = self.form_values(m)
        w = min(vals)
        return [i for i, v in enumerate(vals) if v == w]

    def _compute_key(self, m):
        return (-min(self.form_values(m)),) + self.tiebreak.key(m)

    def __eq__(self, other):
        return (isinstance(other, NewtonOrdering) and set(self.forms) == set(other.forms)
                and self.shift == other.shift and self.tiebreak == other.tiebreak)

    def __hash__(self):
        return hash((frozenset(self.forms), self.shift, self.tiebreak))

    def render(self) -> str:
        forms = ",".join(l.render() for l in self.forms)
        delta = ",".join(render_rational(s) for s in self.shift)
        tie = self.tiebreak.render()
        return f"newton:forms=[{forms}];delta=[{delta}];tie={tie}"

    def __repr__(self):
        return f"NewtonOrdering({self.render()})"


@dataclass(frozen=True)
class OrderingClass:
    is_global: bool
    is_local: bool
    is_mixed: bool
    normality_certificate: str

    @property
    def certified(self) -> bool:
        return self.normality_certificate != "unknown"


def _sign_class(o) -> tuple[bool, bool, bool]:
    n = o.nvars
    one = (0,) * n
    signs = []
    for i in range(n):
        xi = tuple(1 if j == i else 0 for j in range(n))
        signs.append(o.compare(xi, one))
    is_global = all(s > 0 for s in signs)
    is_local = all(s < 0 for s in signs)
    return is_global, is_local, not (is_global or is_local)


def _normality_certificate(o) -> str:
    if o.is_semigroup:
        return "semigroup"
    coeffs = [c for l in o.forms for c in l.coefficients]
    tie_local = o.tiebreak.is_local()
    tie_global = not tie_local and classify(o.tiebreak).is_global
    # Ties between equal weights fall back to the tie-break; a zero
    # coefficient can leave a weight unchanged, so the tie-break must then
    # point the same way as the forms.
    if all(c > 0 for c in coeffs) or (all(c >= 0 for c in coeffs) and tie_local):
        return "all-forms-nonnegative"
    if all(c < 0 for c in coeffs) or (all(c <= 0 for c in coeffs) and tie_global):
        return "all-forms-nonpositive"
    if not any(o.shift):
        return "zero-shift"
    return "unknown"


def classify(o) -> OrderingClass:
    g, l, mixed = _sign_class(o)
    return OrderingClass(g, l, mixed, _normality_certificate(o))


def require_certified(o) -> OrderingClass:
    c = classify(o)
    if not c.certified:
        raise OrderingError(
            f"no normality certificate for {o.render()}; refusing to run the engine")
    return c


# -- functional interface ---------------------------------------------------

def weight(o: NewtonOrdering, m: Sequence[int]) -> Rational:
    return o.weight(tuple(m))


def weight_poly(o: NewtonOrdering, f: Polynomial) -> Rational:
    if f.is_zero():
        raise OrderingError("weight of the zero polynomial is undefined")
    return min(o.weight(m) for m in f.terms)


def compare(o, a: Sequence[int], b: Sequence[int]) -> int:
    return o.compare(tuple(a), tuple(b))


def lead(o, f: Polynomial) -> LeadTerm:
    return o.lead(f)


def compare_h(o, a: tuple, b: tuple) -> int:
    return o.compare_h((a[0], tuple(a[1])), (b[0], tuple(b[1])))
