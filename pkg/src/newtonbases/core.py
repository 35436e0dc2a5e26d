"""Exact multivariate polynomials over the rationals.

Exponent vectors are plain tuples of nonnegative ints.  A :class:`Polynomial`
maps exponent tuples to nonzero rationals; :class:`HPolynomial` carries an
extra exponent for the homogenizing variable ``t``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from gmpy2 import mpq

Rational = type(mpq(0))


class BudgetExceeded(RuntimeError):
    """Raised when a computation exceeds its configured work limit."""
Monomial = tuple


def QQ(value, den=None) -> Rational:
    """Coerce ``value`` (int, str, Fraction, mpq) to an exact rational."""
    if den is not None:
        return mpq(QQ(value), QQ(den))
    if isinstance(value, Rational):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coefficients")
    return mpq(value)


def render_rational(q) -> str:
    q = QQ(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# -- exponent vectors ------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; the caller guarantees ``b`` divides ``a``."""
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """All exponent vectors of length ``n`` and total degree ``d`` (lex-descending)."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def monomials_up_to(n: int, d: int) -> Iterator[Monomial]:
    for k in range(d + 1):
        yield from monomials_of_degree(n, k)


def _check_exponents(m, n: int) -> Monomial:
    m = tuple(int(e) for e in m)
    if len(m) != n:
        raise ValueError(f"exponent vector {m} has length {len(m)}, expected {n}")
    if any(e < 0 for e in m):
        raise ValueError(f"negative exponent in {m}")
    return m


class Polynomial:
    """Sparse polynomial in ``nvars`` variables with rational coefficients.

    Instances are treated as immutable; every arithmetic operation returns a
    fresh object and never stores a zero coefficient.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable | None = None):
        self.nvars = int(nvars)
        self._hash = None
        clean: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for m, c in items:
                m = _check_exponents(m, self.nvars)
                c = QQ(c)
                total = clean.get(m, 0) + c
                if total:
                    clean[m] = total
                else:
                    clean.pop(m, None)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # trusted constructor: keys valid, values nonzero mpq
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> "Polynomial":
        c = QQ(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, m: Sequence[int], c=1) -> "Polynomial":
        m = tuple(m)
        c = QQ(c)
        return cls._raw(len(m), {m: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        m = [0] * nvars
        m[i] = 1
        return cls._raw(nvars, {tuple(m): mpq(1)})

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Rational]]:
        return iter(self.terms.items())

    def support(self) -> list[Monomial]:
        return list(self.terms)

    def coefficient(self, m: Sequence[int]) -> Rational:
        return self.terms.get(tuple(m), mpq(0))

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, Rational)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Polynomial.constant(self.nvars, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        c = QQ(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: c * v for m, v in self.terms.items()})

    def mul_term(self, m: Monomial, c=1) -> "Polynomial":
        """Multiply by the term ``c * x^m``."""
        c = QQ(c)
        if not c:
            return Polynomial.zero(self.nvars)
        m = tuple(m)
        return Polynomial._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(k, m)): c * v for k, v in self.terms.items()})

    def derivative(self, i: int) -> "Polynomial":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                k = list(m)
                k[i] -= 1
                out[tuple(k)] = c * m[i]
        return Polynomial._raw(self.nvars, out)

    def truncate(self, keep) -> "Polynomial":
        """Keep only the terms whose exponent satisfies ``keep``."""
        return Polynomial._raw(self.nvars, {m: c for m, c in self.terms.items() if keep(m)})

    def make_monic(self, lead: Monomial) -> "Polynomial":
        c = self.terms[lead]
        return self if c == 1 else self.scale(1 / c)

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Rename variable ``i`` to ``perm[i]``."""
        out = {}
        for m, c in self.terms.items():
            k = [0] * self.nvars
            for i, e in enumerate(m):
                k[perm[i]] = e
            out[tuple(k)] = c
        return Polynomial._raw(self.nvars, out)

    # -- display ----------------------------------------------------------

    def render(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = default_names(self.nvars)
        if not self.terms:
            return "0"
        # deterministic: descending total degree, then descending lex
        ordered = sorted(self.terms.items(), key=lambda mc: (-sum(mc[0]), tuple(-e for e in mc[0])))
        pieces = []
        for m, c in ordered:
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = render_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{render_rational(a)}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"

    __str__ = render


def default_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


class HPolynomial:
    """Polynomial in ``K[t, x_1..x_n]``; keys are ``(t_exponent, x_exponents)``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | Iterable | None = None):
        self.nvars = int(nvars)
        clean: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (t, m), c in items:
                key = (int(t), _check_exponents(m, self.nvars))
                if key[0] < 0:
                    raise ValueError("negative t exponent")
                s = clean.get(key, 0) + QQ(c)
                if s:
                    clean[key] = s
                else:
                    clean.pop(key, None)
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, HPolynomial) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def degrees(self) -> set[int]:
        return {t + sum(m) for t, m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def t_valuation(self) -> int:
        return min((t for t, _ in self.terms), default=0)

    def __add__(self, other: "HPolynomial") -> "HPolynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        return HPolynomial(self.nvars, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "HPolynomial":
        return HPolynomial(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "HPolynomial") -> "HPolynomial":
        return self + (-other)

    def __mul__(self, other: "HPolynomial") -> "HPolynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out: list = []
        for (t1, m1), c1 in self.terms.items():
            for (t2, m2), c2 in other.terms.items():
                out.append(((t1 + t2, mono_mul(m1, m2)), c1 * c2))
        return HPolynomial(self.nvars, out)

    def mul_term(self, t: int, m: Monomial, c=1) -> "HPolynomial":
        c = QQ(c)
        return HPolynomial(self.nvars, {(t + a, mono_mul(b, m)): c * v
                                        for (a, b), v in self.terms.items()})

    def __repr__(self) -> str:
        names = default_names(self.nvars)
        parts = []
        for (t, m), c in sorted(self.terms.items(), reverse=True):
            mono = Polynomial.monomial(m).render(names)
            tpart = "" if t == 0 else ("t" if t == 1 else f"t^{t}")
            if tpart and mono == "1":
                mono = tpart
            elif tpart:
                mono = f"{tpart}*{mono}"
            parts.append(f"{render_rational(c)}*{mono}")
        return "HPolynomial(" + (" + ".join(parts) or "0") + ")"


def homogenize(f: Polynomial) -> HPolynomial:
    """``f^h = sum c_a t^(deg f - |a|) x^a``."""
    if f.is_zero():
        raise ValueError("cannot homogenize the zero polynomial")
    d = f.degree()
    return HPolynomial(f.nvars, {(d - sum(m), m): c for m, c in f.terms.items()})


def dehomogenize(F: HPolynomial) -> Polynomial:
    """Set ``t = 1`` and combine like terms."""
    out: dict = {}
    for (_, m), c in F.terms.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return Polynomial._raw(F.nvars, out)


def strip_t_powers(F: HPolynomial) -> HPolynomial:
    """Divide by the largest power of ``t`` dividing ``F``."""
    if F.is_zero():
        raise ValueError("cannot strip t from the zero polynomial")
    v = F.t_valuation()
    if v == 0:
        return F
    return HPolynomial(F.nvars, {(t - v, m): c for (t, m), c in F.terms.items()})
