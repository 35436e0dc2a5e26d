import pytest

from newtonbases.core import QQ, Polynomial
from newtonbases.orderings import (LinearForm, NewtonOrdering, OrderingError, SemigroupOrdering,
                                   classify, compare, compare_h, lead, weight, weight_poly,
                                   weighted_global, weighted_local)
from newtonbases.parser import parse_polynomial


def P(text):
    return parse_polynomial(text, ["x", "y"])


def newton(forms, shift=(0, 0), tie=None):
    return NewtonOrdering(tuple(LinearForm(tuple(QQ(c) for c in f)) for f in forms), shift, tie)


CONE_EXAMPLE = newton([(3, 3), (2, 6), (6, 2)], (1, 1))
TWO_FORMS = newton([(1, 2), (2, 1)])


def test_weight_examples():
    assert weight(CONE_EXAMPLE, (1, 1)) == 12
    assert weight(TWO_FORMS, (0, 0)) == 0
    assert weight(TWO_FORMS, (2, 1)) == 4


def test_weight_poly():
    assert weight_poly(TWO_FORMS, P("x^3 + x^2*y")) == 3
    assert weight_poly(TWO_FORMS, P("5")) == 0
    assert weight_poly(TWO_FORMS, P("x*y^2")) == weight(TWO_FORMS, (1, 2))
    with pytest.raises(ValueError):
        weight_poly(TWO_FORMS, Polynomial.zero(2))


def test_compare_examples():
    assert compare(TWO_FORMS, (3, 0), (2, 1)) == 1
    qh = newton([(QQ(1, 2), QQ(1, 3))])
    assert compare(qh, (3, 0), (0, 2)) == -1
    # equal weights fall through to the tie-break
    o = newton([(1, 1)], tie=SemigroupOrdering("ds", 2))
    assert compare(o, (1, 0), (0, 1)) == SemigroupOrdering("ds", 2).compare((1, 0), (0, 1))
    with pytest.raises(ValueError):
        compare(o, (1, 1), (1, 1))


def test_lead_is_not_multiplicative():
    f = P("x + y")
    assert lead(TWO_FORMS, f * P("x^2")).monomial == (3, 0)
    assert lead(TWO_FORMS, f * P("y^2")).monomial == (0, 3)
    assert lead(TWO_FORMS, P("7*x*y")) == ((1, 1), 7)


def test_compare_h():
    o = CONE_EXAMPLE
    assert compare_h(o, (0, (1, 0)), (2, (0, 0))) == -1
    assert compare_h(o, (1, (1, 0)), (0, (2, 0))) == compare(o, (1, 0), (2, 0))
    assert compare_h(TWO_FORMS, (0, (3, 0)), (0, (2, 1))) == 1
    with pytest.raises(ValueError):
        compare_h(o, (1, (1, 0)), (1, (1, 0)))


def test_classify_examples():
    c = classify(CONE_EXAMPLE)
    assert c.is_local and c.normality_certificate == "all-forms-nonnegative"
    mixed = newton([(1, -1), (-1, 2)])
    assert classify(mixed).normality_certificate == "zero-shift"
    degree = newton([(-1, -1)])
    c = classify(degree)
    assert c.is_global and not c.is_local and not c.is_mixed


def test_classify_uncertified():
    o = newton([(1, -1), (-1, 2)], (1, 1))
    assert classify(o).normality_certificate == "unknown"
    assert not classify(o).certified


def test_classify_mixed_ordering():
    o = weighted_global((1, 1))
    assert classify(o).is_global
    assert classify(SemigroupOrdering("ds", 2)).is_local
    assert classify(newton([(1, -1)])).is_mixed


def test_invalid_orderings():
    with pytest.raises(OrderingError):
        newton([])
    with pytest.raises(OrderingError):
        newton([(1, 1)], (-1, 0))
    with pytest.raises(ValueError):
        LinearForm((QQ(0), QQ(0)))


def test_single_form_matches_weighted_semigroup():
    o = newton([(2, 3)])
    s = weighted_local((2, 3))
    mons = [(a, b) for a in range(5) for b in range(5)]
    for a in mons:
        for b in mons:
            if a != b:
                assert compare(o, a, b) == s.compare(a, b)


def test_default_tiebreaks():
    assert CONE_EXAMPLE.tiebreak == SemigroupOrdering("ds", 2)
    assert newton([(1, -1)]).tiebreak == SemigroupOrdering("dp", 2)
